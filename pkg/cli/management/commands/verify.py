from pathlib import Path

from django.core.exceptions import ValidationError

from cli.base import NEGATIVE_VERDICT, CalculatorCommand, CommandResult, parse_counts
from geometry.fixtures import fixture_ids, parse_matrix, verify_fixture, verify_matrix


class Command(CalculatorCommand):
    help = (
        "Verifica una matriz generadora publicada (por su id) o un fichero "
        "'q k n' + filas; con fichero, las propiedades se indican por opción."
    )

    def add_calculator_arguments(self, parser):
        parser.add_argument("target", help="Id de fixture o ruta de fichero.")
        parser.add_argument("--delta", type=int, default=None)
        parser.add_argument("--projective", action="store_true")
        parser.add_argument("--weights", default=None, help="'peso:A, ...' esperados.")

    def run(self, target, delta=None, projective=False, weights=None, **options):
        if target in fixture_ids():
            report = verify_fixture(target)
        else:
            path = Path(target)
            if not path.is_file():
                raise ValidationError(
                    f"'{target}' no es un fixture ({', '.join(fixture_ids())}) ni un fichero."
                )
            claims = {}
            if delta is not None:
                claims["delta"] = delta
            if projective:
                claims["projective"] = True
            if weights:
                claims["weights"] = parse_counts(weights)
            report = verify_matrix(parse_matrix(path.read_text(encoding="utf-8")), claims, path.name)

        lines = [f"{report['id']}: [{report['n']},{report['k']}]_{report['q']}"]
        lines += [f"  {name:<16} {'ok' if ok else 'FALLA'}" for name, ok in report["checks"].items()]
        if "weights" in report:
            lines.append("  pesos: " + " ".join(f"{w}:{a}" for w, a in report["weights"].items()))
        return CommandResult(0 if report["ok"] else NEGATIVE_VERDICT, {"report": report}, "\n".join(lines))
