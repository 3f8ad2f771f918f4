from cli.base import NEGATIVE_VERDICT, CalculatorCommand, CommandResult
from exclusion.classify import classify_multiset_lambda, compress, load_data, render_table, verify_table
from exclusion.models import ClassificationRun


class Command(CalculatorCommand):
    help = "Tabla Realizable / Excluida / Abierta de cardinalidades q^r-divisibles."

    def add_calculator_arguments(self, parser):
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--r", type=int, required=True)
        parser.add_argument("--max-n", dest="max_n", type=int, required=True)
        parser.add_argument("--lambda", dest="lam", type=int, default=1)
        parser.add_argument("--config", default=None,
                            help="JSON con ejemplos base o exclusiones esporádicas adicionales.")
        parser.add_argument("--no-lp", dest="use_lp", action="store_false",
                            help="Sin la comprobación por programación lineal.")
        parser.add_argument("--store", action="store_true", help="Guarda la tabla en la base de datos.")
        parser.add_argument("--verify", action="store_true",
                            help="Recomprueba cada certificado de exclusión.")

    def run(self, q, r, max_n, lam=1, config=None, use_lp=True, store=False, verify=False, **options):
        data = load_data(config)
        table = classify_multiset_lambda(q, r, lam, max_n, data=data, use_lp=use_lp)
        payload = {"table": table.to_dict()}
        lines = [render_table(table)]
        status = 0

        if verify:
            failed = verify_table(table, data)
            payload["unverified"] = failed
            lines.append(f"  Certificados sin verificar: {compress(failed)}")
            if failed:
                status = NEGATIVE_VERDICT
        if store:
            run = ClassificationRun.store(table, used_lp=use_lp, notes=config or "")
            payload["run_id"] = run.pk
            lines.append(f"  Guardada como clasificación #{run.pk}")

        return CommandResult(status, payload, "\n".join(lines))
