from django.core.exceptions import ValidationError

from cli.base import NEGATIVE_VERDICT, CalculatorCommand, CommandResult
from lp.rounding import divisible_feasible


class Command(CalculatorCommand):
    help = (
        "Factibilidad de las primeras t ecuaciones de MacWilliams para un "
        "código Δ-divisible de longitud n, con certificado si no hay solución."
    )

    def add_calculator_arguments(self, parser):
        parser.add_argument("action", choices=["feasible"])
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--delta", type=int, required=True)
        parser.add_argument("--n", type=int, required=True)
        dimension = parser.add_mutually_exclusive_group()
        dimension.add_argument("--k", type=int, default=None)
        dimension.add_argument("--dim-free", dest="dim_free", action="store_true",
                               help="Modo sin dimensión (opción por defecto sin --k).")
        parser.add_argument("--t", type=int, default=None, help="Número de ecuaciones (LP_DEPTH por defecto).")
        parser.add_argument("--projective", action="store_true")

    def run(self, action, q, delta, n, k=None, dim_free=False, t=None, projective=False, **options):
        if n < 1:
            raise ValidationError("n debe ser positivo.")
        result = divisible_feasible(q, delta, n, k=k, projective=projective, t=t)
        mode = f"k={k}" if k is not None else "sin dimensión"
        if result.feasible:
            text = f"n={n} Δ={delta} q={q} ({mode}): factible"
        else:
            text = f"n={n} Δ={delta} q={q} ({mode}): infactible [{result.kind}]"
        return CommandResult(0 if result.feasible else NEGATIVE_VERDICT, result.to_dict(), text)
