from django.core.exceptions import ValidationError

from cli.base import NEGATIVE_VERDICT, CalculatorCommand, CommandResult
from exclusion.classify import classify_multiset_lambda
from exclusion.models import LengthVerdict
from lengths.expansion import multiset_feasible, sqr_expand


class Command(CalculatorCommand):
    help = (
        "¿Existe un multiconjunto q^r-divisible de n puntos? Con --lambda se "
        "limita la multiplicidad de los puntos (1 = conjuntos)."
    )

    def add_calculator_arguments(self, parser):
        parser.add_argument("n", type=int)
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--r", type=int, required=True)
        parser.add_argument("--lambda", dest="lam", type=int, default=None)

    def run(self, n, q, r, lam=None, **options):
        if lam is not None and lam < 1:
            raise ValidationError("λ debe ser >= 1.")

        if lam is None or lam >= q ** r:
            status = LengthVerdict.Status.REALIZABLE if multiset_feasible(n, q, r) else LengthVerdict.Status.EXCLUDED
            payload = {"n": n, "q": q, "r": r, "status": status.value,
                       "expansion": sqr_expand(n, q, r).to_dict()}
        else:
            if n < 1:
                raise ValidationError("n debe ser positivo.")
            entry = classify_multiset_lambda(q, r, lam, n)[n]
            status = LengthVerdict.Status(entry.status)
            payload = {"q": q, "r": r, "lambda": lam, **entry.to_dict()}

        text = f"n={n} q={q} r={r}: {status.value} ({status.label})"
        code = NEGATIVE_VERDICT if status == LengthVerdict.Status.EXCLUDED else 0
        return CommandResult(code, payload, text)
