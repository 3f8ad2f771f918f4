# lengths/views.py
from django.core.exceptions import ValidationError

from divisible_codes.http import JsonCalculatorView, int_param

from .expansion import multiset_feasible, sqr_expand


class ExpandView(JsonCalculatorView):
    """Expansión S_q(r)-ádica de n: /lengths/expand/?n=&q=&r="""

    def compute(self, request):
        n = int_param(request, "n")
        q = int_param(request, "q")
        r = int_param(request, "r")
        return {"expansion": sqr_expand(n, q, r).to_dict()}


class FeasibleView(JsonCalculatorView):
    """
    Veredicto para una cardinalidad n.
      - sin lambda (o λ >= q^r): caso multiconjunto, decidido por la expansión
      - con lambda: tabla de clasificación con multiplicidad máxima λ
    """

    def compute(self, request):
        from exclusion.classify import classify_multiset_lambda
        from exclusion.models import LengthVerdict

        n = int_param(request, "n")
        q = int_param(request, "q")
        r = int_param(request, "r")
        lam = int_param(request, "lambda", default=0)
        if lam < 0:
            raise ValidationError("λ debe ser positivo.")

        if lam == 0 or lam >= q ** r:
            ok = multiset_feasible(n, q, r)
            status = LengthVerdict.Status.REALIZABLE if ok else LengthVerdict.Status.EXCLUDED
            return {
                "n": n,
                "status": status.value,
                "expansion": sqr_expand(n, q, r).to_dict(),
            }

        table = classify_multiset_lambda(q, r, lam, n)
        return {"n": n, "lambda": lam, **table[n].to_dict()}
