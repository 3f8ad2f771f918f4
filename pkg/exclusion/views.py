# exclusion/views.py
from django.core.exceptions import ValidationError

from divisible_codes.http import JsonCalculatorView, int_param

from .classify import classify_multiset_lambda, render_table


class ClassifyView(JsonCalculatorView):
    """
    Tabla de clasificación: /exclusion/classify/?q=&r=&n_max=[&lambda=][&lp=0]
    Devuelve el mapa n -> {status, witness|certificate} y el texto comprimido.
    """

    MAX_N = 2000

    def compute(self, request):
        q = int_param(request, "q")
        r = int_param(request, "r")
        n_max = int_param(request, "n_max")
        lam = int_param(request, "lambda", default=1)
        use_lp = int_param(request, "lp", default=1) != 0
        if not 1 <= n_max <= self.MAX_N:
            raise ValidationError(f"n_max debe estar entre 1 y {self.MAX_N}.")

        table = classify_multiset_lambda(q, r, lam, n_max, use_lp=use_lp)
        return {"table": table.to_dict(), "text": render_table(table)}
