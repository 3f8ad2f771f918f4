# applications/views.py
from django.core.exceptions import ValidationError

from divisible_codes.http import JsonCalculatorView, int_param

from .spreads import spread_bound_report
from .vsp import parse_vsp_type, vsp_feasible


class SpreadBoundView(JsonCalculatorView):
    """Cotas para A_q(v, 2t; t): /applications/spread-bound/?q=&v=&t="""

    def compute(self, request):
        q = int_param(request, "q")
        v = int_param(request, "v")
        t = int_param(request, "t")
        return {"report": spread_bound_report(q, v, t).to_dict()}


class VspCheckView(JsonCalculatorView):
    """
    Condiciones necesarias para un tipo de partición:
    /applications/vsp-check/?q=&v=&type=4^16 3^1 2^2 1^2
    """

    def compute(self, request):
        q = int_param(request, "q")
        v = int_param(request, "v")
        text = (request.GET.get("type") or "").strip()
        if not text:
            raise ValidationError("Falta el parámetro 'type'.")
        vsp = parse_vsp_type(text, q, v)
        return {"type": str(vsp), "verdict": vsp_feasible(vsp).to_dict()}
