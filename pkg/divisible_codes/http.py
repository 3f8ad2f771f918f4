# divisible_codes/http.py
from django.core.exceptions import ValidationError
from django.http import JsonResponse
from django.views import View


def int_param(request, name, default=None):
    """
    Lee un parámetro entero de la query string.
    Lanza ValidationError si falta (sin valor por defecto) o no es entero.
    """
    raw = (request.GET.get(name) or "").strip()
    if not raw:
        if default is None:
            raise ValidationError(f"Falta el parámetro '{name}'.")
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"El parámetro '{name}' debe ser un entero (recibido '{raw}').")


class JsonCalculatorView(View):
    """
    Vista base de las calculadoras JSON.

    Las subclases implementan `compute(request)` y devuelven un dict;
    los errores de validación se devuelven como 400 con el mensaje.
    """
    http_method_names = ["get"]

    def compute(self, request):
        raise NotImplementedError

    def get(self, request, *args, **kwargs):
        try:
            payload = self.compute(request)
        except ValidationError as e:
            msg = "; ".join(e.messages) if hasattr(e, "messages") else "Parámetros inválidos."
            return JsonResponse({"ok": False, "error": msg}, status=400)
        return JsonResponse({"ok": True, **payload})
