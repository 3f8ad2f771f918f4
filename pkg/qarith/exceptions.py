# qarith/exceptions.py
from django.core.exceptions import ValidationError


class BudgetExceeded(ValidationError):
    """
    Se lanza cuando una enumeración por fuerza bruta (palabras código,
    hiperplanos, soluciones enteras) supera el presupuesto configurado.
    """

    def __init__(self, message, code="budget_exceeded", params=None):
        super().__init__(message, code=code, params=params)


class UnsupportedExponent(ValidationError):
    """Δ = s·p^e con e no múltiplo de m (exponente fraccionario r = e/m)."""

    def __init__(self, message, code="unsupported_exponent", params=None):
        super().__init__(message, code=code, params=params)


class InexactDivision(ValidationError):
    """La transformada de MacWilliams no es entera: la distribución no es válida."""

    def __init__(self, message, code="inexact_division", params=None):
        super().__init__(message, code=code, params=params)
