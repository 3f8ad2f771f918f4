# applications/packing.py
"""
Empaquetamientos y recubrimientos de puntos por k-subespacios con
multiplicidad λ, y el paso de Johnson afinado con el redondeo divisible.
"""
from django.core.exceptions import ValidationError

from lengths.expansion import ceil_qr, floor_qr
from qarith.arithmetic import bracket


def _check(v, k, lam):
    if not 1 <= k <= v:
        raise ValidationError(f"Se requiere 1 <= k <= v (k={k}, v={v}).")
    if lam < 0:
        raise ValidationError("λ debe ser no negativo.")


def pack_bound(q, v, k, lam):
    """Máximo de k-espacios con cada punto cubierto a lo sumo λ veces."""
    _check(v, k, lam)
    return floor_qr(lam * bracket(v, q), bracket(k, q), q, k - 1)


def cover_bound(q, v, k, lam):
    """Mínimo de k-espacios con cada punto cubierto al menos λ veces."""
    _check(v, k, lam)
    return ceil_qr(lam * bracket(v, q), bracket(k, q), q, k - 1)


def johnson_step(q, v, d, k, a_prev):
    """A_q(v,d;k) <= ⌊A_q(v-1,d;k-1)·[v]_q/[k]_q⌋_{q^{k-1}}."""
    _check(v, k, 0)
    if not 2 <= d <= 2 * k:
        raise ValidationError(f"La distancia d debe estar entre 2 y 2k = {2 * k}.")
    if a_prev < 0:
        raise ValidationError("A_q(v-1,d;k-1) debe ser no negativo.")
    return floor_qr(a_prev * bracket(v, q), bracket(k, q), q, k - 1)
