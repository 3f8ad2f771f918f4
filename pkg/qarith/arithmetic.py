# qarith/arithmetic.py
"""
Núcleo aritmético exacto: q-análogos, números base s_q(r,i),
polinomios de Krawtchouk y valuaciones p-ádicas.

Todo se calcula con enteros de Python (precisión arbitraria) y
fractions.Fraction; nunca con coma flotante.
"""
import math
from functools import lru_cache

from django.core.exceptions import ValidationError
from sympy import factorint

INFINITY = math.inf


def _check_q(q):
    if q < 2:
        raise ValidationError(f"q debe ser al menos 2 (recibido {q}).")


# ---------- q-análogos ----------

def bracket(v, q):
    """[v]_q = (q^v - 1)/(q - 1) = 1 + q + ... + q^{v-1}."""
    _check_q(q)
    if v < 0:
        raise ValidationError(f"[v]_q requiere v >= 0 (recibido {v}).")
    return (q ** v - 1) // (q - 1)


@lru_cache(maxsize=4096)
def qbin(v, k, q):
    """
    Coeficiente binomial gaussiano [v sobre k]_q.

    Se evalúa como producto exacto paso a paso; cada paso intermedio
    es a su vez un coeficiente gaussiano, por lo que la división es exacta.
    Fuera de 0 <= k <= v vale 0.
    """
    _check_q(q)
    if v < 0 or k < 0 or k > v:
        return 0
    k = min(k, v - k)
    result = 1
    for i in range(k):
        result = result * (q ** (v - i) - 1) // (q ** (i + 1) - 1)
    return result


def snumb(r, i, q):
    """s_q(r,i) = q^i + q^{i+1} + ... + q^r."""
    _check_q(q)
    if not 0 <= i <= r:
        raise ValidationError(f"s_q(r,i) requiere 0 <= i <= r (recibido r={r}, i={i}).")
    return q ** i * bracket(r - i + 1, q)


def krawtchouk(i, j, n, q):
    """
    K_i(j) = Σ_s (-1)^s (q-1)^{i-s} C(j,s) C(n-j,i-s).
    """
    _check_q(q)
    if not 0 <= i <= n:
        raise ValidationError(f"K_i(j) requiere 0 <= i <= n (recibido i={i}, n={n}).")
    total = 0
    for s in range(i + 1):
        total += (-1) ** s * (q - 1) ** (i - s) * math.comb(j, s) * math.comb(n - j, i - s)
    return total


# ---------- Teoría de números ----------

def vp(x, p):
    """Valuación p-ádica; vp(0) = ∞."""
    if x == 0:
        return INFINITY
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def prime_power(q):
    """
    Descompone q = p^m. Lanza ValidationError si q no es potencia de primo.
    """
    if q < 2:
        raise ValidationError(f"{q} no es una potencia de primo.")
    factors = factorint(q)
    if len(factors) != 1:
        raise ValidationError(f"{q} no es una potencia de primo.")
    ((p, m),) = factors.items()
    return int(p), int(m)


def is_power_of(x, q):
    """True si x = q^j para algún j >= 0."""
    if x < 1:
        return False
    while x % q == 0:
        x //= q
    return x == 1


def isqrt_floor(n):
    if n < 0:
        raise ValidationError("Raíz cuadrada de un número negativo.")
    return math.isqrt(n)


def isqrt_ceil(n):
    root = isqrt_floor(n)
    return root if root * root == n else root + 1


def ceil_div(a, b):
    return -((-a) // b)
