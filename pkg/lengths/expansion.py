# lengths/expansion.py
"""
Cardinalidades posibles de multiconjuntos q^r-divisibles.

- sqr_expand: expansión S_q(r)-ádica n = Σ a_i · s_q(r,i).
- multiset_feasible: existe un multiconjunto q^r-divisible de n puntos
  si y solo si el coeficiente principal a_r es no negativo.
- floor_qr / ceil_qr: redondeo "divisible" usado en cotas de empaquetamiento.
- ward_decompose / delta_feasible: reducción de Δ general a Δ = q^r.
"""
import logging
import math
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from divisible_codes.conf import get_option
from qarith.arithmetic import bracket, ceil_div, prime_power, snumb, vp
from qarith.exceptions import BudgetExceeded, UnsupportedExponent


logger = logging.getLogger(__name__)

NEG_INF = -math.inf
POS_INF = math.inf

# Conjuntos conocidos para exponente fraccionario (q = 4): generadores del
# semigrupo de cardinalidades realizables.
FRACTIONAL_GENERATORS = {
    (4, 2): (2, 5),
    (4, 8): (8, 10, 21),
}


# ==========================
# Expansión S_q(r)-ádica
# ==========================

@dataclass(frozen=True)
class SqrExpansion:
    q: int
    r: int
    n: int
    digits: tuple
    leading: int

    def reconstruct(self):
        total = sum(a * snumb(self.r, i, self.q) for i, a in enumerate(self.digits))
        return total + self.leading * snumb(self.r, self.r, self.q)

    @property
    def feasible(self) -> bool:
        return self.n >= 0 and self.leading >= 0

    def to_dict(self):
        return {
            "q": self.q,
            "r": self.r,
            "n": str(self.n),
            "digits": list(self.digits),
            "leading": str(self.leading),
            "base": [str(snumb(self.r, i, self.q)) for i in range(self.r + 1)],
            "feasible": self.feasible,
        }


def sqr_expand(n, q, r):
    if r < 0:
        raise ValidationError(f"r debe ser no negativo (recibido {r}).")
    if q < 2:
        raise ValidationError(f"q debe ser al menos 2 (recibido {q}).")
    m = n
    digits = []
    for i in range(r):
        a = m % q
        digits.append(a)
        m = (m - a * bracket(r - i + 1, q)) // q
    return SqrExpansion(q=q, r=r, n=n, digits=tuple(digits), leading=m)


def multiset_feasible(n, q, r) -> bool:
    if n < 0:
        return False
    return sqr_expand(n, q, r).leading >= 0


def frobenius(q, r):
    """Mayor cardinalidad no realizable: r·q^{r+1} - [r+1]_q."""
    if r < 0:
        raise ValidationError(f"r debe ser no negativo (recibido {r}).")
    return r * q ** (r + 1) - bracket(r + 1, q)


def feasible_lengths(q, r, n_max):
    return [n for n in range(n_max + 1) if multiset_feasible(n, q, r)]


# ==========================
# Redondeo divisible
# ==========================

def _check_divisor(b):
    if b == 0:
        raise ValidationError("El divisor b no puede ser 0.")
    if b < 0:
        raise ValidationError("El divisor b debe ser positivo.")


def floor_qr(a, b, q, r):
    """
    Mayor n con a - n·b longitud realizable q^r-divisible.
    Se recorre desde ⌊a/b⌋ hacia abajo; por encima del número de Frobenius
    toda longitud es realizable, así que la búsqueda siempre termina.
    """
    _check_divisor(b)
    n = a // b
    while not multiset_feasible(a - n * b, q, r):
        n -= 1
    return n


def ceil_qr(a, b, q, r):
    """Menor n con n·b - a longitud realizable q^r-divisible."""
    _check_divisor(b)
    n = ceil_div(a, b)
    while not multiset_feasible(n * b - a, q, r):
        n += 1
    return n


def _excluded(oracle, n):
    if hasattr(oracle, "is_excluded"):
        return oracle.is_excluded(n)
    return bool(oracle(n))


def floor_qr_lambda(a, b, q, r, lam, oracle):
    """
    Como floor_qr pero para multiconjuntos de multiplicidad máxima λ.

    `oracle` responde is_excluded(n) (una tabla de clasificación o un
    callable). Solo se descartan las longitudes Excluded; las Open cuentan
    como posibles, así que el resultado es una cota superior válida.
    """
    _check_divisor(b)
    if lam < 1:
        raise ValidationError("λ debe ser al menos 1.")
    if lam >= q ** r:
        return floor_qr(a, b, q, r)

    limit = get_option("ROUNDING_SCAN_LIMIT")
    n = a // b
    for _ in range(limit):
        # sin cociente n >= 0 admisible
        if n < 0:
            return NEG_INF
        rest = a - n * b
        if not _excluded(oracle, rest):
            logger.debug("floor_qr_lambda(%s, %s): n=%s, resto %s", a, b, n, rest)
            return n
        n -= 1
    raise BudgetExceeded(f"floor_qr_lambda superó {limit} candidatos.")


def ceil_qr_lambda(a, b, q, r, lam, oracle):
    _check_divisor(b)
    if lam < 1:
        raise ValidationError("λ debe ser al menos 1.")
    if lam >= q ** r:
        return ceil_qr(a, b, q, r)

    limit = get_option("ROUNDING_SCAN_LIMIT")
    n = ceil_div(a, b)
    for _ in range(limit):
        if not _excluded(oracle, n * b - a):
            return n
        n += 1
    raise BudgetExceeded(f"ceil_qr_lambda superó {limit} candidatos.")


# ==========================
# Reducción de Δ general
# ==========================

@dataclass(frozen=True)
class DivisorDecomposition:
    delta: int
    q: int
    p: int
    m: int
    s: int
    e: int

    @property
    def integral(self) -> bool:
        return self.e % self.m == 0

    @property
    def r(self):
        """Exponente r = e/m (solo si es entero)."""
        return self.e // self.m if self.integral else None

    def require_integral(self):
        if not self.integral:
            raise UnsupportedExponent(
                f"Δ={self.delta} sobre F_{self.q} da exponente fraccionario "
                f"{self.e}/{self.m}; ese caso no está soportado."
            )
        return self.r


def ward_decompose(delta, q):
    if delta < 1:
        raise ValidationError(f"Δ debe ser al menos 1 (recibido {delta}).")
    p, m = prime_power(q)
    e = vp(delta, p)
    return DivisorDecomposition(delta=delta, q=q, p=p, m=m, s=delta // p ** e, e=e)


@dataclass(frozen=True)
class Unsupported:
    reason: str

    def __bool__(self):
        return False


def delta_feasible(n, delta, q):
    """
    Δ-divisible con Δ = s·p^e: s | n y n/s realizable como multiconjunto
    q^{e/m}-divisible. Con e/m fraccionario se devuelve Unsupported.
    """
    dec = ward_decompose(delta, q)
    if not dec.integral:
        return Unsupported(f"exponente fraccionario {dec.e}/{dec.m}")
    if n % dec.s:
        return False
    return multiset_feasible(n // dec.s, q, dec.r)


def known_fractional_lengths(q, delta, n_max):
    """Cierre aditivo de los generadores conocidos (solo q = 4, Δ ∈ {2, 8})."""
    try:
        generators = FRACTIONAL_GENERATORS[(q, delta)]
    except KeyError:
        raise UnsupportedExponent(f"No hay datos para Δ={delta} sobre F_{q}.")
    reachable = [False] * (n_max + 1)
    reachable[0] = True
    for n in range(1, n_max + 1):
        reachable[n] = any(g <= n and reachable[n - g] for g in generators)
    return [n for n, ok in enumerate(reachable) if ok]
