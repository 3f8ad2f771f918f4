# exclusion/criteria.py
"""
Criterios paramétricos de no existencia de multiconjuntos q^r-divisibles.

Cada criterio devuelve None (no se aplica) o un certificado: un dict
serializable con la clave "kind" y los valores que permiten rehacer la
comprobación con verify_certificate.
"""
import logging
from fractions import Fraction

from django.core.exceptions import ValidationError

from qarith.arithmetic import bracket


logger = logging.getLogger(__name__)


# ==========================
# Valores de hiperplano alcanzables
# ==========================

def attainable_hyperplane_values(n, q, r, projective=True, lower_oracle=None):
    """
    Valores m = M(H) compatibles con un multiconjunto q^r-divisible de
    cardinalidad n: m ≡ n (mod q^r), 0 <= m < n, y la restricción M|H
    (q^{r-1}-divisible) no está excluida según `lower_oracle(m)`.

    Sin oráculo solo se aplica la congruencia. m = 0 siempre es posible.
    """
    delta = q ** r
    values = []
    for m in range(n % delta, n, delta):
        if m == 0 or r <= 1 or lower_oracle is None or lower_oracle(m):
            values.append(m)
    return values


# ==========================
# Condición lineal
# ==========================

def _linear_parameters(n, delta, attainable):
    u = min(attainable) if attainable else n
    return u, (n - u) // delta


def linear_condition(n, q, delta, attainable):
    """
    Con u = mín(valores alcanzables) y n = u + mΔ, no existe el
    multiconjunto si u·(q-1) >= mΔ, salvo u = m = 0.
    """
    u, m = _linear_parameters(n, delta, attainable)
    if u == 0 and m == 0:
        return None
    if u * (q - 1) >= m * delta:
        return {"kind": "linear", "u": u, "m": m, "delta": delta, "attainable": list(attainable)}
    return None


def descent(n, q, r, attainable):
    """
    Algún hiperplano cumple M(H) < #M/q; si ningún valor alcanzable lo
    cumple, n queda excluido. El residuo son los valores que sobreviven.
    """
    if n == 0 or any(m * q < n for m in attainable):
        return None
    return {"kind": "descent", "level": r - 1, "residual": list(attainable)}


# ==========================
# Condición cuadrática (conjuntos)
# ==========================

def tau(u, delta, m, q):
    return (
        m * (m - q) * delta ** 2
        + (q * q * u - 2 * m * q * u + m * q + 2 * m * u - q * u - m) * delta
        + (q - 1) ** 2 * u * u
        + (q - 1) * u
    )


def quadratic_case(n, q, delta, m):
    """Caso ("a", "b" o "c") que excluye n con este m, o None."""
    u = n - m * delta
    value = tau(u, delta, m, q)
    if value < 0:
        return "a"
    if m >= 2 and value == 0:
        return "c"
    # q^e con e >= 2·log2(Δ) ya absorbe Δ²: basta ese exponente.
    exponent = min(n - 2, 2 * delta.bit_length())
    if (Fraction(value, delta ** 2) * Fraction(q) ** exponent).denominator != 1:
        return "b"
    return None


def quadratic_condition(n, q, delta):
    """Recorre 1 <= m <= ⌊(qΔ+2)/4⌋ y devuelve el primer m que excluye n."""
    for m in range(1, (q * delta + 2) // 4 + 1):
        case = quadratic_case(n, q, delta, m)
        if case:
            u = n - m * delta
            return {
                "kind": "quadratic", "u": u, "m": m, "delta": delta,
                "tau": tau(u, delta, m, q), "case": case,
            }
    return None


# ==========================
# Condición cúbica (conjuntos)
# ==========================

def cubic_window(q, delta):
    bound = Fraction(q * delta - 2, 4) + Fraction(1, delta) + Fraction(1, 4 * q * delta)
    return int(bound // 1)


def cubic_terms(n, q, delta, t):
    h = (
        delta ** 2 * q * q * t * t + delta ** 2 * q * q * t
        - 2 * delta * n * q * q * t - delta * n * q * q
        + 2 * delta * n * q * t + n * n * q * q
        + delta * n * q - 2 * n * n * q + n * n + n * q - n
    )
    g2 = h - (2 * delta * q * t + delta * q - 2 * n * q + 2 * n + q - 2)
    return h, g2


def cubic_condition(n, q, delta):
    for t in range(0, cubic_window(q, delta) + 1):
        if t * delta <= n <= (t + 1) * delta:
            continue
        h, g2 = cubic_terms(n, q, delta, t)
        if h >= 0 and g2 < 0:
            return {"kind": "cubic", "t": t, "h": h, "g2": g2, "delta": delta}
    return None


# ==========================
# Intervalos prohibidos (conjuntos)
# ==========================

def forbidden_intervals(q, r):
    """[(a, b, inicio, fin)] para a <= r-1 y b <= q-2."""
    s = bracket(r + 1, q)
    intervals = []
    for a in range(r):
        for b in range(q - 1):
            low = (a * (q - 1) + b) * s + a + 1
            high = (a * (q - 1) + b + 1) * s - 1
            if low <= high:
                intervals.append((a, b, low, high))
    return intervals


def interval_exclusion(n, q, r):
    if r == 1 and 2 <= n < q * q and n % (q + 1):
        return {"kind": "interval", "case": "ovoid"}
    for a, b, low, high in forbidden_intervals(q, r):
        if low <= n <= high:
            return {"kind": "interval", "a": a, "b": b, "low": low, "high": high}
    return None


# ==========================
# Verificación independiente
# ==========================

def verify_certificate(certificate, n, q, r, sporadic=()):
    """
    Rehace la comprobación del certificado para (n, q, r). Devuelve bool;
    un tipo desconocido lanza ValidationError.
    """
    kind = certificate.get("kind")
    delta = q ** r

    if kind == "linear":
        u, m = certificate["u"], certificate["m"]
        attainable = certificate.get("attainable", [])
        return (
            n == u + m * delta
            and u == (min(attainable) if attainable else n)
            and all((n - x) % delta == 0 and 0 <= x < n for x in attainable)
            and u * (q - 1) >= m * delta
            and not (u == 0 and m == 0)
        )
    if kind == "quadratic":
        u, m = certificate["u"], certificate["m"]
        return (
            n == u + m * delta
            and 1 <= m <= (q * delta + 2) // 4
            and certificate["tau"] == tau(u, delta, m, q)
            and quadratic_case(n, q, delta, m) == certificate["case"]
        )
    if kind == "cubic":
        t = certificate["t"]
        h, g2 = cubic_terms(n, q, delta, t)
        return (
            0 <= t <= cubic_window(q, delta)
            and not t * delta <= n <= (t + 1) * delta
            and (h, g2) == (certificate["h"], certificate["g2"])
            and h >= 0 > g2
        )
    if kind == "interval":
        return interval_exclusion(n, q, r) == certificate
    if kind == "descent":
        residual = certificate["residual"]
        return all((n - m) % delta == 0 and q * m >= n for m in residual)
    if kind == "lp":
        from lp.rounding import divisible_feasible

        return not divisible_feasible(q, delta, n, projective=True).feasible
    if kind == "sporadic":
        return any(
            (entry["q"], entry["r"], entry["n"]) == (q, r, n) and entry["key"] == certificate["key"]
            for entry in sporadic
        )
    if kind == "expansion":
        from lengths.expansion import multiset_feasible

        return not multiset_feasible(n, q, r)
    raise ValidationError(f"Tipo de certificado desconocido: {kind!r}.")
