# applications/conditions.py
"""
Condiciones sobre la dimensión y la distribución de pesos de códigos
divisibles.

- ward_dimension_bound: cota de dimensión cuando los pesos no nulos están
  en m múltiplos consecutivos (b-m+1)Δ, ..., bΔ.
- even_subcode_check / dodunekov_check: número de palabras con peso
  divisible por 2 (resp. 2Δ) en códigos binarios.
- spanned_by_min_weight_counts: valores posibles de A_Δ para códigos
  Δ-divisibles generados por palabras de peso Δ (sumas directas de
  componentes clasificadas).
"""
import math
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from django.core.exceptions import ValidationError

from qarith.arithmetic import bracket, is_power_of, prime_power, vp


@dataclass
class CheckResult:
    passed: bool
    reason: str = ""
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {"passed": self.passed, "reason": self.reason, "details": self.details}


# ==========================
# Cota de dimensión
# ==========================

def ward_dimension_bound(q, delta, b, m):
    """Mayor k con k·v_p(q) <= m(v_p(Δ) + v_p(q)) + v_p(C(b, m))."""
    p, f = prime_power(q)
    if not 1 <= m <= b:
        raise ValidationError("Se requiere 1 <= m <= b.")
    if delta < 1:
        raise ValidationError("Δ debe ser positivo.")
    return (m * (vp(delta, p) + f) + vp(math.comb(b, m), p)) // f


def weight_window(weights, delta):
    """(b, m) del menor bloque de múltiplos consecutivos de Δ que contiene los pesos."""
    weights = [w for w in weights if w]
    if not weights or any(w % delta for w in weights):
        raise ValidationError(f"Los pesos deben ser múltiplos no nulos de Δ = {delta}.")
    b = max(weights) // delta
    return b, b - min(weights) // delta + 1


# ==========================
# Subcódigos par y 2Δ-divisible (binarios)
# ==========================

def _binary(dist):
    if dist.q != 2:
        raise ValidationError("La comprobación solo se aplica a códigos binarios.")


def even_subcode_check(dist):
    """Σ A_{2i} vale 2^{k-1} o 2^k."""
    _binary(dist)
    even = sum(a for w, a in enumerate(dist.A) if w % 2 == 0)
    allowed = (2 ** (dist.k - 1), 2 ** dist.k)
    if even in allowed:
        return CheckResult(True, details={"even": even})
    return CheckResult(False, f"Hay {even} palabras de peso par; se esperaba {allowed[0]} o {allowed[1]}.",
                       {"even": even})


def dodunekov_check(dist, delta):
    """
    Para un código binario con pesos divisibles por Δ = 2^a, el número T
    de palabras con peso divisible por 2Δ cumple:
      (i)   2^{⌊(k-1)/(a+1)⌋} divide a T
      (ii)  si T < 2^{k-a}: T = 2^{k-a} - 2^{k-a-t} con 1 <= t <= max(α, β)
      (iii) si T > 2^k - 2^{k-a}: T = 2^k - 2^{k-a} + 2^{k-a-t} con 0 <= t <= max(α, β)
    con α = min(k-a-1, a+1) y β = ⌊(k-a+1)/2⌋.
    """
    _binary(dist)
    if not is_power_of(delta, 2) or delta < 2:
        raise ValidationError("Δ debe ser una potencia de 2 (>= 2).")
    if not dist.is_divisible_by(delta):
        raise ValidationError(f"La distribución no es {delta}-divisible.")

    k = dist.k
    a = delta.bit_length() - 1
    alpha = min(k - a - 1, a + 1)
    beta = (k - a + 1) // 2
    top = max(alpha, beta)
    T = sum(dist.A[w] for w in range(0, dist.n + 1, 2 * delta))
    heavy = [w for w in range(2 * delta, dist.n + 1, 2 * delta) if dist.A[w]]
    details = {"T": T, "a": a, "alpha": alpha, "beta": beta, "delta": min(heavy) if heavy else None}

    step = 2 ** ((k - 1) // (a + 1))
    if T % step:
        return CheckResult(False, f"T = {T} no es múltiplo de {step}.", {**details, "case": "i"})

    if T < 2 ** (k - a):
        gap = 2 ** (k - a) - T
        low, case = 1, "ii"
    elif T > 2 ** k - 2 ** (k - a):
        gap = T - (2 ** k - 2 ** (k - a))
        low, case = 0, "iii"
    else:
        return CheckResult(True, details=details)

    if not is_power_of(gap, 2):
        return CheckResult(False, f"T = {T} no tiene la forma del caso ({case}).", {**details, "case": case})
    t = k - a - (gap.bit_length() - 1)
    details.update(case=case, t=t)
    if not low <= t <= top:
        return CheckResult(False, f"El caso ({case}) da t = {t}, fuera de [{low}, {top}].", details)
    return CheckResult(True, details=details)


# ==========================
# Códigos generados por palabras de peso mínimo
# ==========================

def min_weight_components(delta, q, max_weight):
    """
    [(nombre, A_Δ, peso máximo)] de las componentes indescomponibles con
    todos sus pesos <= max_weight.
    """
    p, f = prime_power(q)
    a = vp(delta, p) // f
    components = []
    for k in range(1, a + 2):
        components.append((f"simplex-{k}", bracket(k, q), delta))
    if q == 2:
        for k in range(3, a + 3):
            components.append((f"reed-muller-{k}", bracket(k, 2) - 1, 2 * delta))
        if a >= 1:
            k = 4
            while delta * ((k + 1) // 2) <= max_weight:
                components.append((f"parity-{k}", math.comb(k + 1, 2), delta * ((k + 1) // 2)))
                k += 1
    return [c for c in components if c[2] <= max_weight]


def spanned_by_min_weight_counts(delta, q, max_weight, max_components=None):
    """
    Valores de A_Δ de las sumas directas de componentes cuyo peso máximo
    total no supera max_weight (cada componente aporta al menos Δ).
    """
    components = min_weight_components(delta, q, max_weight)
    limit = max_weight // delta
    if max_components is not None:
        limit = min(limit, max_components)
    values = {0}
    for size in range(1, limit + 1):
        for combo in combinations_with_replacement(components, size):
            if sum(c[2] for c in combo) <= max_weight:
                values.add(sum(c[1] for c in combo))
    return sorted(values)
