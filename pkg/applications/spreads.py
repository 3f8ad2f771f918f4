# applications/spreads.py
"""
Cotas para spreads parciales A_q(v, 2t; t), con v = kt + s y 0 <= s < t.

- spread_lower_bound: construcción (q^v - q^{t+s})/(q^t - 1) + 1.
- drake_freeman_bound, parametric_bound_2, parametric_bound_3: cotas
  superiores cerradas; devuelven POS_INF si no se aplican.
- divisible_spread_bound: los huecos de un spread parcial forman un
  conjunto q^{t-1}-divisible; redondeo ⌊[v]_q/[t]_q⌋_{q^{t-1},1}.
- known_spread_bound: cotas publicadas (data/spread_bounds.json), que se
  adjuntan al informe para comparar.

Todas las raíces cuadradas se hacen con enteros (isqrt), sin flotantes.
"""
import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from django.core.exceptions import ValidationError

from divisible_codes.conf import get_option
from exclusion.classify import load_data, sporadic_entry
from exclusion.criteria import (
    cubic_condition,
    interval_exclusion,
    linear_condition,
    quadratic_condition,
)
from lengths.expansion import POS_INF, floor_qr_lambda
from qarith.arithmetic import bracket, isqrt_floor


logger = logging.getLogger(__name__)

SPREAD_TABLE = Path(__file__).resolve().parent / "data" / "spread_bounds.json"


def _split(v, t):
    """(k, s) con v = kt + s; exige k >= 2."""
    if t < 1:
        raise ValidationError("t debe ser >= 1.")
    if v < 2 * t:
        raise ValidationError(f"Se requiere v >= 2t (v={v}, t={t}); en otro caso A_q(v,2t;t) = 1.")
    return divmod(v, t)


def _full_spread(q, v, t):
    return bracket(v, q) // bracket(t, q)


# ==========================
# Oráculo de exclusión por descenso
# ==========================

class DescentOracle:
    """
    Decide si un conjunto q^r-divisible de n puntos queda excluido sin
    construir la tabla completa: exclusiones esporádicas, intervalos,
    condiciones lineal, cuadrática y cúbica, y descenso por hiperplanos
    al nivel r-1 (recursivo, con memoria).

    Solo afirma exclusiones demostradas; "no excluido" no implica
    existencia.
    """

    def __init__(self, q, r, data=None):
        self.q = q
        self.r = r
        self.data = load_data() if data is None else data
        self._memo = {}

    def is_excluded(self, n, r=None):
        return self.certificate(n, r) is not None

    def certificate(self, n, r=None):
        r = self.r if r is None else r
        if n < 0:
            return {"kind": "negative"}
        if n == 0 or r < 1:
            return None
        key = (r, n)
        if key not in self._memo:
            self._memo[key] = self._compute(n, r)
        return self._memo[key]

    def _compute(self, n, r):
        q = self.q
        delta = q ** r
        entry = sporadic_entry(q, r, n, self.data)
        if entry:
            return {"kind": "sporadic", "key": entry["key"]}

        certificate = interval_exclusion(n, q, r)
        if certificate:
            return certificate
        u = self._least_attainable(n, r)
        certificate = (
            linear_condition(n, q, delta, [] if u is None else [u])
            or quadratic_condition(n, q, delta)
            or cubic_condition(n, q, delta)
            or self._chain(n, r)
        )
        if certificate:
            logger.debug("q=%s r=%s n=%s excluido por %s", q, r, n, certificate["kind"])
        return certificate

    def _least_attainable(self, n, r):
        """Menor m ≡ n (mod q^r), m < n, no excluido al nivel r-1."""
        delta = self.q ** r
        for m in range(n % delta, n, delta):
            if m == 0 or not self.is_excluded(m, r - 1):
                return m
        return None

    def _chain(self, n, r):
        """
        Algún hiperplano tiene M(H) < n/q. Basta mirar el mayor candidato
        m: si m - q^r existiera, añadiendo un espacio afín disjunto de q^r
        puntos (q^{r-1}-divisible) existiría m.
        """
        q, delta = self.q, self.q ** r
        m = n % delta
        if m * q >= n:
            return {"kind": "chain", "level": r - 1, "m": None}
        m += ((n - 1) // q - m) // delta * delta
        if self.is_excluded(m, r - 1):
            return {"kind": "chain", "level": r - 1, "m": m}
        return None


# ==========================
# Cotas
# ==========================

def spread_lower_bound(q, v, t):
    k, s = _split(v, t)
    if s == 0:
        return _full_spread(q, v, t)
    return (q ** v - q ** (t + s)) // (q ** t - 1) + 1


def trivial_bound(q, v, t):
    _split(v, t)
    return _full_spread(q, v, t)


def drake_freeman_bound(q, v, t):
    """
    (q^v - q^s)/(q^t - 1) - ⌊θ⌋ - 1 con
    2θ = sqrt(1 + 4q^t(q^t - q^s)) - (2q^t - 2q^s + 1).
    """
    k, s = _split(v, t)
    if s == 0:
        return _full_spread(q, v, t)
    root = isqrt_floor(1 + 4 * q ** t * (q ** t - q ** s))
    theta = (root - (2 * q ** t - 2 * q ** s + 1)) // 2
    return (q ** v - q ** s) // (q ** t - 1) - theta - 1


def _l(q, v, t, s):
    return (q ** (v - t) - q ** s) // (q ** t - 1)


def parametric_2_candidates(q, v, t):
    """
    [(y, z, valor)] de la cota paramétrica con λ = q^y, max(s,2) <= y <= t
    y z = [s]_q + 1 - t. Vacía si los parámetros no son admisibles.
    """
    k, s = _split(v, t)
    z = bracket(s, q) + 1 - t
    if s == 0 or z < 0 or t <= s:
        return []
    base = _l(q, v, t, s) * q ** t
    candidates = []
    for y in range(max(s, 2), t + 1):
        lam = q ** y
        disc = 1 + 4 * lam * (lam - (z + y - 1) * (q - 1) - 1)
        if disc < 0:
            continue
        candidates.append((y, z, base + lam - (1 + isqrt_floor(disc)) // 2))
    return candidates


def parametric_bound_2(q, v, t):
    candidates = parametric_2_candidates(q, v, t)
    if not candidates:
        return POS_INF
    return min(value for _, _, value in candidates)


def parametric_bound_3(q, v, t):
    """l·q^t + 1 + z(q-1) con z = max(0, [s]_q + 1 - t); requiere t > s >= 1."""
    k, s = _split(v, t)
    if s == 0 or t <= s:
        return POS_INF
    z = max(0, bracket(s, q) + 1 - t)
    return _l(q, v, t, s) * q ** t + 1 + z * (q - 1)


def divisible_spread_bound(q, v, t, oracle=None, data=None):
    """
    Mayor n tal que [v]_q - n[t]_q no está excluido como cardinalidad de
    un conjunto q^{t-1}-divisible (los huecos del spread parcial).
    """
    _split(v, t)
    if v % t == 0:
        return _full_spread(q, v, t)
    oracle = oracle or DescentOracle(q, t - 1, data)
    return floor_qr_lambda(bracket(v, q), bracket(t, q), q, t - 1, 1, oracle)


# ==========================
# Informe combinado
# ==========================

@lru_cache(maxsize=None)
def published_spread_rows():
    with open(SPREAD_TABLE, encoding="utf-8") as fh:
        return tuple(json.load(fh)["rows"])


def known_spread_bound(q, v, t):
    """Fila publicada para (q, v, t) o None."""
    return next((row for row in published_spread_rows() if (row["q"], row["v"], row["t"]) == (q, v, t)), None)


@dataclass
class SpreadBoundReport:
    q: int
    v: int
    t: int
    lower: int
    upper: dict = field(default_factory=dict)
    known: dict = None

    @property
    def best_method(self):
        return min(self.upper, key=lambda method: self.upper[method]["value"])

    @property
    def best(self):
        return self.upper[self.best_method]["value"]

    def to_dict(self):
        def encode(value):
            return None if value == POS_INF else str(value)

        return {
            "q": self.q,
            "v": self.v,
            "t": self.t,
            "lower": str(self.lower),
            "upper": {
                method: {**entry, "value": encode(entry["value"])}
                for method, entry in self.upper.items()
            },
            "best": encode(self.best),
            "best_method": self.best_method,
            "known": self.known,
        }


def spread_bound_report(q, v, t, data=None):
    k, s = _split(v, t)
    report = SpreadBoundReport(
        q=q, v=v, t=t, lower=spread_lower_bound(q, v, t), known=known_spread_bound(q, v, t),
    )
    report.upper["trivial"] = {"value": trivial_bound(q, v, t)}
    report.upper["drake_freeman"] = {"value": drake_freeman_bound(q, v, t)}

    candidates = parametric_2_candidates(q, v, t)
    if candidates:
        y, z, value = min(candidates, key=lambda c: c[2])
        report.upper["parametric_2"] = {"value": value, "y": y, "z": z}
    else:
        report.upper["parametric_2"] = {"value": POS_INF}

    z = max(0, bracket(s, q) + 1 - t) if s else 0
    report.upper["parametric_3"] = {"value": parametric_bound_3(q, v, t), "z": z}
    report.upper["divisible"] = {
        "value": divisible_spread_bound(q, v, t, data=data),
        "delta": q ** (t - 1),
    }

    if report.best < report.lower:
        raise AssertionError(f"Cota superior {report.best} < cota inferior {report.lower} para {q, v, t}.")
    return report


def spread_grid(q, t, v_max=None, data=None):
    """Informes para v = 2t..v_max (por defecto SPREAD_TABLE_DEPTH[q])."""
    if v_max is None:
        depth = get_option("SPREAD_TABLE_DEPTH")
        v_max = depth.get(q, depth.get(str(q), 2 * t))
    return [spread_bound_report(q, v, t, data) for v in range(2 * t, v_max + 1)]


def render_grid(reports):
    lines = [f"{'q':>3} {'v':>3} {'t':>3}  {'inferior':>12}  {'superior':>12}  {'publicada':>12}  método"]
    for rep in reports:
        known = rep.known["upper"] if rep.known else "-"
        lines.append(
            f"{rep.q:>3} {rep.v:>3} {rep.t:>3}  {rep.lower:>12}  {rep.best:>12}  {known:>12}  {rep.best_method}"
        )
    return "\n".join(lines)
