# lp/rounding.py
"""
Redondeo entero iterado sobre los sistemas de MacWilliams.

Para cada variable entera se maximiza y minimiza, se redondea al múltiplo
de su paso y se añade la cota como restricción; se repite hasta un punto
fijo. Si alguna variable queda sin valor entero posible el sistema es
infactible y se devuelve el certificado de Farkas correspondiente.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from divisible_codes.conf import get_option
from macwilliams.systems import GE, LE, first_t_system
from qarith.arithmetic import is_power_of

from .simplex import certificate_to_json, feasibility, optimise


logger = logging.getLogger(__name__)

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"


@dataclass
class BoundsResult:
    status: str
    bounds: dict = field(default_factory=dict)
    system: object = None
    rounds: int = 0
    exhausted: bool = False
    certificate: dict = None

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    def to_dict(self):
        return {
            "status": self.status,
            "rounds": self.rounds,
            "exhausted": self.exhausted,
            "bounds": {
                v: [str(lo), str(hi) if hi is not None else None]
                for v, (lo, hi) in self.bounds.items()
            },
            "certificate": self.certificate,
        }


def _floor_to(value, step):
    return Fraction(math.floor(value / step) * step)


def _ceil_to(value, step):
    return Fraction(math.ceil(value / step) * step)


def _infeasible(system, rounds, bounds, kind="bounds", **extra):
    outcome = feasibility(system)
    certificate = certificate_to_json(kind, outcome.farkas or {}, **extra)
    return BoundsResult(
        status=INFEASIBLE, bounds=bounds, system=system, rounds=rounds, certificate=certificate,
    )


def tighten_bounds(system, int_vars=None, max_rounds=None):
    """
    Cotas enteras por punto fijo. `int_vars` por defecto son las variables
    con paso en `system.steps`. Si se agota `max_rounds` se devuelven las
    mejores cotas obtenidas con `exhausted=True`.
    """
    system = system.copy()
    max_rounds = max_rounds or get_option("LP_MAX_ROUNDS")
    int_vars = list(int_vars) if int_vars is not None else [v for v in system.variables if v in system.steps]
    bounds = {v: (Fraction(0), None) for v in int_vars}

    outcome = feasibility(system)
    if outcome.is_infeasible:
        return BoundsResult(
            status=INFEASIBLE, system=system,
            certificate=certificate_to_json("farkas", outcome.farkas),
        )

    for rounds in range(1, max_rounds + 1):
        changed = False
        for v in int_vars:
            step = system.steps.get(v, 1)
            upper = optimise(system, v, maximize=True)
            if upper.is_infeasible:
                return BoundsResult(
                    status=INFEASIBLE, bounds=bounds, system=system, rounds=rounds,
                    certificate=certificate_to_json("bounds", upper.farkas),
                )
            lower = optimise(system, v, maximize=False)
            hi = None if upper.is_unbounded else _floor_to(upper.value, step)
            lo = _ceil_to(lower.value, step)

            if hi is not None and lo > hi:
                logger.debug("%s sin valor entero en [%s, %s]", v, lower.value, upper.value)
                system.add({v: 1}, GE, lo, label=f"lo_{v}")
                system.add({v: 1}, LE, hi, label=f"hi_{v}")
                bounds[v] = (lo, hi)
                return _infeasible(system, rounds, bounds, variable=v)

            if hi is not None and hi != upper.value:
                system.add({v: 1}, LE, hi, label=f"hi_{v}_{rounds}")
                changed = True
            if lo != lower.value:
                system.add({v: 1}, GE, lo, label=f"lo_{v}_{rounds}")
                changed = True
            bounds[v] = (lo, hi)

        if not changed:
            return BoundsResult(status=FEASIBLE, bounds=bounds, system=system, rounds=rounds)
    logger.warning("tighten_bounds: límite de %s rondas alcanzado.", max_rounds)
    return BoundsResult(status=FEASIBLE, bounds=bounds, system=system, rounds=max_rounds, exhausted=True)


# ==========================
# Factibilidad de códigos divisibles
# ==========================

@dataclass
class FeasibilityResult:
    feasible: bool
    kind: str = ""
    certificate: dict = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "feasible": self.feasible,
            "kind": self.kind,
            "certificate": self.certificate,
            "details": self.details,
        }


def _pinned(system, variable):
    upper = optimise(system, variable, maximize=True)
    lower = optimise(system, variable, maximize=False)
    if upper.is_optimal and lower.is_optimal and upper.value == lower.value:
        return upper.value
    return None


def _is_power(value, q):
    value = Fraction(value)
    if value <= 0:
        return False
    if value.denominator == 1:
        return is_power_of(value.numerator, q)
    return value.numerator == 1 and is_power_of(value.denominator, q)


def _depth(q, delta, n, t):
    if t is not None:
        return t
    if [q, delta, n] in [list(case) for case in get_option("LP_FIVE_EQUATION_CASES")]:
        return 5
    return get_option("LP_DEPTH")


def divisible_feasible(q, delta, n, k=None, k_range=None, weights=None, projective=False,
                       t=None, extra_checks=True, forbidden_weights=()):
    """
    ¿Admiten las primeras t ecuaciones de MacWilliams un código Δ-divisible
    de longitud n? Sin k ni k_range se usa el modo sin dimensión y, si el
    sistema fija y = q^{k-t+1}, se exige además que sea potencia de q.
    """
    t = _depth(q, delta, n, t)
    if k is not None:
        k_range = [k]

    if k_range is not None:
        certificates = {}
        for dim in k_range:
            system = first_t_system(
                n, q, delta, t, k=dim, projective=projective,
                forbidden_weights=forbidden_weights, weights=weights,
            )
            result = tighten_bounds(system)
            if result.feasible:
                return FeasibilityResult(True, details={"k": dim, "t": t, "bounds": result.to_dict()["bounds"]})
            certificates[str(dim)] = result.certificate
        return FeasibilityResult(False, kind="bounds", certificate={"per_k": certificates}, details={"t": t})

    system = first_t_system(
        n, q, delta, t, projective=projective,
        forbidden_weights=forbidden_weights, weights=weights,
    )
    outcome = feasibility(system)
    if outcome.is_infeasible:
        return FeasibilityResult(
            False, kind="farkas", certificate=certificate_to_json("farkas", outcome.farkas), details={"t": t},
        )
    result = tighten_bounds(system)
    if not result.feasible:
        return FeasibilityResult(False, kind="bounds", certificate=result.certificate, details={"t": t})

    if extra_checks:
        y = _pinned(result.system, "y")
        if y is not None and not _is_power(y, q):
            logger.info("y fijado en %s, que no es potencia de %s.", y, q)
            return FeasibilityResult(
                False, kind="power",
                certificate={"kind": "power", "y": str(y), "q": q},
                details={"t": t},
            )
    return FeasibilityResult(True, details={"t": t, "bounds": result.to_dict()["bounds"]})
