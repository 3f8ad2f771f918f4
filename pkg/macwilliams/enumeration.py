# macwilliams/enumeration.py
"""
Enumeración de las soluciones enteras no negativas de un LinearSystem.

Se lleva el sistema de igualdades a forma escalonada reducida sobre Q,
se acotan las variables libres con programación lineal y se recorren
todas las combinaciones respetando el paso de cada variable.
"""
import itertools
import logging
import math
from fractions import Fraction

from django.core.exceptions import ValidationError

from divisible_codes.conf import get_option
from qarith.exceptions import BudgetExceeded


logger = logging.getLogger(__name__)


def _column_order(system):
    """Primero B/x/y (se despejan), luego el resto en su orden."""
    dual = [v for v in system.variables if v[0] in "Bxy"]
    return dual + [v for v in system.variables if v not in dual]


def reduced_row_echelon(system):
    """
    Devuelve (pivots, filas) con pivots[var] = fila y filas en forma
    escalonada reducida, o None si el sistema de igualdades es inconsistente.
    """
    order = _column_order(system)
    rows = [
        {**{v: c.coefficients.get(v, Fraction(0)) for v in order}, "_rhs": c.rhs}
        for c in system.equalities()
    ]
    pivots = {}
    r = 0
    for v in order:
        pivot = next((i for i in range(r, len(rows)) if rows[i][v]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][v]
        rows[r] = {key: x / p for key, x in rows[r].items()}
        for i in range(len(rows)):
            if i != r and rows[i][v]:
                f = rows[i][v]
                rows[i] = {key: x - f * rows[r][key] for key, x in rows[i].items()}
        pivots[v] = r
        r += 1
    for row in rows[r:]:
        if row["_rhs"]:
            return None
    return pivots, rows[:r]


def _free_ranges(system, free_vars, bounds):
    from lp.simplex import optimise

    ranges = {}
    for v in free_vars:
        step = system.steps.get(v)
        if not step:
            raise ValidationError(f"La variable libre {v} no es entera; no se puede enumerar.")
        if bounds and v in bounds:
            lo, hi = (Fraction(b) for b in bounds[v])
        else:
            upper = optimise(system, v, maximize=True)
            if upper.is_infeasible:
                return None
            if upper.is_unbounded:
                raise BudgetExceeded(f"La variable {v} no está acotada.")
            lo, hi = optimise(system, v, maximize=False).value, upper.value
        first = math.ceil(lo / step) * step
        last = math.floor(hi / step) * step
        ranges[v] = range(first, last + 1, step) if first <= last else range(0)
    return ranges


def enumerate_integer_solutions(system, bounds=None):
    """
    Lista de soluciones {variable: valor}. Las variables con paso deben ser
    múltiplos de él; las demás solo han de ser no negativas.
    Lanza BudgetExceeded si el recorrido supera SOLUTION_SEARCH_LIMIT.
    """
    reduced = reduced_row_echelon(system)
    if reduced is None:
        return []
    pivots, rows = reduced
    free_vars = [v for v in system.variables if v not in pivots]

    ranges = _free_ranges(system, free_vars, bounds)
    if ranges is None:
        return []
    size = math.prod(len(r) for r in ranges.values())
    limit = get_option("SOLUTION_SEARCH_LIMIT")
    if size > limit:
        raise BudgetExceeded(f"La búsqueda recorrería {size} puntos (límite {limit}).")
    logger.debug("Enumerando %s puntos sobre %s", size, free_vars)

    solutions = []
    for combo in itertools.product(*(ranges[v] for v in free_vars)):
        values = {v: Fraction(x) for v, x in zip(free_vars, combo)}
        for v, i in pivots.items():
            row = rows[i]
            values[v] = row["_rhs"] - sum((row[f] * values[f] for f in free_vars), Fraction(0))
        if not _admissible(system, values):
            continue
        solutions.append({
            v: (int(x) if x.denominator == 1 else x) for v, x in values.items()
        })
    return solutions


def _admissible(system, values):
    for v, x in values.items():
        step = system.steps.get(v)
        if step and (x.denominator != 1 or x.numerator % step):
            return False
    return system.satisfied(values)
