# lp/simplex.py
"""
Programación lineal exacta sobre Q.

Simplex de dos fases sobre un tableau denso de Fractions con la regla de
Bland (menor índice), por lo que siempre termina. Cada resultado lleva su
certificado:
  - Optimal: solución primal y multiplicadores duales.
  - Infeasible: multiplicadores de Farkas leídos de la base final de fase 1.
  - Unbounded: un rayo que mejora el objetivo.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from django.core.exceptions import ValidationError

from macwilliams.systems import EQ, GE, LE, LinearSystem


logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

ZERO = Fraction(0)


@dataclass
class RationalLinearProgram:
    variables: list
    rows: list  # (coeficientes dict, relación, rhs, etiqueta)
    objective: dict = field(default_factory=dict)
    maximize: bool = True
    free: set = field(default_factory=set)

    @classmethod
    def from_system(cls, system: LinearSystem, objective=None, maximize=True):
        if isinstance(objective, str):
            objective = {objective: 1}
        objective = {v: Fraction(c) for v, c in (objective or {}).items()}
        for v in objective:
            if v not in system.variables:
                raise ValidationError(f"Variable desconocida en el objetivo: {v}")
        rows = [(dict(c.coefficients), c.relation, c.rhs, c.label) for c in system.constraints]
        return cls(
            variables=list(system.variables),
            rows=rows,
            objective=objective,
            maximize=maximize,
            free=set(system.free),
        )

    @property
    def labels(self):
        return [label for _, _, _, label in self.rows]

    def evaluate(self, values):
        return sum((c * Fraction(values.get(v, 0)) for v, c in self.objective.items()), ZERO)

    def is_feasible_point(self, values) -> bool:
        for v in self.variables:
            if v not in self.free and Fraction(values.get(v, 0)) < 0:
                return False
        for coefficients, relation, rhs, _ in self.rows:
            lhs = sum((c * Fraction(values.get(v, 0)) for v, c in coefficients.items()), ZERO)
            if relation == EQ and lhs != rhs:
                return False
            if relation == LE and lhs > rhs:
                return False
            if relation == GE and lhs < rhs:
                return False
        return True

    def combined(self, multipliers):
        """Coeficientes Σ y_r a_rj y término Σ y_r b_r de una combinación de filas."""
        coefficients = {v: ZERO for v in self.variables}
        total = ZERO
        for (row, _, rhs, label) in self.rows:
            y = Fraction(multipliers.get(label, 0))
            if not y:
                continue
            for v, c in row.items():
                coefficients[v] += y * c
            total += y * rhs
        return coefficients, total


@dataclass
class LpOutcome:
    status: str
    value: Fraction = None
    primal: dict = None
    dual: dict = None
    farkas: dict = None
    ray: dict = None
    point: dict = None

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL

    @property
    def is_infeasible(self) -> bool:
        return self.status == INFEASIBLE

    @property
    def is_unbounded(self) -> bool:
        return self.status == UNBOUNDED

    def to_dict(self):
        def text(d):
            return {k: str(v) for k, v in d.items()} if d is not None else None

        return {
            "status": self.status,
            "value": str(self.value) if self.value is not None else None,
            "primal": text(self.primal),
            "dual": text(self.dual),
            "farkas": text(self.farkas),
            "ray": text(self.ray),
        }


# ==========================
# Tableau
# ==========================

class _Tableau:
    """
    Forma estándar: columnas = variables (las libres se parten en +/-),
    holguras, artificiales (una por fila, forman la identidad inicial).
    Las filas con rhs < 0 se multiplican por -1 (signo sigma).
    """

    def __init__(self, lp: RationalLinearProgram):
        self.lp = lp
        self.columns = []  # (variable, signo) para columnas estructurales
        for v in lp.variables:
            self.columns.append((v, 1))
            if v in lp.free:
                self.columns.append((v, -1))
        n_struct = len(self.columns)
        m = len(lp.rows)
        slack_rows = [r for r, (_, rel, _, _) in enumerate(lp.rows) if rel != EQ]
        self.slack_start = n_struct
        self.art_start = n_struct + len(slack_rows)
        self.width = self.art_start + m
        self.sigma = []
        self.T = []
        index = {v: [] for v in lp.variables}
        for j, (v, s) in enumerate(self.columns):
            index[v].append((j, s))
        for r, (coefficients, relation, rhs, _) in enumerate(lp.rows):
            row = [ZERO] * (self.width + 1)
            for v, c in coefficients.items():
                for j, s in index[v]:
                    row[j] = c * s
            if relation != EQ:
                row[self.slack_start + slack_rows.index(r)] = Fraction(1 if relation == LE else -1)
            row[-1] = Fraction(rhs)
            sigma = -1 if row[-1] < 0 else 1
            if sigma < 0:
                row = [-x for x in row]
            row[self.art_start + r] = Fraction(1)
            self.sigma.append(sigma)
            self.T.append(row)
        self.basis = [self.art_start + r for r in range(m)]

    def is_artificial(self, j):
        return j >= self.art_start

    def pivot(self, i, j):
        T = self.T
        p = T[i][j]
        T[i] = [x / p for x in T[i]]
        for k in range(len(T)):
            if k != i and T[k][j]:
                f = T[k][j]
                T[k] = [a - f * b for a, b in zip(T[k], T[i])]
        self.basis[i] = j

    def run(self, cost, allowed):
        """
        Minimiza cost·x con la regla de Bland. Devuelve None si es óptimo
        o la columna de entrada si el problema es no acotado.
        """
        while True:
            cb = [cost[b] for b in self.basis]
            entering = None
            for j in range(self.width):
                if not allowed(j) or j in self.basis:
                    continue
                reduced = cost[j] - sum((cb[i] * self.T[i][j] for i in range(len(self.T))), ZERO)
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return None
            leaving = None
            best = None
            for i, row in enumerate(self.T):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leaving]):
                        best, leaving = ratio, i
            if leaving is None:
                return entering
            self.pivot(leaving, entering)

    def multipliers(self, cost):
        """u = c_B^T B^{-1}; B^{-1} son las columnas artificiales."""
        cb = [cost[b] for b in self.basis]
        m = len(self.T)
        return [
            sum((cb[i] * self.T[i][self.art_start + r] for i in range(m)), ZERO)
            for r in range(m)
        ]

    def values(self):
        x = [ZERO] * self.width
        for i, b in enumerate(self.basis):
            x[b] = self.T[i][-1]
        return x

    def to_variables(self, x):
        out = {v: ZERO for v in self.lp.variables}
        for j, (v, s) in enumerate(self.columns):
            out[v] += s * x[j]
        return out


# ==========================
# Resolución
# ==========================

def solve(lp: RationalLinearProgram) -> LpOutcome:
    tab = _Tableau(lp)
    labels = lp.labels
    m = len(tab.T)

    # ---------- Fase 1 ----------
    phase1 = [ZERO] * tab.art_start + [Fraction(1)] * m
    tab.run(phase1, allowed=lambda j: True)
    w = sum((phase1[b] * tab.T[i][-1] for i, b in enumerate(tab.basis)), ZERO)
    if w > 0:
        u = tab.multipliers(phase1)
        farkas = {labels[r]: tab.sigma[r] * u[r] for r in range(m)}
        logger.debug("Programa infactible (w* = %s).", w)
        return LpOutcome(status=INFEASIBLE, farkas=farkas)

    # Sacar de la base las artificiales que quedaron a nivel 0.
    for i in range(m):
        if tab.is_artificial(tab.basis[i]):
            for j in range(tab.art_start):
                if tab.T[i][j] and j not in tab.basis:
                    tab.pivot(i, j)
                    break

    # ---------- Fase 2 ----------
    sign = -1 if lp.maximize else 1
    cost = [ZERO] * tab.width
    for j, (v, s) in enumerate(tab.columns):
        cost[j] = sign * s * lp.objective.get(v, ZERO)
    entering = tab.run(cost, allowed=lambda j: not tab.is_artificial(j))
    x = tab.values()
    point = tab.to_variables(x)

    if entering is not None:
        d = [ZERO] * tab.width
        d[entering] = Fraction(1)
        for i, b in enumerate(tab.basis):
            d[b] = -tab.T[i][entering]
        return LpOutcome(status=UNBOUNDED, ray=tab.to_variables(d), point=point)

    u = tab.multipliers(cost)
    dual = {labels[r]: sign * tab.sigma[r] * u[r] for r in range(m)}
    return LpOutcome(status=OPTIMAL, value=lp.evaluate(point), primal=point, dual=dual)


def optimise(system, variable, maximize=True) -> LpOutcome:
    """Maximiza (o minimiza) una sola variable sobre el sistema."""
    return solve(RationalLinearProgram.from_system(system, {variable: 1}, maximize))


def feasibility(system) -> LpOutcome:
    return solve(RationalLinearProgram.from_system(system, {}, True))


# ==========================
# Verificación de certificados
# ==========================

def _as_program(lp):
    if isinstance(lp, LinearSystem):
        return RationalLinearProgram.from_system(lp)
    return lp


def certify_infeasible(lp, multipliers) -> bool:
    """
    Comprueba con aritmética exacta que la combinación Σ y_r (fila r)
    da 0 >= positivo:
      - y_r <= 0 en filas <=, y_r >= 0 en filas >=, libre en igualdades;
      - coeficiente combinado <= 0 en variables no negativas, = 0 en libres;
      - Σ y_r b_r > 0.
    """
    lp = _as_program(lp)
    multipliers = {k: Fraction(v) for k, v in multipliers.items()}
    unknown = set(multipliers) - set(lp.labels)
    if unknown:
        raise ValidationError(f"Etiquetas desconocidas en el certificado: {sorted(unknown)}")
    for _, relation, _, label in lp.rows:
        y = multipliers.get(label, ZERO)
        if relation == LE and y > 0:
            return False
        if relation == GE and y < 0:
            return False
    coefficients, total = lp.combined(multipliers)
    for v, c in coefficients.items():
        if v in lp.free and c != 0:
            return False
        if c > 0:
            return False
    return total > 0


def check_duality(lp, outcome: LpOutcome) -> bool:
    """
    Dualidad fuerte exacta: primal factible, dual factible y mismo valor.
    Para max: Σ y a_j >= c_j (= en libres), y >= 0 en filas <=, y <= 0 en >=.
    Para min las desigualdades se invierten.
    """
    lp = _as_program(lp)
    if not outcome.is_optimal:
        return False
    if not lp.is_feasible_point(outcome.primal):
        return False
    sign = 1 if lp.maximize else -1
    for _, relation, _, label in lp.rows:
        y = sign * outcome.dual.get(label, ZERO)
        if relation == LE and y < 0:
            return False
        if relation == GE and y > 0:
            return False
    coefficients, total = lp.combined(outcome.dual)
    for v in lp.variables:
        slack = sign * (coefficients[v] - lp.objective.get(v, ZERO))
        if v in lp.free and slack != 0:
            return False
        if slack < 0:
            return False
    return total == outcome.value == lp.evaluate(outcome.primal)


# ==========================
# Serialización
# ==========================

def certificate_to_json(kind, multipliers, **extra):
    """Multiplicadores como pares (numerador, denominador) en texto decimal."""
    data = {
        "kind": kind,
        "multipliers": {
            label: [str(Fraction(y).numerator), str(Fraction(y).denominator)]
            for label, y in multipliers.items()
            if y
        },
    }
    data.update(extra)
    return data


def certificate_from_json(data):
    try:
        return {
            label: Fraction(int(num), int(den))
            for label, (num, den) in data["multipliers"].items()
        }
    except (KeyError, TypeError, ValueError, ZeroDivisionError):
        raise ValidationError("Certificado mal formado.")
