# macwilliams/systems.py
"""
Sistemas lineales exactos construidos a partir de las identidades de MacWilliams.

Variables:
  - A{w}: número de palabras de peso w (múltiplo de q-1)
  - B{i}: pesos del dual (múltiplo de q-1)
  - y, x{i}: modo sin dimensión, y = q^{k-t+1} y x_i = y·B_i
  - a{i}: espectro (número de hiperplanos de multiplicidad i)
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction

from django.core.exceptions import ValidationError

from qarith.arithmetic import bracket


EQ = "="
LE = "<="
GE = ">="
RELATIONS = (EQ, LE, GE)


@dataclass
class Constraint:
    coefficients: dict
    relation: str = EQ
    rhs: Fraction = Fraction(0)
    label: str = ""

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValidationError(f"Relación desconocida: {self.relation}")
        self.coefficients = {v: Fraction(c) for v, c in self.coefficients.items() if c}
        self.rhs = Fraction(self.rhs)

    def lhs(self, values):
        return sum((c * Fraction(values.get(v, 0)) for v, c in self.coefficients.items()), Fraction(0))

    def satisfied(self, values) -> bool:
        left = self.lhs(values)
        if self.relation == EQ:
            return left == self.rhs
        if self.relation == LE:
            return left <= self.rhs
        return left >= self.rhs

    def to_dict(self):
        return {
            "label": self.label,
            "coefficients": {v: str(c) for v, c in self.coefficients.items()},
            "relation": self.relation,
            "rhs": str(self.rhs),
        }

    def __str__(self):
        terms = " + ".join(f"{c}·{v}" for v, c in self.coefficients.items()) or "0"
        return f"{self.label + ': ' if self.label else ''}{terms} {self.relation} {self.rhs}"


@dataclass
class LinearSystem:
    """
    Sistema lineal con coeficientes racionales.

    - `free`: variables sin cota inferior 0 (el resto son >= 0).
    - `steps`: variables enteras y su paso (A_i y B_i son múltiplos de q-1).
    """
    variables: list
    constraints: list = field(default_factory=list)
    free: set = field(default_factory=set)
    steps: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def add(self, coefficients, relation=EQ, rhs=0, label=""):
        for v in coefficients:
            if v not in self.variables:
                raise ValidationError(f"Variable desconocida: {v}")
        constraint = Constraint(coefficients, relation, rhs, label or f"c{len(self.constraints)}")
        self.constraints.append(constraint)
        return constraint

    def copy(self):
        return LinearSystem(
            variables=list(self.variables),
            constraints=[
                Constraint(dict(c.coefficients), c.relation, c.rhs, c.label) for c in self.constraints
            ],
            free=set(self.free),
            steps=dict(self.steps),
            meta=dict(self.meta),
        )

    def equalities(self):
        return [c for c in self.constraints if c.relation == EQ]

    def satisfied(self, values) -> bool:
        if any(Fraction(values.get(v, 0)) < 0 for v in self.variables if v not in self.free):
            return False
        return all(c.satisfied(values) for c in self.constraints)

    def rows(self, variables=None):
        """Filas [coeficientes..., rhs] de las igualdades."""
        variables = variables or self.variables
        return [
            [c.coefficients.get(v, Fraction(0)) for v in variables] + [c.rhs]
            for c in self.equalities()
        ]

    def rank(self, variables=None):
        return matrix_rank(self.rows(variables))

    def to_dict(self):
        return {
            "variables": list(self.variables),
            "free": sorted(self.free),
            "constraints": [c.to_dict() for c in self.constraints],
        }


def matrix_rank(rows):
    """Rango exacto por eliminación gaussiana sobre Q."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


# ==========================
# Primeras t ecuaciones de MacWilliams
# ==========================

def allowed_weights(n, delta, forbidden_weights=(), weights=None):
    if weights is not None:
        return sorted(w for w in set(weights) if 1 <= w <= n)
    forbidden = set(forbidden_weights)
    return [w for w in range(delta, n + 1, delta) if w not in forbidden]


def first_t_system(n, q, delta, t, k=None, full_length=False, projective=False,
                   forbidden_weights=(), weights=None):
    """
    Fila i (0 <= i < t):
        Σ_{j>=1} C(n-j, i) A_j = q^{k-i} Σ_{j=0}^{i} C(n-j, i-j) B_j - C(n, i)

    Con k=None se usa el modo sin dimensión: y = q^{k-t+1} y x_j = y·B_j
    pasan a ser variables, y q^{k-i} = y·q^{t-1-i}.
    `projective` fija B_1 = B_2 = 0 y `full_length` fija B_1 = 0.
    """
    if not 1 <= t <= n + 1:
        raise ValidationError(f"t debe cumplir 1 <= t <= n+1 (recibido t={t}, n={n}).")
    dimension_free = k is None
    ws = allowed_weights(n, delta, forbidden_weights, weights)
    fixed_dual = set()
    if full_length or projective:
        fixed_dual.add(1)
    if projective:
        fixed_dual.add(2)
    duals = [j for j in range(1, t) if j not in fixed_dual]

    a_vars = [f"A{w}" for w in ws]
    if dimension_free:
        b_vars = [f"x{j}" for j in duals] + ["y"]
    else:
        b_vars = [f"B{j}" for j in duals]

    system = LinearSystem(variables=a_vars + b_vars)
    for w in ws:
        system.steps[f"A{w}"] = q - 1
    if not dimension_free:
        for j in duals:
            system.steps[f"B{j}"] = q - 1
    system.meta.update({
        "n": n, "q": q, "delta": delta, "t": t, "k": k,
        "dimension_free": dimension_free, "projective": projective,
        "full_length": full_length or projective, "weights": ws,
    })

    for i in range(t):
        coefficients = {f"A{w}": math.comb(n - w, i) for w in ws}
        base = math.comb(n, i)
        if dimension_free:
            scale = Fraction(q) ** (t - 1 - i)
            coefficients["y"] = coefficients.get("y", 0) - scale * base
            for j in duals:
                if j <= i:
                    coefficients[f"x{j}"] = -scale * math.comb(n - j, i - j)
            rhs = -base
        else:
            scale = Fraction(q) ** (k - i)
            for j in duals:
                if j <= i:
                    coefficients[f"B{j}"] = -scale * math.comb(n - j, i - j)
            rhs = scale * base - base
        system.add(coefficients, EQ, rhs, label=f"MW{i}")
    return system


# ==========================
# Momentos de potencias
# ==========================

def power_moments(n, k, q, t):
    """
    Σ_j j^s A_j expresado con B_1..B_s (s < t), obtenido escribiendo j^s
    en la base C(n-j, i), i <= s, y usando las identidades de MacWilliams.
    """
    system = LinearSystem(variables=[f"A{w}" for w in range(1, n + 1)] + [f"B{j}" for j in range(1, t)])
    for s in range(t):
        # c_u tales que (n-u)^s = Σ_{i<=u} c_i C(u, i) para u = 0..s
        c = []
        for u in range(s + 1):
            c.append((n - u) ** s - sum(c[i] * math.comb(u, i) for i in range(u)))
        coefficients = {f"A{w}": w ** s for w in range(1, n + 1)}
        rhs = Fraction(-(0 ** s))  # término A_0
        for i, ci in enumerate(c):
            scale = Fraction(q) ** (k - i) * ci
            rhs += scale * math.comb(n, i)
            for j in range(1, i + 1):
                coefficients[f"B{j}"] = coefficients.get(f"B{j}", 0) - scale * math.comb(n - j, i - j)
        system.add(coefficients, EQ, rhs, label=f"PM{s}")
    return system


def power_moments_q2(n, k, t):
    if not 1 <= t <= 5:
        raise ValidationError("Los momentos binarios se dan para t <= 5.")
    return power_moments(n, k, 2, t)


# ==========================
# Ecuaciones estándar
# ==========================

def standard_equations(n, q, k, lambdas=None, support=None):
    """
    Ecuaciones estándar sobre el espectro a_i de un multiconjunto de n
    puntos en PG(k-1,q); lambdas[j] = número de puntos de multiplicidad j.
    """
    if k < 2:
        raise ValidationError("Las ecuaciones estándar requieren k >= 2.")
    lambdas = lambdas or {}
    support = sorted(support) if support is not None else list(range(n + 1))
    names = [f"a{i}" for i in support]
    system = LinearSystem(variables=names)
    for i in support:
        system.steps[f"a{i}"] = 1
    pairs = sum(math.comb(j, 2) * c for j, c in lambdas.items())
    system.add({f"a{i}": 1 for i in support}, EQ, bracket(k, q), label="SE0")
    system.add({f"a{i}": i for i in support}, EQ, n * bracket(k - 1, q), label="SE1")
    system.add(
        {f"a{i}": math.comb(i, 2) for i in support},
        EQ,
        math.comb(n, 2) * bracket(k - 2, q) + q ** (k - 2) * pairs,
        label="SE2",
    )
    system.meta.update({"n": n, "q": q, "k": k})
    return system


def solve_standard_equations(n, q, support, lambdas=None, k_values=range(2, 17)):
    """
    Todas las soluciones enteras no negativas (k, espectro) para las
    dimensiones indicadas.
    """
    from .enumeration import enumerate_integer_solutions

    found = []
    for k in k_values:
        system = standard_equations(n, q, k, lambdas, support)
        for solution in enumerate_integer_solutions(system):
            found.append((k, {int(v[1:]): int(x) for v, x in solution.items() if x}))
    return found
