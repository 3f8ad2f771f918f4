# geometry/incidence.py
"""
Matrices de incidencia puntos × k-subespacios y su rango sobre Z/p^e.

El núcleo izquierdo (y·A ≡ 0 mod m) describe las combinaciones de
k-subespacios que dan un multiconjunto con todos los puntos ≡ 0 (mod m).
"""
import itertools
import logging
from dataclasses import dataclass, field

from divisible_codes.conf import get_option
from qarith.arithmetic import prime_power, qbin, vp
from qarith.exceptions import BudgetExceeded
from qarith.fields import field_for

from .constructions import span_points


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IncidenceMatrix:
    v: int
    q: int
    k: int
    points: tuple
    subspaces: tuple
    rows: tuple

    def row_sums(self):
        return [sum(r) for r in self.rows]

    def column_sums(self):
        return [sum(r[j] for r in self.rows) for j in range(len(self.subspaces))]


def subspaces(v, k, q):
    """
    Genera los k-subespacios de F_q^v como bases en forma escalonada
    reducida (una por subespacio).
    """
    for pivots in itertools.combinations(range(v), k):
        free = [
            (i, j) for i, c in enumerate(pivots)
            for j in range(c + 1, v) if j not in pivots
        ]
        for values in itertools.product(range(q), repeat=len(free)):
            basis = [[0] * v for _ in range(k)]
            for i, c in enumerate(pivots):
                basis[i][c] = 1
            for (i, j), x in zip(free, values):
                basis[i][j] = x
            yield [tuple(b) for b in basis]


def incidence_matrix(v, q, k):
    count = qbin(v, k, q)
    budget = get_option("HYPERPLANE_BUDGET")
    if count > budget:
        raise BudgetExceeded(f"qbin({v},{k},{q}) = {count} subespacios supera el presupuesto ({budget}).")
    F = field_for(q)
    points = tuple(F.points(v))
    index = {p: i for i, p in enumerate(points)}
    spaces = []
    rows = [[0] * count for _ in points]
    for j, basis in enumerate(subspaces(v, k, q)):
        spaces.append(tuple(basis))
        for p in span_points(F, basis):
            rows[index[p]][j] = 1
    return IncidenceMatrix(
        v=v, q=q, k=k, points=points, subspaces=tuple(spaces),
        rows=tuple(tuple(r) for r in rows),
    )


# ==========================
# Rango módulo p^e
# ==========================

@dataclass
class RankProfile:
    modulus: int
    invariants: list = field(default_factory=list)
    kernel: list = field(default_factory=list)

    @property
    def rank(self):
        return sum(1 for d in self.invariants if d % self.modulus)

    @property
    def kernel_dimension(self):
        """Generadores libres (de orden m) del núcleo izquierdo."""
        return sum(1 for d in self.invariants if d == 0)

    def to_dict(self):
        return {
            "modulus": self.modulus,
            "rank": self.rank,
            "kernel_dimension": self.kernel_dimension,
            "invariants": self.invariants,
            "kernel": self.kernel,
        }


def rank_mod(A, m):
    """
    Forma normal de Smith de A sobre Z/m (m = p^e) con seguimiento de las
    operaciones de fila U, de modo que U·A·V = diag(d_i).

    - invariants: d_i = p^{a_i} (0 si la entrada es nula), uno por fila.
    - kernel: generadores del núcleo izquierdo; filas de U para d_i = 0 y
      (m/d_i)·U_i para los d_i no unitarios.
    """
    p, e = prime_power(m)
    rows = [[int(x) % m for x in r] for r in A]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    U = [[1 if i == j else 0 for j in range(n_rows)] for i in range(n_rows)]
    invariants = []

    for t in range(min(n_rows, n_cols)):
        best = None
        for i in range(t, n_rows):
            for j in range(t, n_cols):
                if rows[i][j]:
                    a = vp(rows[i][j], p)
                    if best is None or a < best[0]:
                        best = (a, i, j)
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        a, i, j = best
        rows[t], rows[i] = rows[i], rows[t]
        U[t], U[i] = U[i], U[t]
        for r in rows:
            r[t], r[j] = r[j], r[t]

        unit = rows[t][t] // p ** a
        inverse = pow(unit, -1, m)
        rows[t] = [(x * inverse) % m for x in rows[t]]
        U[t] = [(x * inverse) % m for x in U[t]]
        pivot = p ** a

        for i in range(n_rows):
            if i != t and rows[i][t]:
                f = rows[i][t] // pivot
                rows[i] = [(x - f * y) % m for x, y in zip(rows[i], rows[t])]
                U[i] = [(x - f * y) % m for x, y in zip(U[i], U[t])]
        for j in range(t + 1, n_cols):
            if rows[t][j]:
                f = rows[t][j] // pivot
                for r in rows:
                    r[j] = (r[j] - f * r[t]) % m
        invariants.append(pivot)

    invariants += [0] * (n_rows - len(invariants))
    kernel = []
    for i, d in enumerate(invariants):
        if d == 0:
            kernel.append(U[i])
        elif d != 1:
            kernel.append([(x * (m // d)) % m for x in U[i]])
    logger.debug("rank_mod(m=%s): invariantes %s", m, invariants)
    return RankProfile(modulus=m, invariants=invariants, kernel=kernel)


def check_kernel(A, profile):
    """Comprueba y·A ≡ 0 (mod m) para cada generador del núcleo."""
    m = profile.modulus
    n_cols = len(A[0]) if A else 0
    return all(
        all(sum(y[i] * A[i][j] for i in range(len(A))) % m == 0 for j in range(n_cols))
        for y in profile.kernel
    )

