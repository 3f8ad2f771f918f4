# geometry/multisets.py
"""
Multiconjuntos de puntos de PG(v-1,q) y su correspondencia con códigos.

- PointMultiset: puntos normalizados -> multiplicidad.
- GeneratorMatrix: matriz k×n sobre F_q (columnas = puntos).
- Oráculos por fuerza bruta: distribución de pesos (todas las palabras)
  y espectro (todos los hiperplanos), vectorizados con numpy.
"""
import logging
from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ValidationError

from divisible_codes.conf import get_option
from macwilliams.distributions import Spectrum, WeightDistribution
from qarith.arithmetic import bracket
from qarith.exceptions import BudgetExceeded
from qarith.fields import field_for


logger = logging.getLogger(__name__)

BLOCK = 2 ** 14


class PointMultiset:
    """
    Multiconjunto de puntos de PG(v-1,q). Las claves se normalizan
    (primera coordenada no nula = 1); las multiplicidades nulas se descartan.
    """

    def __init__(self, q, v, counts=None, zero_columns=0):
        self.q = q
        self.v = v
        self.field = field_for(q)
        self.zero_columns = zero_columns
        self._counts = {}
        for point, mult in (counts or {}).items():
            if len(point) != v:
                raise ValidationError(f"El punto {point} no tiene {v} coordenadas.")
            if mult < 0:
                raise ValidationError(f"Multiplicidad negativa en {point}.")
            if mult:
                key = self.field.normalize_point(tuple(point))
                self._counts[key] = self._counts.get(key, 0) + mult

    @classmethod
    def from_points(cls, q, v, points):
        counts = {}
        F = field_for(q)
        for p in points:
            key = F.normalize_point(tuple(p))
            counts[key] = counts.get(key, 0) + 1
        return cls(q, v, counts)

    # ---------- Acceso ----------

    @property
    def size(self):
        return sum(self._counts.values())

    def __len__(self):
        return self.size

    def __getitem__(self, point):
        if not any(point):
            return 0
        return self._counts.get(self.field.normalize_point(tuple(point)), 0)

    def items(self):
        return sorted(self._counts.items())

    def support(self):
        return sorted(self._counts)

    def counts(self):
        return dict(self._counts)

    def __eq__(self, other):
        if not isinstance(other, PointMultiset):
            return NotImplemented
        return (self.q, self.v, self._counts) == (other.q, other.v, other._counts)

    def __repr__(self):
        return f"PointMultiset(q={self.q}, v={self.v}, n={self.size})"

    # ---------- Operaciones ----------

    def _check_compatible(self, other):
        if (self.q, self.v) != (other.q, other.v):
            raise ValidationError("Los multiconjuntos viven en espacios distintos.")

    def __add__(self, other):
        self._check_compatible(other)
        counts = self.counts()
        for p, m in other._counts.items():
            counts[p] = counts.get(p, 0) + m
        return PointMultiset(self.q, self.v, counts)

    def scaled(self, t):
        if t < 0:
            raise ValidationError("El factor de repetición debe ser no negativo.")
        return PointMultiset(self.q, self.v, {p: t * m for p, m in self._counts.items()})

    def embed(self, v):
        """Inmersión en PG(v-1,q) añadiendo coordenadas nulas al final."""
        if v < self.v:
            raise ValidationError(f"No se puede sumergir en dimensión menor ({v} < {self.v}).")
        pad = (0,) * (v - self.v)
        return PointMultiset(self.q, v, {p + pad: m for p, m in self._counts.items()})

    def to_dict(self):
        return {
            "q": self.q,
            "v": self.v,
            "n": self.size,
            "points": [[list(p), m] for p, m in self.items()],
        }


def signed_sum(q, v, terms):
    """Σ c_i·M_i; lanza ValidationError si alguna multiplicidad queda negativa."""
    counts = {}
    for coefficient, M in terms:
        if (M.q, M.v) != (q, v):
            raise ValidationError("Los multiconjuntos viven en espacios distintos.")
        for p, m in M.items():
            counts[p] = counts.get(p, 0) + coefficient * m
    negative = [p for p, m in counts.items() if m < 0]
    if negative:
        raise ValidationError(f"Multiplicidad negativa en {negative[0]}.")
    return PointMultiset(q, v, counts)


# ==========================
# Matrices generadoras
# ==========================

@dataclass(frozen=True)
class GeneratorMatrix:
    q: int
    rows: tuple

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValidationError("Todas las filas deben tener la misma longitud.")
        if any(not 0 <= x < self.q for r in self.rows for x in r):
            raise ValidationError(f"Hay entradas fuera de F_{self.q}.")

    @property
    def k(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows[0]) if self.rows else 0

    def columns(self):
        return [tuple(r[j] for r in self.rows) for j in range(self.n)]

    @property
    def effective_length(self):
        return sum(1 for c in self.columns() if any(c))

    def rank(self):
        return field_rank(field_for(self.q), [list(r) for r in self.rows])

    def as_array(self):
        return np.array(self.rows, dtype=np.int64).reshape(self.k, self.n)


def field_rank(F, rows):
    """Rango sobre F_q por eliminación gaussiana."""
    m = [list(r) for r in rows]
    rank = 0
    width = len(m[0]) if m else 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = F.inv(m[rank][col])
        m[rank] = [F.mul(inv, x) for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def multiset_from_matrix(G: GeneratorMatrix) -> PointMultiset:
    counts = {}
    zero = 0
    F = field_for(G.q)
    for column in G.columns():
        if not any(column):
            zero += 1
            continue
        key = F.normalize_point(column)
        counts[key] = counts.get(key, 0) + 1
    return PointMultiset(G.q, G.k, counts, zero_columns=zero)


def matrix_from_multiset(M: PointMultiset) -> GeneratorMatrix:
    columns = [p for p, m in M.items() for _ in range(m)]
    rows = tuple(tuple(c[i] for c in columns) for i in range(M.v))
    return GeneratorMatrix(q=M.q, rows=rows)


# ==========================
# Oráculos por fuerza bruta
# ==========================

def weight_distribution_bruteforce(G: GeneratorMatrix) -> WeightDistribution:
    """Enumera las q^k palabras código por bloques."""
    q, k, n = G.q, G.k, G.n
    total = q ** k
    budget = get_option("ENUMERATION_BUDGET")
    if total > budget:
        raise BudgetExceeded(f"q^k = {total} palabras supera el presupuesto ({budget}).")
    F = field_for(q)
    add, mul = F.add_table(), F.mul_table()
    matrix = G.as_array()
    counts = np.zeros(n + 1, dtype=np.int64)
    for start in range(0, total, BLOCK):
        idx = np.arange(start, min(total, start + BLOCK), dtype=np.int64)
        acc = np.zeros((len(idx), n), dtype=np.int64)
        for i in range(k):
            coefficient = (idx // q ** i) % q
            acc = add[acc, mul[coefficient[:, None], matrix[i][None, :]]]
        counts += np.bincount(np.count_nonzero(acc, axis=1), minlength=n + 1)
    return WeightDistribution(q=q, n=n, k=k, A=tuple(int(c) for c in counts))


def _hyperplane_array(M):
    count = bracket(M.v, M.q)
    budget = get_option("HYPERPLANE_BUDGET")
    if count > budget:
        raise BudgetExceeded(f"[v]_q = {count} hiperplanos supera el presupuesto ({budget}).")
    return np.array(list(M.field.points(M.v)), dtype=np.int64).reshape(count, M.v)


def hyperplane_multiplicities(M: PointMultiset):
    """Lista (h, M(H)) para todos los hiperplanos H = h^⊥."""
    H = _hyperplane_array(M)
    support = M.items()
    if not support:
        return [(tuple(int(x) for x in h), 0) for h in H]
    P = np.array([p for p, _ in support], dtype=np.int64)
    w = np.array([m for _, m in support], dtype=np.int64)
    add, mul = M.field.add_table(), M.field.mul_table()
    values = []
    for start in range(0, len(H), BLOCK):
        block = H[start:start + BLOCK]
        acc = np.zeros((len(block), len(P)), dtype=np.int64)
        for j in range(M.v):
            acc = add[acc, mul[block[:, j][:, None], P[:, j][None, :]]]
        values.extend(((acc == 0) @ w).tolist())
    return [(tuple(int(x) for x in h), int(m)) for h, m in zip(H, values)]


def spectrum_bruteforce(M: PointMultiset) -> Spectrum:
    a = [0] * (M.size + 1)
    for _, m in hyperplane_multiplicities(M):
        a[m] += 1
    return Spectrum(q=M.q, k=M.v, n=M.size, a=tuple(a))


def is_divisible(M: PointMultiset, delta) -> bool:
    """M(H) ≡ #M (mod Δ) para todo hiperplano H."""
    n = M.size
    if n == 0:
        return True
    return all((n - m) % delta == 0 for _, m in hyperplane_multiplicities(M))


def divisibility_exponent(M: PointMultiset):
    """Mayor r con M q^r-divisible (acotado por log_q #M)."""
    r = 0
    while M.q ** (r + 1) <= max(M.size, 1) and is_divisible(M, M.q ** (r + 1)):
        r += 1
    return r


def max_multiplicity(M: PointMultiset):
    return max((m for _, m in M.items()), default=0)


def dim_span(M: PointMultiset):
    return field_rank(M.field, [list(p) for p in M.support()])


def restrict(M: PointMultiset, h) -> PointMultiset:
    """Restricción a H = h^⊥ (mismas coordenadas)."""
    F = M.field
    return PointMultiset(M.q, M.v, {p: m for p, m in M.items() if F.dot(p, h) == 0})
