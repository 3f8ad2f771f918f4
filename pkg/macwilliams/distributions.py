# macwilliams/distributions.py
"""
Distribuciones de pesos, espectros y la transformada de MacWilliams.

- WeightDistribution: A_0..A_n de un código [n,k]_q.
- Spectrum: a_0..a_s, número de hiperplanos con multiplicidad i.
- Relación para códigos de longitud completa: A_i = (q-1)·a_{n-i}, i >= 1.
"""
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from qarith.arithmetic import bracket, krawtchouk
from qarith.exceptions import InexactDivision


@dataclass(frozen=True)
class WeightDistribution:
    q: int
    n: int
    k: int
    A: tuple

    def __post_init__(self):
        if len(self.A) != self.n + 1:
            raise ValidationError(
                f"La distribución debe tener n+1 = {self.n + 1} entradas (tiene {len(self.A)})."
            )

    # ---------- Construcción / serialización ----------

    @classmethod
    def from_enumerator(cls, q, n, k, counts):
        """counts: {peso: número de palabras}; A_0 = 1 si no se indica."""
        A = [0] * (n + 1)
        A[0] = 1
        for w, c in counts.items():
            A[int(w)] = int(c)
        return cls(q=q, n=n, k=k, A=tuple(A))

    def to_json(self):
        return {"q": self.q, "n": self.n, "k": self.k, "A": [str(a) for a in self.A]}

    @classmethod
    def from_json(cls, data):
        return cls(q=int(data["q"]), n=int(data["n"]), k=int(data["k"]), A=tuple(int(a) for a in data["A"]))

    # ---------- Propiedades ----------

    def enumerator(self):
        """Pesos con A_w != 0, como dict."""
        return {w: a for w, a in enumerate(self.A) if a}

    def errors(self):
        """Lista de invariantes que no se cumplen (vacía si es válida)."""
        problems = []
        if self.A[0] != 1:
            problems.append("A_0 debe ser 1.")
        if sum(self.A) != self.q ** self.k:
            problems.append(f"La suma de los A_i debe ser q^k = {self.q ** self.k}.")
        if any(a < 0 for a in self.A):
            problems.append("Hay entradas negativas.")
        if any(a % (self.q - 1) for a in self.A[1:]):
            problems.append("Los A_i (i >= 1) deben ser múltiplos de q-1.")
        return problems

    def is_valid(self) -> bool:
        return not self.errors()

    def is_divisible_by(self, delta) -> bool:
        return all(a == 0 for w, a in enumerate(self.A) if w % delta)

    def __str__(self):
        terms = [f"{a}x^{w}" if w else str(a) for w, a in enumerate(self.A) if a]
        return " + ".join(terms)


@dataclass(frozen=True)
class Spectrum:
    q: int
    k: int
    n: int
    a: tuple

    def to_json(self):
        return {"q": self.q, "k": self.k, "n": self.n, "a": [str(x) for x in self.a]}

    def support(self):
        return {i: x for i, x in enumerate(self.a) if x}

    def errors(self):
        problems = []
        if sum(self.a) != bracket(self.k, self.q):
            problems.append(f"La suma de los a_i debe ser [k]_q = {bracket(self.k, self.q)}.")
        if any(x < 0 for x in self.a):
            problems.append("Hay entradas negativas.")
        return problems


# ==========================
# Transformada de MacWilliams
# ==========================

def macwilliams_transform(w: WeightDistribution) -> WeightDistribution:
    """
    B_i = q^{-k} Σ_j K_i(j) A_j. Si alguna división no es exacta, la
    distribución de entrada no corresponde a ningún código lineal.
    """
    size = w.q ** w.k
    B = []
    for i in range(w.n + 1):
        total = sum(krawtchouk(i, j, w.n, w.q) * a for j, a in enumerate(w.A) if a)
        if total % size:
            raise InexactDivision(
                f"La suma de Krawtchouk para B_{i} no es divisible por q^k = {size}."
            )
        B.append(total // size)
    return WeightDistribution(q=w.q, n=w.n, k=w.n - w.k, A=tuple(B))


# ==========================
# Espectro <-> distribución
# ==========================

def spectrum_from_distribution(w: WeightDistribution) -> Spectrum:
    if w.A[0] != 1:
        raise ValidationError("A_0 != 1: el multiconjunto no genera PG(k-1,q).")
    a = [0] * (w.n + 1)
    for i in range(1, w.n + 1):
        if w.A[i] % (w.q - 1):
            raise ValidationError(f"A_{i} no es múltiplo de q-1.")
        a[w.n - i] = w.A[i] // (w.q - 1)
    return Spectrum(q=w.q, k=w.k, n=w.n, a=tuple(a))


def distribution_from_spectrum(sp: Spectrum) -> WeightDistribution:
    a = list(sp.a) + [0] * (sp.n + 1 - len(sp.a))
    if a[sp.n]:
        raise ValidationError(
            "Un hiperplano contiene todos los puntos: el multiconjunto no genera PG(k-1,q)."
        )
    A = [1] + [(sp.q - 1) * a[sp.n - i] for i in range(1, sp.n + 1)]
    return WeightDistribution(q=sp.q, n=sp.n, k=sp.k, A=tuple(A))
