# applications/vsp.py
"""
Condiciones necesarias para particiones de PG(v-1, q) en subespacios
(vector space partitions) de un tipo dado t_k^{m_k} ... t_1^{m_1}.

Orden de las comprobaciones (se informa la primera que falla):
  1) recuento de puntos: Σ m_d [d]_q = [v]_q
  2) dimensión: m_i + m_j <= 1 si i + j > v (m_i <= 1 si 2i > v)
  3) prefijos: los puntos de los elementos de dimensión <= t_s forman un
     conjunto q^{t_{s+1}-1}-divisible, que no puede estar excluido
  4) estructura: hechos de clasificación del fichero de datos
  5) cola: condiciones sobre m_{t_1} (versión clásica y mejorada)
"""
import logging
import re
from dataclasses import dataclass, field

from django.core.exceptions import ValidationError

from exclusion.classify import load_data
from qarith.arithmetic import bracket, prime_power

from .spreads import DescentOracle


logger = logging.getLogger(__name__)

TOKEN = re.compile(r"^(\d+)\^(\d+)$")


@dataclass(frozen=True)
class VspType:
    q: int
    v: int
    dims: dict = field(default_factory=dict)

    def __post_init__(self):
        for d, m in self.dims.items():
            if not 1 <= d <= self.v:
                raise ValidationError(f"Dimensión {d} fuera de 1..{self.v}.")
            if m < 0:
                raise ValidationError(f"Multiplicidad negativa para la dimensión {d}.")

    @property
    def present(self):
        """Dimensiones con m_d > 0, de menor a mayor."""
        return sorted(d for d, m in self.dims.items() if m > 0)

    def count(self, d):
        return self.dims.get(d, 0)

    @property
    def points(self):
        return sum(m * bracket(d, self.q) for d, m in self.dims.items())

    def __str__(self):
        return " ".join(f"{d}^{self.count(d)}" for d in reversed(self.present))


def parse_vsp_type(text, q, v):
    """
    "4^16 3^1 2^2 1^2" -> VspType. Las dimensiones omitidas tienen
    multiplicidad 0.
    """
    prime_power(q)
    dims = {}
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValidationError("El tipo está vacío.")
    for token in tokens:
        match = TOKEN.match(token)
        if not match:
            raise ValidationError(f"Término mal formado: '{token}' (se espera d^m, p. ej. 4^16).")
        d, m = int(match.group(1)), int(match.group(2))
        if d in dims:
            raise ValidationError(f"La dimensión {d} aparece dos veces.")
        dims[d] = m
    return VspType(q=q, v=v, dims=dims)


@dataclass
class VspVerdict:
    passed: bool
    condition: str = ""
    reason: str = ""
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "passed": self.passed,
            "condition": self.condition,
            "reason": self.reason,
            "details": self.details,
        }


def _fail(condition, reason, **details):
    return VspVerdict(False, condition, reason, details)


# ==========================
# Condiciones de cola
# ==========================

def tail_violation(q, d1, d2, n1):
    """Condición clásica sobre n1 = m_{d1}; devuelve el caso violado o None."""
    step = q ** (d2 - d1)
    if n1 % step:
        if d2 < 2 * d1:
            return None if n1 >= q ** d1 + 1 else "i"
        spread = d2 % d1 == 0 and n1 == (q ** d2 - 1) // (q ** d1 - 1)
        return None if n1 > 2 * step or spread else "ii"
    if d2 < 2 * d1:
        return None if n1 >= q ** d2 - q ** d1 + step else "iii"
    return None if n1 >= q ** d2 else "iv"


def improved_tail_violation(q, d1, d2, n1):
    """Versión mejorada (conjuntos q^{d2-d1}-divisibles de d1-subespacios)."""
    if n1 < q ** d1 + 1:
        return "i"
    if d2 >= 2 * d1:
        a, b = divmod(d2, d1)
        if b == 0:
            low = (q ** d2 - 1) // (q ** d1 - 1)
        else:
            low = (q ** ((a + 1) * d1) - 1) // (q ** d1 - 1)
        if n1 < low:
            return "i"
    if n1 % q ** (d2 - d1) == 0:
        low = q ** d2 - q ** d1 + q ** (d2 - d1) if d2 < 2 * d1 else q ** d2
        if n1 < low:
            return "ii"
    return None


# ==========================
# Hechos de clasificación
# ==========================

def known_space_count(q, r, n, facts):
    """
    l si todo conjunto q^r-divisible de n puntos es unión disjunta de l
    subespacios de dimensión r+1 según los datos; None si no se sabe.
    """
    size = bracket(r + 1, q)
    if facts.get("single_space") and n == size:
        return 1
    for entry in facts.get("disjoint_spaces", []):
        if (entry["q"], entry["r"], entry["n"]) == (q, r, n):
            return entry["spaces"]
    return None


def _prefixes(vsp):
    dims = vsp.present
    total = 0
    for s in range(len(dims) - 1):
        total += vsp.count(dims[s]) * bracket(dims[s], vsp.q)
        yield dims[: s + 1], total, dims[s + 1]


# ==========================
# Comprobación completa
# ==========================

def vsp_feasible(vsp, data=None):
    data = load_data() if data is None else data
    q, v = vsp.q, vsp.v
    facts = data.get("vsp_facts", {})

    if vsp.points != bracket(v, q):
        return _fail(
            "points",
            f"Σ m_d [d]_q = {vsp.points} distinto de [{v}]_{q} = {bracket(v, q)}.",
            points=vsp.points, expected=bracket(v, q),
        )

    dims = vsp.present
    for i in dims:
        for j in dims:
            if i <= j and i + j > v:
                used = vsp.count(i) if i == j else vsp.count(i) + vsp.count(j)
                if used > 1:
                    return _fail(
                        "dimension",
                        f"Un {i}-espacio y un {j}-espacio disjuntos no caben en dimensión {v}.",
                        i=i, j=j,
                    )

    oracles = {}
    for lower, n, nxt in _prefixes(vsp):
        r = nxt - 1
        oracle = oracles.setdefault(r, DescentOracle(q, r, data))
        certificate = oracle.certificate(n)
        if certificate:
            return _fail(
                "prefix",
                f"Los {n} puntos de los elementos de dimensión <= {lower[-1]} "
                f"formarían un conjunto {q}^{r}-divisible, que no existe.",
                n=n, r=r, certificate=certificate,
            )

    for lower, n, nxt in _prefixes(vsp):
        r = nxt - 1
        spaces = known_space_count(q, r, n, facts)
        if spaces is not None:
            big = sum(vsp.count(d) for d in lower if 2 * d > nxt)
            if big > spaces:
                return _fail(
                    "structure",
                    f"Los {n} puntos son {spaces} subespacios de dimensión {nxt} disjuntos; "
                    f"no contienen {big} elementos de dimensión > {nxt}/2.",
                    n=n, r=r, spaces=spaces,
                )
        if facts.get("no_line_in_affine_size") and n == q ** nxt:
            lines = [d for d in lower if d >= 2]
            if lines:
                return _fail(
                    "structure",
                    f"Un conjunto {q}^{r}-divisible de {n} puntos no contiene rectas.",
                    n=n, r=r, dimension=lines[0],
                )

    if len(dims) >= 2:
        d1, d2 = dims[0], dims[1]
        n1 = vsp.count(d1)
        case = tail_violation(q, d1, d2, n1)
        if case:
            return _fail("tail", f"La cola de {n1} elementos de dimensión {d1} viola el caso ({case}).",
                         d1=d1, d2=d2, case=case)
        case = improved_tail_violation(q, d1, d2, n1)
        if case:
            return _fail("tail-improved",
                         f"La cola de {n1} elementos de dimensión {d1} viola la cota mejorada ({case}).",
                         d1=d1, d2=d2, case=case)

    logger.debug("Tipo %s en PG(%s,%s): sin contradicción", vsp, v - 1, q)
    return VspVerdict(True)
