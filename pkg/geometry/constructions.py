# geometry/constructions.py
"""
Construcciones de multiconjuntos divisibles (testigos de realizabilidad).

Cada construcción que tiene un contrato de divisibilidad se verifica al
final con is_divisible siempre que el número de hiperplanos quepa en el
presupuesto; si no cabe, solo se registra en el log.
"""
import itertools
import logging

from django.core.exceptions import ValidationError

from divisible_codes.conf import get_option
from qarith.arithmetic import bracket, prime_power
from qarith.fields import _digits, field_for

from .multisets import (
    PointMultiset,
    divisibility_exponent,
    field_rank,
    is_divisible,
    max_multiplicity,
    signed_sum,
)


logger = logging.getLogger(__name__)


def _checked(M, delta, name):
    if bracket(M.v, M.q) > get_option("HYPERPLANE_BUDGET"):
        logger.info("%s: %s sin verificar (demasiados hiperplanos).", name, M)
        return M
    if not is_divisible(M, delta):
        raise ValidationError(f"{name}: el resultado no es {delta}-divisible.")
    return M


def _unit(v, i):
    return tuple(1 if j == i else 0 for j in range(v))


# ==========================
# Subespacios
# ==========================

def span_points(F, basis):
    """Puntos normalizados del subespacio generado por `basis`."""
    basis = [tuple(b) for b in basis]
    if not basis:
        return set()
    v = len(basis[0])
    points = set()
    for coefficients in itertools.product(range(F.q), repeat=len(basis)):
        vector = (0,) * v
        for c, b in zip(coefficients, basis):
            if c:
                vector = F.add_vectors(vector, F.scale(c, b))
        if any(vector):
            points.add(F.normalize_point(vector))
    return points


def extract_basis(F, points):
    """Subconjunto linealmente independiente maximal (orden de entrada)."""
    basis = []
    for p in points:
        if field_rank(F, basis + [list(p)]) > len(basis):
            basis.append(list(p))
    return [tuple(b) for b in basis]


def lines_through(M, point):
    """{recta por `point` (frozenset de puntos): M(recta)}."""
    F = M.field
    point = F.normalize_point(tuple(point))
    lines = {}
    for other in F.points(M.v):
        if other == point:
            continue
        line = frozenset(span_points(F, [point, other]))
        if line not in lines:
            lines[line] = sum(M[p] for p in line)
    return lines


def contains_subspace(M, basis):
    return all(M[p] > 0 for p in span_points(M.field, basis))


def characteristic(q, v, points):
    return PointMultiset(q, v, {tuple(p): 1 for p in points})


# ==========================
# Familias básicas
# ==========================

def simplex(k, q):
    """Todos los puntos de PG(k-1,q): q^{k-1}-divisible, [k]_q puntos."""
    F = field_for(q)
    return characteristic(q, k, F.points(k))


def affine(k, q):
    """Puntos con primera coordenada no nula: q^{k-1} puntos, q^{k-2}-divisible."""
    F = field_for(q)
    return characteristic(q, k, (p for p in F.points(k) if p[0]))


def projective_base(k):
    """e_1, …, e_k y el punto de unos sobre F_2 (k+1 puntos, 2-divisible)."""
    if k < 2:
        raise ValidationError("La base proyectiva requiere k >= 2.")
    points = [_unit(k, i) for i in range(k)] + [(1,) * k]
    return characteristic(2, k, points)


def repeat(M, t):
    return M.scaled(t)


def disjoint_sum(first, second):
    """Suma directa en coordenadas v₁ + v₂ (soportes en subespacios complementarios)."""
    if first.q != second.q:
        raise ValidationError("Los sumandos deben estar sobre el mismo cuerpo.")
    v = first.v + second.v
    counts = {p + (0,) * second.v: m for p, m in first.items()}
    counts.update({(0,) * first.v + p: m for p, m in second.items()})
    return PointMultiset(first.q, v, counts)


def complement(M, lam):
    """λ-complemento: P -> λ - M(P) sobre todos los puntos."""
    if max_multiplicity(M) > lam:
        raise ValidationError(f"La multiplicidad máxima supera λ = {lam}.")
    return PointMultiset(M.q, M.v, {p: lam - M[p] for p in M.field.points(M.v)})


# ==========================
# Conos
# ==========================

def _cone(s, base):
    q, v = base.q, base.v + s
    counts = {}
    for p, m in base.items():
        for tail in itertools.product(range(q), repeat=s):
            counts[p + tail] = m
    return PointMultiset(q, v, counts)


def cone_minus_vertex(s, base, r=None):
    """
    Cono con vértice un s-espacio X sobre `base`, sin los puntos de X.
    Requiere #B ≡ 0 (mod q^{r+1}); resultado q^{r+s}-divisible de #B·q^s puntos.
    """
    q = base.q
    r = divisibility_exponent(base) if r is None else r
    if base.size % q ** (r + 1):
        raise ValidationError(f"#B = {base.size} no es múltiplo de q^{r + 1}.")
    return _checked(_cone(s, base), q ** (r + s), "cone_minus_vertex")


def cone_with_vertex(s, base, r=None):
    """
    Cono incluyendo el vértice. Requiere #B·(q-1) ≡ -1 (mod q^{r+1});
    resultado q^{r+s}-divisible de #B·q^s + [s]_q puntos.
    """
    q = base.q
    r = divisibility_exponent(base) if r is None else r
    if (base.size * (q - 1) + 1) % q ** (r + 1):
        raise ValidationError(f"#B·(q-1) = {base.size * (q - 1)} no es ≡ -1 mod q^{r + 1}.")
    cone = _cone(s, base)
    vertex = characteristic(q, cone.v, ((0,) * base.v + p for p in cone.field.points(s)))
    return _checked(cone + vertex, q ** (r + s), "cone_with_vertex")


# ==========================
# Switching
# ==========================

def switching(M, subspace):
    """
    Sustituye un r-espacio S ⊆ supp(M) por q-1 subespacios afines de
    dimensión r+1: M + Σ χ_{T_i} − q·χ_S en dimensión v + (q-1).
    """
    q, F = M.q, M.field
    points = {F.normalize_point(tuple(p) + (0,) * (M.v - len(p))) for p in subspace}
    basis = extract_basis(F, sorted(points))
    if len(points) != bracket(len(basis), q):
        raise ValidationError("Los puntos dados no forman un subespacio.")
    if any(M[p] < 1 for p in points):
        raise ValidationError("El subespacio S debe estar contenido en el soporte de M.")

    r = len(basis)
    v = M.v + q - 1
    pad = (0,) * (q - 1)
    embedded = [b + pad for b in basis]
    terms = [(1, M.embed(v)), (-q, characteristic(q, v, (p + pad for p in points)))]
    for i in range(q - 1):
        T = span_points(F, embedded + [_unit(v, M.v + i)])
        terms.append((1, characteristic(q, v, T)))
    result = signed_sum(q, v, terms)
    logger.debug("switching: %s -> %s", M, result)
    return _checked(result, q ** r, "switching")


def generalized_switching(M, parts, D, rho):
    """M + Σ M_i − ρ·D con exactamente ρ-1 piezas M_i."""
    if len(parts) != rho - 1:
        raise ValidationError(f"Se necesitan ρ-1 = {rho - 1} piezas (hay {len(parts)}).")
    terms = [(1, M)] + [(1, part) for part in parts] + [(-rho, D)]
    return signed_sum(M.q, M.v, terms)


def affine_switching(r):
    """
    Conjunto 2^r-divisible de r·2^{r+1}+1 puntos sobre F_2: unión de r
    espacios afines de dimensión r+1 en PG(2r,2) más el switching del
    r-espacio <e_{r+2}, …, e_{2r+1}>.
    """
    if r < 2:
        raise ValidationError("affine_switching requiere r >= 2.")
    v = 2 * r + 1
    counts = {}
    for i in range(1, r + 1):
        for tail in itertools.product((0, 1), repeat=r + 1):
            vector = [0] * v
            vector[i - 1:i + r] = tail
            vector[i + r] = 1
            counts[tuple(vector)] = 1
    M = PointMultiset(2, v, counts)
    S = span_points(M.field, [_unit(v, j) for j in range(r + 1, v)])
    return switching(M, S)


# ==========================
# Extensión de paridad (q = 2)
# ==========================

def parity_extension(M, r):
    """
    2^r-divisible -> 2^{r+1}-divisible añadiendo 2^r·P, donde
    P_i = ((#M - M(e_i^⊥)) / 2^r) mod 2.
    """
    if M.q != 2:
        raise ValidationError("La extensión de paridad solo está definida para q = 2.")
    step = 2 ** r
    coordinates = []
    for i in range(M.v):
        holes = M.size - sum(m for p, m in M.items() if p[i] == 0)
        if holes % step:
            raise ValidationError(f"M no es {step}-divisible.")
        coordinates.append((holes // step) % 2)
    result = M
    if any(coordinates):
        result = M + PointMultiset(2, M.v, {tuple(coordinates): step})
    if not is_divisible(result, 2 * step):
        raise ValidationError(f"La extensión de paridad no es {2 * step}-divisible.")
    return result


# ==========================
# Cuerpos de extensión
# ==========================

def _prime_base(q, l):
    p, m = prime_power(q)
    if m != l:
        raise ValidationError(f"F_{q} no es una extensión de grado {l} de un cuerpo primo.")
    return p


def _expand(vector, p, l):
    return tuple(c for x in vector for c in _digits(x, p, l))


def _field_reduction(F_big, vector, p, l):
    """Puntos de PG(vl-1,p) que forman el punto <vector> de F_{p^l}."""
    F_small = field_for(p)
    return {
        F_small.normalize_point(_expand(F_big.scale(alpha, vector), p, l))
        for alpha in range(1, F_big.q)
    }


def desarguesian_spread(r, q):
    """Spread de r-espacios de PG(2r-1,q), q primo, vía PG(1,q^r)."""
    p, m = prime_power(q)
    if m != 1:
        raise ValidationError("desarguesian_spread requiere q primo.")
    K = field_for(q ** r)
    elements = [(1, b) for b in range(K.q)] + [(0, 1)]
    return [sorted(_field_reduction(K, e, q, r)) for e in elements]


def concatenate_simplex(M, l):
    """
    Concatenación con el código símplex: cada punto de F_{p^l}^v se
    sustituye por los [l]_p puntos de su (l-1)-espacio sobre F_p.
    """
    p = _prime_base(M.q, l)
    counts = {}
    for point, m in M.items():
        for small in _field_reduction(M.field, point, p, l):
            counts[small] = counts.get(small, 0) + m
    return PointMultiset(p, M.v * l, counts)


def baer(M, l):
    """Interpreta un multiconjunto sobre F_p como multiconjunto sobre F_{p^l}."""
    p, m = prime_power(M.q)
    if m != 1:
        raise ValidationError("baer requiere un cuerpo base primo.")
    return PointMultiset(p ** l, M.v, M.counts())


def affine_baer_subspace(l, q):
    """χ_S − χ_T con S un l-subespacio de Baer de PG(l,q²) y T un hiperplano de S."""
    return baer(affine(l + 1, q), 2)


def elliptic_quadric(q, v=4):
    """
    Cuádrica elíptica Q⁻(v-1,q), v par: x0·x1 + … + x_{v-4}·x_{v-3} más la
    forma anisótropa x² + x·y + c·y² en las dos últimas coordenadas.
    v = 4 es el ovoide (q²+1 puntos, q-divisible); en general el conjunto
    es q^{v/2-1}-divisible y contiene subespacios de dimensión v/2 - 1.
    """
    if v < 4 or v % 2:
        raise ValidationError(f"La cuádrica elíptica requiere v par y >= 4 (recibido {v}).")
    F = field_for(q)
    c = next(
        c for c in range(q)
        if all(F.add(F.add(F.mul(t, t), t), c) for t in range(q))
    )

    def form(x):
        value = 0
        for i in range(0, v - 2, 2):
            value = F.add(value, F.mul(x[i], x[i + 1]))
        s, t = x[v - 2], x[v - 1]
        value = F.add(value, F.add(F.mul(s, s), F.mul(s, t)))
        return F.add(value, F.mul(c, F.mul(t, t)))

    return _checked(
        characteristic(q, v, (x for x in F.points(v) if form(x) == 0)),
        q ** (v // 2 - 1),
        "elliptic_quadric",
    )
