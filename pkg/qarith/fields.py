# qarith/fields.py
"""
Cuerpos finitos F_q con q = p^m.

Los elementos se codifican como enteros c_0 + p·c_1 + ... + p^{m-1}·c_{m-1},
donde c_0 + c_1·x + ... es su representante módulo el polinomio del cuerpo.
La multiplicación usa tablas densas de logaritmos / antilogaritmos.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from django.core.exceptions import ValidationError
from sympy import Poly, symbols

from divisible_codes.conf import get_option

from .arithmetic import prime_power


logger = logging.getLogger(__name__)

MAX_FIELD_ORDER = 2 ** 16
MAX_TABLE_ORDER = 2 ** 8

_x = symbols("x")


def _digits(value, p, m):
    out = []
    for _ in range(m):
        out.append(value % p)
        value //= p
    return out


def _encode(digits, p):
    value = 0
    for c in reversed(digits):
        value = value * p + c
    return value


def is_irreducible(coefficients, p):
    """
    coefficients: de menor a mayor grado (c_0, ..., c_m).
    """
    return Poly(list(reversed(coefficients)), _x, modulus=p).is_irreducible


def smallest_irreducible(p, m):
    """Primer polinomio mónico irreducible de grado m en orden de codificación."""
    for tail in range(p ** m):
        coefficients = _digits(tail, p, m) + [1]
        if is_irreducible(coefficients, p):
            return coefficients
    raise ValidationError(f"No existe polinomio irreducible de grado {m} sobre F_{p}.")


class PrimePowerField:
    """
    F_q ≅ F_p[x]/(f) con f mónico irreducible de grado m.

    - `modulus`: coeficientes de f de menor a mayor grado.
    - Operaciones sobre enteros codificados: add, sub, neg, mul, inv, div, pow.
    - `element(c)` devuelve un FieldElement con la sobrecarga de operadores.
    """

    def __init__(self, q, modulus=None):
        p, m = prime_power(q)
        if q > MAX_FIELD_ORDER:
            raise ValidationError(f"Cuerpos con q > {MAX_FIELD_ORDER} no están soportados.")

        if modulus is None:
            modulus = default_modulus(q)
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValidationError(f"El polinomio módulo de F_{q} debe ser mónico de grado {m}.")
        if not is_irreducible(modulus, p):
            raise ValidationError(f"El polinomio {modulus} no es irreducible sobre F_{p}.")

        self.q = q
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self._build_tables()

    def __repr__(self):
        return f"PrimePowerField(q={self.q}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, PrimePowerField) and (self.q, self.modulus) == (other.q, other.modulus)

    def __hash__(self):
        return hash((self.q, self.modulus))

    # ---------- Tablas ----------

    def _poly_mul(self, a, b):
        """Producto de polinomios codificados, reducido módulo f."""
        p, m = self.p, self.m
        da, db = _digits(a, p, m), _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        # Reducción: x^m = -(c_0 + ... + c_{m-1} x^{m-1})
        for deg in range(len(prod) - 1, m - 1, -1):
            coef = prod[deg]
            if coef:
                prod[deg] = 0
                for i in range(m):
                    prod[deg - m + i] = (prod[deg - m + i] - coef * self.modulus[i]) % p
        return _encode(prod[:m], p)

    def _build_tables(self):
        q = self.q
        order = q - 1
        for g in range(1, q):
            exp = [1]
            current = 1
            for _ in range(order - 1):
                current = self._poly_mul(current, g)
                if current == 1:
                    break
                exp.append(current)
            if len(exp) == order:
                break
        else:  # pragma: no cover - F_q^* siempre es cíclico
            raise ValidationError(f"No se encontró elemento primitivo en F_{q}.")

        self.primitive = g
        self._exp = exp + exp
        self._log = [0] * q
        for i, value in enumerate(exp):
            self._log[value] = i
        logger.debug("Tablas de F_%s construidas (primitivo %s).", q, g)

    # ---------- Aritmética sobre enteros codificados ----------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p, m = self.p, self.m
        return _encode([(x + y) % p for x, y in zip(_digits(a, p, m), _digits(b, p, m))], p)

    def neg(self, a):
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p, m = self.p, self.m
        return _encode([(-x) % p for x in _digits(a, p, m)], p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 no tiene inverso en un cuerpo.")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 no tiene inverso en un cuerpo.")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    # ---------- Vectores ----------

    def scale(self, c, vector):
        return tuple(self.mul(c, x) for x in vector)

    def add_vectors(self, u, v):
        return tuple(self.add(a, b) for a, b in zip(u, v))

    def dot(self, u, v):
        total = 0
        for a, b in zip(u, v):
            if a and b:
                total = self.add(total, self.mul(a, b))
        return total

    def normalize_point(self, vector):
        """
        Representante canónico del punto <vector>: la primera coordenada
        no nula pasa a valer 1.
        """
        for x in vector:
            if x:
                return self.scale(self.inv(x), vector)
        raise ValidationError("El vector nulo no define un punto proyectivo.")

    # ---------- Iteración ----------

    def element(self, value):
        return FieldElement(self, value)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    def points(self, v):
        """Puntos normalizados de PG(v-1, q), ordenados por la posición del 1 inicial."""
        for lead in range(v):
            head = (0,) * lead + (1,)
            for tail in itertools.product(range(self.q), repeat=v - lead - 1):
                yield head + tail

    def add_table(self):
        """Tabla de suma q×q (numpy) para enumeraciones vectorizadas."""
        self._check_table_order()
        if not hasattr(self, "_add_table"):
            self._add_table = np.array(
                [[self.add(a, b) for b in range(self.q)] for a in range(self.q)], dtype=np.int64
            )
        return self._add_table

    def mul_table(self):
        self._check_table_order()
        if not hasattr(self, "_mul_table"):
            self._mul_table = np.array(
                [[self.mul(a, b) for b in range(self.q)] for a in range(self.q)], dtype=np.int64
            )
        return self._mul_table

    def _check_table_order(self):
        if self.q > MAX_TABLE_ORDER:
            raise ValidationError(f"Tablas densas de suma solo para q <= {MAX_TABLE_ORDER}.")


@dataclass(frozen=True)
class FieldElement:
    field: PrimePowerField
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValidationError(f"{self.value} no codifica un elemento de F_{self.field.q}.")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValidationError("Operación entre elementos de cuerpos distintos.")
            return other.value
        return other % self.field.q if self.field.m == 1 else other

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"F{self.field.q}({self.value})"


def default_modulus(q):
    """
    Polinomio módulo por defecto: el configurado en DEFAULT_MODULI o,
    si no hay, el primer irreducible mónico (x para cuerpos primos).
    """
    p, m = prime_power(q)
    configured = {int(k): v for k, v in get_option("DEFAULT_MODULI").items()}
    if q in configured:
        return list(configured[q])
    if m == 1:
        return [0, 1]
    return smallest_irreducible(p, m)


@lru_cache(maxsize=None)
def field_for(q):
    """Cuerpo con el módulo por defecto (compartido, inmutable)."""
    return PrimePowerField(q)
