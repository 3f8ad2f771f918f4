# exclusion/classify.py
"""
Clasificación de cardinalidades de conjuntos (y multiconjuntos con
multiplicidad máxima λ) q^r-divisibles en Realizable / Excluida / Abierta.

1) Realizable: cierre por sumas de los ejemplos base (construcciones de
   geometry y cardinalidades publicadas del fichero de datos).
2) Excluida, en este orden: intervalos, condición lineal (con poda de los
   valores de hiperplano), cuadrática, cúbica, descenso, PL sin dimensión
   y tabla de exclusiones esporádicas.
3) Abierta en otro caso.
"""
import json
import logging
from dataclasses import dataclass, field

from django.core.exceptions import ValidationError

from divisible_codes.conf import get_option
from lengths.expansion import multiset_feasible
from qarith.arithmetic import bracket, prime_power

from .criteria import (
    attainable_hyperplane_values,
    cubic_condition,
    descent,
    interval_exclusion,
    linear_condition,
    quadratic_condition,
    verify_certificate,
)
from .models import LengthVerdict


logger = logging.getLogger(__name__)

Status = LengthVerdict.Status


# ==========================
# Datos
# ==========================

def load_data(extra_path=None):
    """
    Lee el fichero de datos configurado (CLASSIFICATION_DATA) y, si se da
    `extra_path`, añade sus ejemplos base y exclusiones esporádicas.
    """
    with open(get_option("CLASSIFICATION_DATA"), encoding="utf-8") as fh:
        data = json.load(fh)
    if extra_path:
        try:
            with open(extra_path, encoding="utf-8") as fh:
                extra = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise ValidationError(f"No se puede leer la configuración {extra_path}: {e}")
        data["base_examples"] = data.get("base_examples", []) + extra.get("base_examples", [])
        data["sporadic"] = data.get("sporadic", []) + extra.get("sporadic", [])
        facts = data.setdefault("vsp_facts", {})
        extra_facts = dict(extra.get("vsp_facts", {}))
        spaces = facts.get("disjoint_spaces", []) + extra_facts.pop("disjoint_spaces", [])
        facts.update(extra_facts)
        facts["disjoint_spaces"] = spaces
    return data


def base_examples(q, r, data=None):
    """
    [(n, etiqueta)] de conjuntos q^r-divisibles conocidos: familias de
    construcciones más las entradas del fichero de datos.
    """
    data = load_data() if data is None else data
    examples = [
        (bracket(r + 1, q), "simplex"),
        (q ** (r + 1), "affine"),
    ]
    step = q ** (r + 1) - bracket(r + 1, q)
    for j in range(q ** r + 2):
        examples.append((bracket(2 * r, q) + j * step, f"spread-switching j={j}"))
    if q == 2 and r >= 2:
        examples.append((r * 2 ** (r + 1) + 1, "affine-switching"))
    if r == 1 and q > 2:
        examples.append((q * q + 1, "ovoid"))
    if q == 2 and r == 1:
        examples.append((5, "projective-base"))
    p, m = prime_power(q)
    if r == 1 and m % 2 == 0:
        s = p ** (m // 2)
        for j in range(s * s - s + 2):
            examples.append((s ** 4 + s * s + 1 + j * (s ** 4 - bracket(4, s)), f"baer-switching j={j}"))
    for entry in data.get("base_examples", []):
        if (entry["q"], entry["r"]) == (q, r):
            examples.append((entry["n"], entry.get("ref") or entry.get("source", "data")))

    seen = {}
    for n, label in examples:
        if n > 0 and n not in seen:
            seen[n] = label
    return sorted(seen.items())


def sporadic_entry(q, r, n, data):
    return next(
        (e for e in data.get("sporadic", []) if (e["q"], e["r"], e["n"]) == (q, r, n)),
        None,
    )


# ==========================
# Tabla
# ==========================

@dataclass
class LengthStatus:
    n: int
    status: str
    criterion: str = ""
    witness: dict = None
    certificate: dict = None

    def to_dict(self):
        data = {"n": self.n, "status": self.status}
        if self.status == Status.REALIZABLE:
            data["witness"] = self.witness
        elif self.status == Status.EXCLUDED:
            data["criterion"] = self.criterion
            data["certificate"] = self.certificate
        return data


@dataclass
class ClassificationTable:
    q: int
    r: int
    n_max: int
    lam: int = 1
    entries: dict = field(default_factory=dict)

    def __getitem__(self, n):
        if n == 0:
            return LengthStatus(0, Status.REALIZABLE, witness={"parts": []})
        if n not in self.entries:
            raise ValidationError(f"n = {n} fuera de la tabla (n_max = {self.n_max}).")
        return self.entries[n]

    def __iter__(self):
        return iter(self.entries[n] for n in sorted(self.entries))

    def with_status(self, status):
        return [n for n in sorted(self.entries) if self.entries[n].status == status]

    def realizable(self):
        return self.with_status(Status.REALIZABLE)

    def excluded(self):
        return self.with_status(Status.EXCLUDED)

    def open(self):
        return self.with_status(Status.OPEN)

    def is_excluded(self, n):
        return n > 0 and self[n].status == Status.EXCLUDED

    def to_dict(self):
        return {
            "q": self.q,
            "r": self.r,
            "lambda": self.lam,
            "n_max": self.n_max,
            "lengths": {str(e.n): e.to_dict() for e in self},
        }


def _closure(generators, n_max):
    """Cierre por sumas: {n: [sumandos]} para 1 <= n <= n_max."""
    generators = sorted(generators.items())
    parts = {0: []}
    for n in range(1, n_max + 1):
        for g, _ in generators:
            if g > n:
                break
            if n - g in parts:
                parts[n] = parts[n - g] + [g]
                break
    parts.pop(0)
    return parts


def _witness(parts, labels):
    return {"parts": [{"n": g, "source": labels[g]} for g in parts]}


def _lp_certificate(q, r, n, projective=True):
    from lp.rounding import divisible_feasible

    result = divisible_feasible(q, q ** r, n, projective=projective)
    if result.feasible:
        return None
    return {"kind": "lp", "lp_kind": result.kind, "t": result.details.get("t"), "certificate": result.certificate}


# ==========================
# Caso proyectivo (conjuntos)
# ==========================

_cache = {}


def _cache_key(*args, data):
    return args + (json.dumps(data, sort_keys=True),)


def classify_projective(q, r, n_max, data=None, use_lp=True, cross_check=False):
    """
    Tabla de conjuntos q^r-divisibles de cardinalidad 1..n_max.
    Con cross_check, se comprueba además que ningún criterio cerrado
    excluye una cardinalidad realizable.
    """
    if r < 1:
        raise ValidationError("r debe ser >= 1.")
    data = load_data() if data is None else data
    key = _cache_key("projective", q, r, n_max, use_lp, data=data)
    if key in _cache and not cross_check:
        return _cache[key]

    lower = classify_projective(q, r - 1, n_max, data, use_lp) if r > 1 else None
    labels = dict(base_examples(q, r, data))
    reachable = _closure(labels, n_max)
    delta = q ** r
    table = ClassificationTable(q=q, r=r, n_max=n_max)

    for n in range(1, n_max + 1):
        attainable = attainable_hyperplane_values(
            n, q, r, lower_oracle=(lambda m: not lower.is_excluded(m)) if lower else None,
        )
        closed = (
            interval_exclusion(n, q, r)
            or linear_condition(n, q, delta, attainable)
            or quadratic_condition(n, q, delta)
            or cubic_condition(n, q, delta)
            or descent(n, q, r, attainable)
        )
        if n in reachable:
            if cross_check and closed:
                raise AssertionError(f"n = {n} es realizable y {closed['kind']} lo excluye.")
            table.entries[n] = LengthStatus(n, Status.REALIZABLE, witness=_witness(reachable[n], labels))
            continue

        certificate = closed
        if certificate is None and use_lp:
            certificate = _lp_certificate(q, r, n)
        if certificate is None:
            entry = sporadic_entry(q, r, n, data)
            if entry:
                certificate = {"kind": "sporadic", "key": entry["key"]}

        if certificate is None:
            table.entries[n] = LengthStatus(n, Status.OPEN)
        else:
            logger.debug("q=%s r=%s n=%s excluido por %s", q, r, n, certificate["kind"])
            table.entries[n] = LengthStatus(n, Status.EXCLUDED, certificate["kind"], certificate=certificate)

    _cache[key] = table
    return table


# ==========================
# Multiconjuntos con multiplicidad máxima λ
# ==========================

def _q_valuation(t, q):
    e = 0
    while t % q ** (e + 1) == 0:
        e += 1
    return e


def classify_multiset_lambda(q, r, lam, n_max, data=None, use_lp=True):
    """
    λ = 1: conjuntos; λ >= q^r: sin restricción (expansión S_q(r)-ádica).
    En medio, generadores t·n' (t <= λ) con n' realizable a nivel
    q^{r - v_q(t)} y exclusiones válidas para multiconjuntos.
    """
    if lam < 1:
        raise ValidationError("λ debe ser >= 1.")
    data = load_data() if data is None else data
    if lam == 1:
        return classify_projective(q, r, n_max, data, use_lp)

    key = _cache_key("lambda", q, r, lam, n_max, use_lp, data=data)
    if key in _cache:
        return _cache[key]

    table = ClassificationTable(q=q, r=r, n_max=n_max, lam=lam)
    if lam >= q ** r:
        for n in range(1, n_max + 1):
            if multiset_feasible(n, q, r):
                table.entries[n] = LengthStatus(n, Status.REALIZABLE, witness={"expansion": True})
            else:
                table.entries[n] = LengthStatus(
                    n, Status.EXCLUDED, "expansion", certificate={"kind": "expansion"},
                )
        _cache[key] = table
        return table

    labels = {}
    for t in range(1, lam + 1):
        level = r - _q_valuation(t, q)
        if level <= 0:
            sizes = range(1, n_max // t + 1)
        else:
            sizes = classify_projective(q, level, n_max // t, data, use_lp).realizable()
        for size in sizes:
            labels.setdefault(t * size, f"{t}x{size}")
    reachable = _closure(labels, n_max)
    lower = classify_multiset_lambda(q, r - 1, lam, n_max, data, use_lp) if r > 1 else None
    delta = q ** r

    for n in range(1, n_max + 1):
        if n in reachable:
            table.entries[n] = LengthStatus(n, Status.REALIZABLE, witness=_witness(reachable[n], labels))
            continue
        certificate = None
        if not multiset_feasible(n, q, r):
            certificate = {"kind": "expansion"}
        else:
            attainable = attainable_hyperplane_values(
                n, q, r, projective=False,
                lower_oracle=(lambda m: not lower.is_excluded(m)) if lower else None,
            )
            certificate = linear_condition(n, q, delta, attainable) or descent(n, q, r, attainable)
        if certificate is None:
            table.entries[n] = LengthStatus(n, Status.OPEN)
        else:
            table.entries[n] = LengthStatus(n, Status.EXCLUDED, certificate["kind"], certificate=certificate)

    _cache[key] = table
    return table


# ==========================
# Verificación y presentación
# ==========================

def verify_table(table, data=None):
    """[n] de las entradas excluidas cuyo certificado no se verifica."""
    data = load_data() if data is None else data
    failed = []
    for n in table.excluded():
        certificate = table[n].certificate
        if not verify_certificate(certificate, n, table.q, table.r, data.get("sporadic", ())):
            failed.append(n)
    if failed:
        logger.warning("Certificados no verificados (q=%s r=%s): %s", table.q, table.r, failed)
    return failed


def compress(values):
    """[1,2,3,5,7,8] -> "1-3, 5, 7-8"."""
    runs = []
    for n in values:
        if runs and n == runs[-1][1] + 1:
            runs[-1][1] = n
        else:
            runs.append([n, n])
    return ", ".join(str(a) if a == b else f"{a}-{b}" for a, b in runs) or "—"


def render_table(table):
    lam = "" if table.lam == 1 else f" λ={table.lam}"
    return "\n".join([
        f"q={table.q} r={table.r}{lam} (n <= {table.n_max})",
        f"  {Status.REALIZABLE.label}: {compress(table.realizable())}",
        f"  {Status.EXCLUDED.label}: {compress(table.excluded())}",
        f"  {Status.OPEN.label}: {compress(table.open())}",
    ])
