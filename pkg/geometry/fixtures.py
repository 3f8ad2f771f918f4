# geometry/fixtures.py
"""
Matrices generadoras publicadas, guardadas como texto plano en
geometry/data/matrices/<id>.txt:

    q k n
    fila_1
    ...
    fila_k

Cada símbolo es un elemento de F_q en la codificación entera del cuerpo;
los espacios en blanco dentro de una fila se ignoran.
"""
import json
import logging
from functools import lru_cache
from pathlib import Path

from django.core.exceptions import ValidationError

from macwilliams.distributions import WeightDistribution

from .multisets import (
    GeneratorMatrix,
    is_divisible,
    max_multiplicity,
    multiset_from_matrix,
    spectrum_bruteforce,
    weight_distribution_bruteforce,
)


logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent / "data"
MATRIX_DIR = DATA_DIR / "matrices"


@lru_cache(maxsize=None)
def manifest():
    with open(DATA_DIR / "fixtures.json", encoding="utf-8") as fh:
        return json.load(fh)


def fixture_ids():
    return sorted(manifest())


def parse_matrix(text):
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValidationError("Fichero de matriz vacío.")
    try:
        q, k, n = (int(x) for x in lines[0].split())
    except ValueError:
        raise ValidationError("La cabecera debe ser 'q k n'.")
    body = ["".join(line.split()) for line in lines[1:]]
    if len(body) != k:
        raise ValidationError(f"Se esperaban {k} filas (hay {len(body)}).")
    rows = []
    for row in body:
        if len(row) != n:
            raise ValidationError(f"Fila de longitud {len(row)}; se esperaba {n}.")
        rows.append(tuple(int(c, 36) for c in row))
    return GeneratorMatrix(q=q, rows=tuple(rows))


def load_fixture(fixture_id):
    if fixture_id not in manifest():
        raise ValidationError(f"Fixture desconocido: {fixture_id}.")
    path = MATRIX_DIR / f"{fixture_id}.txt"
    return parse_matrix(path.read_text(encoding="utf-8"))


def verify_fixture(fixture_id):
    return verify_matrix(load_fixture(fixture_id), manifest()[fixture_id], fixture_id)


def verify_matrix(G, claims, label="matriz"):
    """
    Informe de verificación de una matriz frente a las propiedades
    declaradas en `claims` (las claves ausentes no se comprueban):
      - longitud, rango (dimensión) y longitud efectiva
      - proyectividad (multiplicidad máxima 1, sin columnas nulas)
      - divisibilidad por Δ
      - distribución de pesos o espectro, si están declarados
    """
    M = multiset_from_matrix(G)
    checks = {
        "length": G.n == claims.get("n", G.n),
        "rank": G.rank() == claims.get("k", G.k),
    }
    report = {
        "id": label,
        "q": G.q,
        "n": G.n,
        "k": G.rank(),
        "effective_length": G.effective_length,
        "projective": max_multiplicity(M) <= 1 and M.zero_columns == 0,
    }
    if "effective_length" in claims:
        checks["effective_length"] = G.effective_length == claims["effective_length"]
    if "projective" in claims:
        checks["projective"] = report["projective"] == claims["projective"]
    if "delta" in claims:
        checks["divisible"] = is_divisible(M, claims["delta"])
    if "weights" in claims:
        W = weight_distribution_bruteforce(G)
        expected = WeightDistribution.from_enumerator(G.q, G.n, G.k, claims["weights"])
        report["weights"] = {str(w): a for w, a in W.enumerator().items()}
        checks["weights"] = W.A == expected.A
    if "spectrum" in claims:
        spectrum = spectrum_bruteforce(M)
        report["spectrum"] = {str(i): a for i, a in enumerate(spectrum.a) if a}
        checks["spectrum"] = report["spectrum"] == {str(i): a for i, a in claims["spectrum"].items()}

    report["checks"] = checks
    report["ok"] = all(checks.values())
    if not report["ok"]:
        failed = [name for name, ok in checks.items() if not ok]
        logger.warning("%s: fallan %s", label, failed)
    else:
        logger.info("%s: verificado", label)
    return report
