# divisible_codes/conf.py
import json
import logging
import os

from django.conf import settings


logger = logging.getLogger(__name__)

ENV_PREFIX = "DIVISIBLE_CODES_"


def _coerce(raw, default):
    """
    Convierte el texto de una variable de entorno al tipo del valor por defecto.
      - int  -> int (solo dígitos)
      - dict / list -> JSON
      - resto -> texto tal cual
    """
    if isinstance(default, bool):
        return raw.strip().lower() in ("1", "true", "yes", "si", "sí")
    if isinstance(default, int):
        return int(raw)
    if isinstance(default, (dict, list, tuple)):
        return json.loads(raw)
    return raw


def get_option(key):
    """
    Devuelve una opción de cálculo.

    Orden de prioridad:
      1) variable de entorno DIVISIBLE_CODES_<KEY>
      2) settings.DIVISIBLE_CODES[KEY]
    """
    options = getattr(settings, "DIVISIBLE_CODES", {})
    if key not in options:
        raise KeyError(f"Opción desconocida: {key}")
    default = options[key]

    raw = os.environ.get(ENV_PREFIX + key)
    if raw is None:
        return default

    try:
        value = _coerce(raw, default)
    except (ValueError, json.JSONDecodeError):
        logger.warning("Valor inválido en %s%s=%r; se usa el valor por defecto.", ENV_PREFIX, key, raw)
        return default
    return value
