# cli/base.py
"""
Base común de los comandos de gestión.

Cada comando implementa `run(**options)` y devuelve un CommandResult:
  - status 0: cálculo realizado
  - status 2: veredicto de exclusión / infactibilidad
Los errores de uso o de validación salen por CommandError (código 1).

Con --json se escribe la carga en JSON; sin él, el texto legible. Ambos
salen del mismo CommandResult, así que el veredicto coincide.
"""
import json
import logging
import sys
from dataclasses import dataclass, field

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError


logger = logging.getLogger(__name__)

COMPUTED = 0
NEGATIVE_VERDICT = 2


@dataclass
class CommandResult:
    status: int = COMPUTED
    payload: dict = field(default_factory=dict)
    text: str = ""

    def to_json(self, command):
        return json.dumps(
            {"command": command, "status": self.status, **self.payload},
            ensure_ascii=False,
            indent=2,
            default=str,
        )


def parse_counts(text):
    """'0:1, 16:5 24:210' -> {0: 1, 16: 5, 24: 210}"""
    counts = {}
    for token in text.replace(",", " ").split():
        key, sep, value = token.partition(":")
        if not sep:
            raise ValidationError(f"Término mal formado: '{token}' (se espera peso:cantidad).")
        try:
            counts[int(key)] = int(value)
        except ValueError:
            raise ValidationError(f"Término mal formado: '{token}' (se espera peso:cantidad).")
    if not counts:
        raise ValidationError("La lista de pesos está vacía.")
    return counts


def render_value(value):
    """Enteros grandes y ±∞ como texto."""
    if value == float("inf"):
        return "inf"
    if value == float("-inf"):
        return "-inf"
    return str(value)


class CalculatorCommand(BaseCommand):
    """
    Subclases: `add_calculator_arguments(parser)` y `run(**options)`.
    El último resultado queda en `self.result`.
    """
    result = None

    def add_arguments(self, parser):
        self.add_calculator_arguments(parser)
        parser.add_argument("--json", action="store_true", help="Salida JSON.")

    def add_calculator_arguments(self, parser):
        pass

    def run(self, **options):
        raise NotImplementedError

    def command_name(self):
        return self.__class__.__module__.rsplit(".", 1)[-1]

    def handle(self, *args, **options):
        try:
            self.result = self.run(**options)
        except ValidationError as e:
            msg = "; ".join(e.messages) if hasattr(e, "messages") else "Parámetros inválidos."
            raise CommandError(msg)

        if options.get("json"):
            self.stdout.write(self.result.to_json(self.command_name()))
        else:
            self.stdout.write(self.result.text)
        logger.debug("%s terminó con estado %s", self.command_name(), self.result.status)

    def run_from_argv(self, argv):
        super().run_from_argv(argv)
        if self.result is not None and self.result.status:
            sys.exit(self.result.status)
