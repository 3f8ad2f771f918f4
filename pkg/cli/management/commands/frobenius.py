from cli.base import CalculatorCommand, CommandResult
from lengths.expansion import frobenius


class Command(CalculatorCommand):
    help = "Mayor cardinalidad sin multiconjunto q^r-divisible."

    def add_calculator_arguments(self, parser):
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--r", type=int, required=True)

    def run(self, q, r, **options):
        value = frobenius(q, r)
        return CommandResult(payload={"q": q, "r": r, "frobenius": value}, text=str(value))
