from applications.vsp import parse_vsp_type, vsp_feasible
from cli.base import NEGATIVE_VERDICT, CalculatorCommand, CommandResult


class Command(CalculatorCommand):
    help = 'Condiciones necesarias para una partición de PG(v-1,q) de tipo "4^16 3^1 2^2 1^2".'

    def add_calculator_arguments(self, parser):
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--v", type=int, required=True)
        parser.add_argument("--type", dest="vsp_type", required=True)

    def run(self, q, v, vsp_type, **options):
        vsp = parse_vsp_type(vsp_type, q, v)
        verdict = vsp_feasible(vsp)
        if verdict.passed:
            text = f"{vsp} en PG({v - 1},{q}): sin contradicción"
        else:
            text = f"{vsp} en PG({v - 1},{q}): imposible [{verdict.condition}] {verdict.reason}"
        payload = {"type": str(vsp), "verdict": verdict.to_dict()}
        return CommandResult(0 if verdict.passed else NEGATIVE_VERDICT, payload, text)
