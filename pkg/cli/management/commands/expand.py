from cli.base import CalculatorCommand, CommandResult
from lengths.expansion import sqr_expand
from qarith.arithmetic import snumb


class Command(CalculatorCommand):
    help = "Expansión S_q(r)-ádica de n."

    def add_calculator_arguments(self, parser):
        parser.add_argument("n", type=int)
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--r", type=int, required=True)

    def run(self, n, q, r, **options):
        expansion = sqr_expand(n, q, r)
        terms = [f"{a}·{snumb(r, i, q)}" for i, a in enumerate(expansion.digits) if a]
        terms.append(f"({expansion.leading})·{snumb(r, r, q)}")
        verdict = "realizable" if expansion.feasible else "sin multiconjunto"
        text = f"{n} = {' + '.join(terms)}  [{verdict}]"
        return CommandResult(payload={"expansion": expansion.to_dict()}, text=text)
