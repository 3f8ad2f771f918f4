from applications.spreads import DescentOracle
from cli.base import CalculatorCommand, CommandResult, render_value
from exclusion.classify import classify_multiset_lambda
from lengths.expansion import ceil_qr, ceil_qr_lambda, floor_qr, floor_qr_lambda


class Command(CalculatorCommand):
    help = (
        "Redondeo divisible ⌊a/b⌋_{q^r} o ⌈a/b⌉_{q^r}; con --lambda, para "
        "multiconjuntos de multiplicidad máxima λ."
    )

    def add_calculator_arguments(self, parser):
        parser.add_argument("mode", choices=["floor", "ceil"])
        parser.add_argument("a", type=int)
        parser.add_argument("b", type=int)
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--r", type=int, required=True)
        parser.add_argument("--lambda", dest="lam", type=int, default=None)

    def _oracle(self, q, r, lam, n_max):
        if lam == 1:
            return DescentOracle(q, r)
        return classify_multiset_lambda(q, r, lam, max(n_max, 1))

    def run(self, mode, a, b, q, r, lam=None, **options):
        if lam is None:
            value = (floor_qr if mode == "floor" else ceil_qr)(a, b, q, r)
        elif mode == "floor":
            value = floor_qr_lambda(a, b, q, r, lam, self._oracle(q, r, lam, a))
        else:
            value = ceil_qr_lambda(a, b, q, r, lam, self._oracle(q, r, lam, a + 2 * abs(b)))

        symbol = "⌊⌋" if mode == "floor" else "⌈⌉"
        suffix = f",{lam}" if lam is not None else ""
        text = f"{symbol[0]}{a}/{b}{symbol[1]}_({q}^{r}{suffix}) = {render_value(value)}"
        payload = {"mode": mode, "a": str(a), "b": str(b), "q": q, "r": r,
                   "lambda": lam, "value": render_value(value)}
        return CommandResult(payload=payload, text=text)
