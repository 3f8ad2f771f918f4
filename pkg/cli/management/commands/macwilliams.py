from django.core.exceptions import ValidationError

from cli.base import NEGATIVE_VERDICT, CalculatorCommand, CommandResult, parse_counts
from macwilliams.distributions import WeightDistribution, macwilliams_transform
from macwilliams.enumeration import enumerate_integer_solutions
from macwilliams.systems import first_t_system, solve_standard_equations


def _int_list(text, name):
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise ValidationError(f"'{name}' debe ser una lista de enteros.")


def _format_solution(solution, variables):
    return " ".join(f"{v}={solution[v]}" for v in variables if solution.get(v))


class Command(CalculatorCommand):
    help = (
        "transform: distribución dual por MacWilliams. "
        "enumerate: soluciones enteras de las primeras t ecuaciones. "
        "standard: espectros que cumplen las ecuaciones estándar."
    )

    def add_calculator_arguments(self, parser):
        parser.add_argument("action", choices=["transform", "enumerate", "standard"])
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--k", type=int, default=None)
        parser.add_argument("--weights", default=None,
                            help="transform: 'peso:A, ...'; enumerate: pesos permitidos.")
        parser.add_argument("--delta", type=int, default=None)
        parser.add_argument("--t", type=int, default=4)
        parser.add_argument("--projective", action="store_true")
        parser.add_argument("--support", default=None, help="standard: multiplicidades de hiperplano.")
        parser.add_argument("--k-max", dest="k_max", type=int, default=8)

    def run(self, action, **options):
        return getattr(self, f"run_{action}")(**options)

    def run_transform(self, q, n, k=None, weights=None, **options):
        if k is None or weights is None:
            raise ValidationError("transform requiere --k y --weights.")
        dist = WeightDistribution.from_enumerator(q, n, k, parse_counts(weights))
        dual = macwilliams_transform(dist)
        text = " + ".join(f"{b}·x^{w}" for w, b in dual.enumerator().items())
        return CommandResult(payload={"distribution": dist.to_json(), "dual": dual.to_json()}, text=text)

    def run_enumerate(self, q, n, k=None, weights=None, delta=None, t=4, projective=False, **options):
        if delta is None:
            raise ValidationError("enumerate requiere --delta.")
        allowed = _int_list(weights, "--weights") if weights else None
        system = first_t_system(n, q, delta, t, k=k, projective=projective, weights=allowed)
        solutions = enumerate_integer_solutions(system)
        payload = {
            "system": system.to_dict(),
            "solutions": [{v: str(x) for v, x in s.items()} for s in solutions],
        }
        text = "\n".join(_format_solution(s, system.variables) for s in solutions) or "Sin soluciones."
        return CommandResult(0 if solutions else NEGATIVE_VERDICT, payload, text)

    def run_standard(self, q, n, support=None, k_max=8, **options):
        if support is None:
            raise ValidationError("standard requiere --support.")
        found = solve_standard_equations(n, q, _int_list(support, "--support"), k_values=range(2, k_max + 1))
        payload = {"solutions": [{"k": k, "spectrum": {str(i): a for i, a in sp.items()}} for k, sp in found]}
        text = "\n".join(
            f"k={k}: " + " ".join(f"a{i}={a}" for i, a in sorted(sp.items())) for k, sp in found
        ) or "Sin soluciones."
        return CommandResult(0 if found else NEGATIVE_VERDICT, payload, text)
