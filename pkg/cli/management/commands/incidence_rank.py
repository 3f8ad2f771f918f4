from cli.base import CalculatorCommand, CommandResult
from geometry.incidence import check_kernel, incidence_matrix, rank_mod


class Command(CalculatorCommand):
    help = "Rango módulo m de la matriz de incidencia puntos / k-subespacios de PG(v-1,q)."

    def add_calculator_arguments(self, parser):
        parser.add_argument("--v", type=int, required=True)
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--k", type=int, required=True)
        parser.add_argument("--mod", dest="modulus", type=int, required=True)

    def run(self, v, q, k, modulus, **options):
        A = incidence_matrix(v, q, k)
        profile = rank_mod(A.rows, modulus)
        payload = {"v": v, "q": q, "k": k, **profile.to_dict(), "kernel_checked": check_kernel(A.rows, profile)}
        text = f"rango {profile.rank}, núcleo de dimensión {profile.kernel_dimension} (mod {modulus})"
        return CommandResult(payload=payload, text=text)
