from applications.spreads import render_grid, spread_bound_report, spread_grid
from cli.base import CalculatorCommand, CommandResult, render_value


class Command(CalculatorCommand):
    help = "Cotas para spreads parciales A_q(v, 2t; t); con --grid, toda la tabla hasta SPREAD_TABLE_DEPTH."

    def add_calculator_arguments(self, parser):
        parser.add_argument("--q", type=int, required=True)
        parser.add_argument("--t", type=int, required=True)
        parser.add_argument("--v", type=int, default=None)
        parser.add_argument("--grid", action="store_true")
        parser.add_argument("--v-max", dest="v_max", type=int, default=None)

    def run(self, q, t, v=None, grid=False, v_max=None, **options):
        if grid or v is None:
            reports = spread_grid(q, t, v_max=v_max)
            payload = {"reports": [rep.to_dict() for rep in reports]}
            return CommandResult(payload=payload, text=render_grid(reports))

        report = spread_bound_report(q, v, t)
        lines = [f"A_{q}({v},{2 * t};{t}): {report.lower} <= A <= {report.best} ({report.best_method})"]
        for method, entry in report.upper.items():
            lines.append(f"  {method:<14} {render_value(entry['value'])}")
        return CommandResult(payload={"report": report.to_dict()}, text="\n".join(lines))
