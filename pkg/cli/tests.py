import json
import os
import tempfile
from io import StringIO

from django.core.exceptions import ValidationError
from django.core.management import call_command, load_command_class
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from exclusion.models import ClassificationRun

from .base import CommandResult, parse_counts, render_value


def run(name, *args, **options):
    """(comando, salida) tras ejecutar `name` con call_command."""
    command = load_command_class("cli", name)
    out = StringIO()
    call_command(command, *args, stdout=out, **options)
    return command, out.getvalue()


def run_json(name, *args, **options):
    command, output = run(name, *args, json=True, **options)
    return command, json.loads(output)


class HelperTests(SimpleTestCase):
    def test_parse_counts(self):
        self.assertEqual(parse_counts("0:1, 16:5 24:210"), {0: 1, 16: 5, 24: 210})
        for text in ["", "16", "a:1"]:
            with self.assertRaises(ValidationError):
                parse_counts(text)

    def test_render_value(self):
        self.assertEqual(render_value(float("-inf")), "-inf")
        self.assertEqual(render_value(10 ** 30), str(10 ** 30))

    def test_json_envelope(self):
        data = json.loads(CommandResult(2, {"n": 9}, "x").to_json("feasible"))
        self.assertEqual(data, {"command": "feasible", "status": 2, "n": 9})


class LengthCommandTests(SimpleTestCase):
    def test_expand(self):
        command, output = run("expand", "11", q=2, r=2)
        self.assertIn("(1)·4", output)
        self.assertEqual(command.result.status, 0)

    def test_expand_json(self):
        _, data = run_json("expand", "9", q=2, r=2)
        self.assertEqual(data["command"], "expand")
        self.assertEqual(data["expansion"]["leading"], "-1")
        self.assertFalse(data["expansion"]["feasible"])
        _, data = run_json("expand", "137", q=3, r=3)
        self.assertEqual(data["expansion"]["leading"], "-2")

    def test_feasible_nine_is_excluded(self):
        command, output = run("feasible", "9", q=2, r=2)
        self.assertIn("EXCLUDED", output)
        self.assertEqual(command.result.status, 2)

    def test_feasible_text_and_json_agree(self):
        for n in [9, 10, 11]:
            text_command, output = run("feasible", str(n), q=2, r=2)
            _, data = run_json("feasible", str(n), q=2, r=2)
            self.assertIn(data["status"], output)
            expected = 2 if data["status"] == "EXCLUDED" else 0
            self.assertEqual(text_command.result.status, expected)

    def test_feasible_for_sets(self):
        command, output = run("feasible", "9", q=2, r=2, **{"lambda": 1})
        self.assertEqual(command.result.status, 2)
        command, _ = run("feasible", "14", q=2, r=2, **{"lambda": 1})
        self.assertEqual(command.result.status, 0)

    def test_exit_code_from_command_line(self):
        from .management.commands.feasible import Command

        command = Command(stdout=StringIO(), stderr=StringIO())
        with self.assertRaises(SystemExit) as cm:
            command.run_from_argv(["manage.py", "feasible", "9", "--q", "2", "--r", "2", "--skip-checks"])
        self.assertEqual(cm.exception.code, 2)

    def test_validation_error_exits_with_one(self):
        from .management.commands.feasible import Command

        command = Command(stdout=StringIO(), stderr=StringIO())
        with self.assertRaises(SystemExit) as cm:
            command.run_from_argv(["manage.py", "feasible", "9", "--q", "1", "--r", "2", "--skip-checks"])
        self.assertEqual(cm.exception.code, 1)

    def test_frobenius(self):
        _, output = run("frobenius", q=2, r=2)
        self.assertEqual(output.strip(), "9")
        _, data = run_json("frobenius", q=3, r=0)
        self.assertEqual(data["frobenius"], -1)

    def test_round(self):
        _, data = run_json("round", "floor", "765", "7", q=2, r=2)
        self.assertEqual(data["value"], "107")
        _, data = run_json("round", "ceil", "31", "3", q=2, r=1)
        self.assertEqual(data["value"], "11")

    def test_round_with_lambda_uses_descent(self):
        _, data = run_json("round", "floor", "2047", "15", q=2, r=3, **{"lambda": 1})
        self.assertEqual(data["value"], "132")

    def test_round_rejects_zero_divisor(self):
        with self.assertRaises(CommandError):
            run("round", "floor", "7", "0", q=2, r=1)


class ClassifyCommandTests(SimpleTestCase):
    def test_expansion_table(self):
        _, output = run("classify", q=2, r=2, max_n=20, **{"lambda": 4})
        self.assertIn("Realizable: 4, 6-8, 10-20", output)
        self.assertIn("Excluida: 1-3, 5, 9", output)

    def test_verify(self):
        command, data = run_json("classify", q=2, r=2, max_n=20, verify=True, **{"lambda": 4})
        self.assertEqual(data["unverified"], [])
        self.assertEqual(data["table"]["lengths"]["9"]["status"], "EXCLUDED")
        self.assertEqual(command.result.status, 0)

    def test_missing_config(self):
        with self.assertRaises(CommandError):
            run("classify", q=2, r=2, max_n=10, config="/nonexistent/classification.json")


class ClassifyStoreTests(TestCase):
    def test_store(self):
        _, data = run_json("classify", q=2, r=2, max_n=20, store=True, **{"lambda": 4})
        stored = ClassificationRun.objects.get(pk=data["run_id"])
        self.assertEqual(stored.verdicts.count(), 20)
        self.assertEqual(stored.lam, 4)


class MacWilliamsCommandTests(SimpleTestCase):
    def test_transform_hamming(self):
        _, output = run("macwilliams", "transform", q=2, n=7, k=4, weights="0:1 3:7 4:7 7:1")
        self.assertEqual(output.strip(), "1·x^0 + 7·x^4")

    def test_transform_requires_weights(self):
        with self.assertRaises(CommandError):
            run("macwilliams", "transform", q=2, n=7, k=4)

    def test_enumerate_seventeen_points(self):
        command, output = run("macwilliams", "enumerate", q=2, n=17, delta=4, t=4, k=6, projective=True)
        self.assertEqual(output.strip(), "A4=2 A8=49 A12=12 B3=6")
        self.assertEqual(command.result.status, 0)

    def test_enumerate_without_solutions(self):
        command, output = run("macwilliams", "enumerate", q=2, n=52, delta=8, t=4, k=10, projective=True)
        self.assertIn("Sin soluciones", output)
        self.assertEqual(command.result.status, 2)

    def test_standard(self):
        _, output = run("macwilliams", "standard", q=3, n=8, support="2,5")
        self.assertEqual(output.strip(), "k=4: a2=32 a5=8")


class LpCommandTests(SimpleTestCase):
    def test_no_projective_52(self):
        command, data = run_json("lp", "feasible", q=2, delta=8, n=52, projective=True)
        self.assertFalse(data["feasible"])
        self.assertIn(data["kind"], ("farkas", "bounds"))
        self.assertEqual(command.result.status, 2)

    def test_affine_solid(self):
        command, output = run("lp", "feasible", q=2, delta=4, n=8, k=4, projective=True)
        self.assertNotIn("infactible", output)
        self.assertEqual(command.result.status, 0)


class ApplicationCommandTests(SimpleTestCase):
    def test_spread_bound(self):
        _, data = run_json("spread_bound", q=2, v=11, t=4)
        self.assertEqual(data["report"]["best"], "132")
        self.assertEqual(data["report"]["best_method"], "divisible")

    def test_spread_grid(self):
        _, output = run("spread_bound", q=2, t=4, grid=True, v_max=11)
        self.assertIn("132", output)

    def test_vsp_check(self):
        command, output = run("vsp_check", q=2, v=8, vsp_type="4^16 3^1 2^2 1^2")
        self.assertIn("[prefix]", output)
        self.assertEqual(command.result.status, 2)

    def test_vsp_check_passes_spread(self):
        command, data = run_json("vsp_check", q=2, v=4, vsp_type="2^5")
        self.assertTrue(data["verdict"]["passed"])
        self.assertEqual(command.result.status, 0)

    def test_vsp_malformed_type(self):
        with self.assertRaises(CommandError):
            run("vsp_check", q=2, v=8, vsp_type="4-16")


class GeometryCommandTests(SimpleTestCase):
    def test_verify_hill_cap(self):
        command, data = run_json("verify", "hill-cap")
        self.assertTrue(data["report"]["ok"])
        self.assertEqual(data["report"]["weights"], {"0": 1, "36": 616, "45": 112})
        self.assertEqual(command.result.status, 0)

    def test_verify_file(self):
        with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as fh:
            fh.write("2 3 7\n1010101\n0110011\n0001111\n")
        self.addCleanup(os.remove, fh.name)
        command, output = run("verify", fh.name, delta=4, projective=True, weights="0:1 4:7")
        self.assertIn("[7,3]_2", output)
        self.assertEqual(command.result.status, 0)
        command, _ = run("verify", fh.name, delta=8)
        self.assertEqual(command.result.status, 2)

    def test_verify_unknown_target(self):
        with self.assertRaises(CommandError):
            run("verify", "no-such-fixture")

    def test_incidence_rank(self):
        _, output = run("incidence_rank", v=3, q=2, k=2, modulus=2)
        self.assertEqual(output.strip(), "rango 4, núcleo de dimensión 3 (mod 2)")
        _, data = run_json("incidence_rank", v=4, q=2, k=3, modulus=4)
        self.assertEqual((data["rank"], data["kernel_dimension"]), (11, 4))
        self.assertTrue(data["kernel_checked"])
