import io
import json
import os
import tempfile
import unittest

from digit_ecc.cli import main


def run_cli(argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin_text), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class InfoAndTableTests(unittest.TestCase):
    def test_info_prints_parameters_first(self):
        code, out, _ = run_cli(["info", "--family", "a2", "--r", "4"])
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "[22,16,4]_3")
        self.assertIn("O special", lines)
        self.assertIn("0011 redundant", lines)

    def test_table(self):
        code, out, _ = run_cli(["table"])
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "r f block msg rate")
        self.assertIn("4 10 22 16 0.727", lines)
        self.assertIn("5 20 42 35 0.833", lines)

    def test_add_count(self):
        code, out, _ = run_cli(["table", "--adds", "--p", "3", "--r", "5"])
        self.assertEqual(code, 0)
        self.assertTrue(out.strip().endswith("adds=1458"))

    def test_landscape(self):
        code, out, _ = run_cli(["table", "--landscape"])
        self.assertEqual(code, 0)
        self.assertIn("Golay [11,6,5]_3 rate=0.545", out.splitlines())


class StreamTests(unittest.TestCase):
    def test_encode_prototype(self):
        code, out, _ = run_cli(
            ["encode", "--family", "prototype", "--p", "3", "--r", "3"], "20111020010201200120012\n"
        )
        self.assertEqual(code, 0)
        self.assertEqual(out, "122001110220010201200120012\n")

    def test_decode_lines(self):
        code, out, _ = run_cli(["decode", "--family", "a1", "--r", "3"], "2002011102102\n\n2002011112102\n")
        self.assertEqual(code, 0)
        self.assertEqual(
            out.splitlines(), ["CORRECTED 2002011112102 111:-2", "CLEAN 2002011112102 -"]
        )

    def test_decode_golay_with_syndromes(self):
        code, out, _ = run_cli(["decode", "--family", "golay", "--show-syndromes"], "10122012222\n")
        self.assertEqual(code, 0)
        self.assertEqual(out, "CORRECTED 10122012210 22110:-1,22222:-2 P_all=00221\n")

    def test_decode_a2_double_error(self):
        code, out, _ = run_cli(["decode", "--family", "a2", "--r", "4"], "2020201001022210112221\n")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("MULTI 2020201001022210112221 -"))

    def test_bad_lines_are_skipped_unless_strict(self):
        code, out, err = run_cli(["encode", "--family", "golay"], "0122\n012210\n")
        self.assertEqual(code, 0)
        self.assertEqual(out, "10122012210\n")
        self.assertIn("line 1", err)

        code, out, _ = run_cli(["encode", "--family", "golay", "--strict"], "0122\n012210\n")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")

    def test_index_set_file_in_any_elementary_order_matches_golay(self):
        tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(tmpdir.cleanup)
        path = os.path.join(tmpdir.name, "golay.txt")
        with open(path, "w", encoding="utf-8") as f:
            f.write("10000\n01000\n00100\n00010\n00001\n01122\n10212\n12021\n12102\n22110\n22222\n")
        code, out, _ = run_cli(["encode", "--family", "nwxli", "--set", path], "012210\n")
        self.assertEqual(code, 0)
        self.assertEqual(out, run_cli(["encode", "--family", "golay"], "012210\n")[1])
        self.assertEqual(out, "10122012210\n")

    def test_input_and_output_files(self):
        tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(tmpdir.cleanup)
        source = os.path.join(tmpdir.name, "messages.txt")
        target = os.path.join(tmpdir.name, "words.txt")
        with open(source, "w", encoding="utf-8") as f:
            f.write("012210\n")
        code, _, _ = run_cli(["encode", "--family", "golay", "--input", source, "--output", target])
        self.assertEqual(code, 0)
        with open(target, encoding="utf-8") as f:
            self.assertEqual(f.read(), "10122012210\n")


class StatisticsTests(unittest.TestCase):
    def test_sweep_record(self):
        code, out, _ = run_cli(
            ["sweep", "--family", "a2", "--r", "4", "--weight", "1", "--codewords", "0", "--format", "record"]
        )
        self.assertEqual(code, 0)
        self.assertIn("trials=44 clean=0 corrected_ok=44", out)

    def test_simulate_appends_to_store(self):
        tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(tmpdir.cleanup)
        path = os.path.join(tmpdir.name, "results.json")
        code, out, _ = run_cli(
            ["simulate", "--family", "golay", "--trials", "50", "--epsilon", "0", "--seed", "1", "--append", path]
        )
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["counts"]["clean"], 50)
        with open(path, encoding="utf-8") as f:
            self.assertEqual(len(json.load(f)["simulate"]), 1)

    def test_append_to_unreadable_store_fails(self):
        tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(tmpdir.cleanup)
        path = os.path.join(tmpdir.name, "broken.json")
        with open(path, "w", encoding="utf-8") as f:
            f.write("{broken")
        code, _, err = run_cli(
            ["simulate", "--family", "golay", "--trials", "5", "--epsilon", "0", "--append", path]
        )
        self.assertEqual(code, 2)
        self.assertIn("error:", err)
        with open(path, encoding="utf-8") as f:
            self.assertEqual(f.read(), "{broken")

    def test_mindist(self):
        code, out, _ = run_cli(["mindist", "--family", "prototype", "--p", "3", "--r", "2", "--format", "record"])
        self.assertEqual(code, 0)
        self.assertIn("column_search=d=3 enumeration=3", out)

    def test_wxli_listing_and_vectors(self):
        code, out, _ = run_cli(["wxli", "--r", "4"])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "r=4 n=2 f=10")
        code, out, _ = run_cli(["wxli", "--vectors", "001,010,011", "--k", "3"])
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("k=3 "))


class ExitCodeTests(unittest.TestCase):
    def test_usage_errors(self):
        self.assertEqual(run_cli(["info", "--family", "hamming"])[0], 1)
        self.assertEqual(run_cli(["info", "--family", "a1", "--p", "5", "--r", "3"])[0], 1)
        self.assertEqual(run_cli(["frobnicate"])[0], 1)
        self.assertEqual(run_cli(["wxli"])[0], 1)

    def test_missing_input_file_is_a_data_error(self):
        code, _, err = run_cli(["decode", "--family", "golay", "--input", "/nonexistent/words.txt"])
        self.assertEqual(code, 2)
        self.assertIn("error:", err)


if __name__ == "__main__":
    unittest.main()
