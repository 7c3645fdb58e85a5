import json
import os
import tempfile
import unittest

from digit_ecc.errors import DataError, UsageError
from digit_ecc.results_store import ResultsStore


class ResultsStoreTests(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmpdir.cleanup)
        self.path = os.path.join(self.tmpdir.name, "results.json")

    def test_runs_survive_a_restart(self):
        store = ResultsStore(self.path)
        entry = store.append_run("sweep", {"spec": "a2[22,16,4]_3", "trials": 44})
        self.assertIn("recorded_at", entry)

        reopened = ResultsStore(self.path)
        runs = reopened.get_runs("sweep")
        self.assertEqual(len(runs), 1)
        self.assertEqual(runs[0]["trials"], 44)
        self.assertEqual(reopened.get_namespaces(), ["sweep"])

    def test_clear_namespace(self):
        store = ResultsStore(self.path)
        store.append_run("simulate", {"trials": 1})
        store.append_run("mindist", {"column_search": "d=3"})
        store.clear("simulate")
        reopened = ResultsStore(self.path)
        self.assertEqual(reopened.get_runs("simulate"), [])
        self.assertEqual(len(reopened.get_runs("mindist")), 1)

    def test_unknown_namespace(self):
        with self.assertRaises(UsageError):
            ResultsStore(self.path).append_run("notes", {"trials": 1})
        self.assertFalse(os.path.exists(self.path))

    def test_unreadable_file_refuses_writes(self):
        with open(self.path, "w", encoding="utf-8") as f:
            f.write("{not json")
        with self.assertLogs("digit_ecc.results_store", level="WARNING"):
            store = ResultsStore(self.path)
        self.assertEqual(store.get_runs("sweep"), [])
        with self.assertRaises(DataError):
            store.append_run("sweep", {"trials": 1})
        self.assertEqual(store.get_runs("sweep"), [])
        with open(self.path, "r", encoding="utf-8") as f:
            self.assertEqual(f.read(), "{not json")

    def test_wrong_shape_is_rejected(self):
        with open(self.path, "w", encoding="utf-8") as f:
            json.dump({"sweep": {"trials": 1}}, f)
        with self.assertLogs("digit_ecc.results_store", level="WARNING"):
            store = ResultsStore(self.path)
        self.assertEqual(store.get_runs("sweep"), [])

    def test_unwritable_path(self):
        store = ResultsStore(os.path.join(self.tmpdir.name, "missing", "results.json"))
        with self.assertLogs("digit_ecc.results_store", level="ERROR"):
            with self.assertRaises(DataError):
                store.append_run("simulate", {"trials": 1})


if __name__ == "__main__":
    unittest.main()
