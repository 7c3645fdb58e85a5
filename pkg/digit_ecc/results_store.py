import json
import logging
import os
from datetime import datetime, timezone
from typing import Any, Dict, List

from digit_ecc.config import Config
from digit_ecc.errors import DataError, UsageError

logger = logging.getLogger(__name__)

NAMESPACES = ("sweep", "simulate", "mindist")


class ResultsStore:
    """Run documents kept in one JSON file, grouped by namespace."""

    def __init__(self, store_path: str | None = None):
        self.store_path = store_path or Config.ECC_RESULTS_PATH
        self._store: Dict[str, List[Dict[str, Any]]] = {}
        self._readonly = False
        self._load()

    def _load(self):
        if not os.path.exists(self.store_path):
            self._store = {}
            return
        try:
            with open(self.store_path, "r", encoding="utf-8") as f:
                data = json.load(f)
            if not isinstance(data, dict) or not all(isinstance(v, list) for v in data.values()):
                raise ValueError("top level must map namespaces to lists")
            self._store = data
        except (OSError, ValueError) as e:
            # reads see an empty store; writes are refused so the file stays intact
            logger.warning("Ignoring unreadable results store %s: %s", self.store_path, e)
            self._store = {}
            self._readonly = True

    def _save(self):
        if self._readonly:
            raise DataError(f"Refusing to overwrite unreadable results store {self.store_path}.")
        try:
            with open(self.store_path, "w", encoding="utf-8") as f:
                json.dump(self._store, f, indent=4)
        except OSError as e:
            logger.error("Error saving results store %s: %s", self.store_path, e)
            raise DataError(f"Cannot write results store {self.store_path}: {e}") from e

    def append_run(self, namespace: str, document: Dict[str, Any]) -> Dict[str, Any]:
        if namespace not in NAMESPACES:
            raise UsageError(f"Unknown results namespace: {namespace}. Supported: {', '.join(NAMESPACES)}")
        entry = dict(document)
        entry.setdefault("recorded_at", datetime.now(timezone.utc).isoformat())
        runs = self._store.setdefault(namespace, [])
        runs.append(entry)
        try:
            self._save()
        except DataError:
            runs.pop()
            raise
        return entry

    def get_runs(self, namespace: str) -> List[Dict[str, Any]]:
        return list(self._store.get(namespace, []))

    def get_namespaces(self) -> List[str]:
        return list(self._store.keys())

    def clear(self, namespace: str):
        if namespace in self._store:
            self._store[namespace] = []
            self._save()
