"""Persistent cache for expensive high-precision constants.

The store is a small versioned text file mapping a constant key
``(kind, arg)`` to the most precise decimal value computed so far:

    mahlerzeta-constants 1
    zeta 3 50 1.2020569031595942853997381615114499907649862923405
    l3_ii 1 30 2.82711656135535384846204864476

A lookup hits only when the stored entry carries at least as many digits as
requested; a write keeps whichever of the old and new entries has more
digits.  The default location is ``~/.cache/mahlerzeta/constants.txt`` and
can be overridden with the ``MAHLERZETA_STORE`` environment variable or an
explicit path.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Dict, List, Optional, Tuple

__all__ = ["ConstantStore", "STORE_ENV_VAR"]

STORE_ENV_VAR = "MAHLERZETA_STORE"

_HEADER = "mahlerzeta-constants 1"


class ConstantStore:
    """File-backed map from ``(kind, arg)`` to ``(digits, decimal string)``."""

    def __init__(self, path: Optional[os.PathLike] = None):
        self.path = Path(path) if path is not None else self.default_path()
        self._entries: Dict[Tuple[str, int], Tuple[int, str]] = {}
        if self.path.exists():
            self._load()

    @staticmethod
    def default_path() -> Path:
        env = os.environ.get(STORE_ENV_VAR)
        if env:
            return Path(env)
        return Path.home() / ".cache" / "mahlerzeta" / "constants.txt"

    def _load(self) -> None:
        lines = self.path.read_text().splitlines()
        body = [ln.strip() for ln in lines if ln.strip()]
        if not body:
            return
        if body[0] != _HEADER:
            raise ValueError(
                f"unsupported constant-store format in {self.path}: {body[0]!r}"
            )
        for ln in body[1:]:
            fields = ln.split()
            if len(fields) != 4:
                raise ValueError(f"malformed constant-store line: {ln!r}")
            kind, arg_s, digits_s, value = fields
            self._entries[(kind, int(arg_s))] = (int(digits_s), value)

    def save(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        lines = [_HEADER]
        for (kind, arg), (digits, value) in sorted(self._entries.items()):
            lines.append(f"{kind} {arg} {digits} {value}")
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text("\n".join(lines) + "\n")
        tmp.replace(self.path)

    def get(self, kind: str, arg: int, digits: int) -> Optional[str]:
        """The stored decimal string, or None unless stored digits >= digits."""
        entry = self._entries.get((kind, arg))
        if entry is None or entry[0] < digits:
            return None
        return entry[1]

    def put(self, kind: str, arg: int, digits: int, value: str) -> None:
        """Record a value; an existing higher-precision entry is kept."""
        entry = self._entries.get((kind, arg))
        if entry is not None and entry[0] >= digits:
            return
        self._entries[(kind, arg)] = (digits, value)

    def entries(self) -> List[Tuple[str, int, int, str]]:
        return [
            (kind, arg, digits, value)
            for (kind, arg), (digits, value) in sorted(self._entries.items())
        ]

    def __len__(self) -> int:
        return len(self._entries)
