"""Backend selection for the search kernels.

The compiled extension is used when it imports and the instance fits in
64-bit masks; otherwise calls go to the pure-Python twin. Setting
``BERGE_PURE=1`` forces the pure backend for the whole process.
"""
from __future__ import annotations

import os

from . import _pykernels as pure

FOUND, NONE, BUDGET = pure.FOUND, pure.NONE, pure.BUDGET
CYCLE, PATH = pure.CYCLE, pure.PATH

compiled = None
if os.environ.get("BERGE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        compiled = None

BACKEND = "compiled" if compiled is not None else "pure"
_WORD = 64


def _pick(n: int, m: int, backend: str | None):
    if backend == "pure":
        return pure
    if backend == "compiled":
        if compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return compiled
    if compiled is not None and n <= _WORD and m <= _WORD:
        return compiled
    return pure


def cycle_at_least(n: int, masks, k: int, budget: int = 0, backend: str | None = None):
    return _pick(n, len(masks), backend).cycle_at_least(n, list(masks), k, budget)


def path_at_least(n: int, masks, k: int, budget: int = 0, backend: str | None = None):
    return _pick(n, len(masks), backend).path_at_least(n, list(masks), k, budget)


def census(n: int, masks, k: int, mode: int, first_edges, backend: str | None = None):
    return _pick(n, len(masks), backend).census(n, list(masks), k, mode, list(first_edges))
