"""Kernel dispatch: compiled Cython kernels when available, Python otherwise.

Set ``POSETKIT_PURE_PYTHON=1`` to force the fallback. Inputs wider than
64 vertices always go to the Python kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("POSETKIT_PURE_PYTHON") == "1":
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
WORD = 64


def _impl(n: int):
    if _ckernels is not None and n <= WORD:
        return _ckernels
    return _pykernels


def transitive_closure(rows: list[int]) -> list[int]:
    n = len(rows)
    return _impl(n).transitive_closure(list(rows), n)


def max_clique(adj: list[int], cand: int) -> int:
    return _impl(len(adj)).max_clique(list(adj), cand)


def first_clique_of_size(adj: list[int], cand: int, k: int, skip_a: int = 0, skip_b: int = 0) -> int:
    return _impl(len(adj)).first_clique_of_size(list(adj), cand, k, skip_a, skip_b)


def min_clique_partition(adj: list[int]) -> int:
    n = len(adj)
    if n == 0:
        return 0
    return _impl(n).min_clique_partition(list(adj), n)
