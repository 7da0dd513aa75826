"""The compiled and pure-Python kernels must agree bit for bit."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posetkit import _pykernels, kernels

ckernels = pytest.importorskip("posetkit._ckernels")


@st.composite
def graphs(draw, max_n=14):
    n = draw(st.integers(1, max_n))
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


@given(graphs())
@settings(max_examples=200, deadline=None)
def test_max_clique_parity(adj):
    full = (1 << len(adj)) - 1
    assert ckernels.max_clique(adj, full) == _pykernels.max_clique(adj, full)


@given(graphs(), st.integers(0, 3))
@settings(max_examples=200, deadline=None)
def test_first_clique_parity(adj, drop):
    full = (1 << len(adj)) - 1
    k = max(1, _pykernels.max_clique(adj, full).bit_count() - drop)
    first = _pykernels.first_clique_of_size(adj, full, k, 0, 0)
    assert ckernels.first_clique_of_size(adj, full, k, 0, 0) == first
    assert ckernels.first_clique_of_size(adj, full, k, first, 0) == _pykernels.first_clique_of_size(adj, full, k, first, 0)


@given(graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_partition_parity(adj):
    assert ckernels.min_clique_partition(adj, len(adj)) == _pykernels.min_clique_partition(adj, len(adj))


@given(st.lists(st.integers(0, (1 << 12) - 1), min_size=12, max_size=12))
@settings(max_examples=100, deadline=None)
def test_closure_parity(rows):
    assert ckernels.transitive_closure(rows, 12) == _pykernels.transitive_closure(rows, 12)


def test_wide_inputs_use_python():
    n = 70
    rows = [1 << (i + 1) if i + 1 < n else 0 for i in range(n)]
    closed = kernels.transitive_closure(rows)
    assert closed[0] == ((1 << n) - 1) & ~1


def test_max_clique_is_lexicographically_first():
    # two triangles {0,1,2} and {0,3,4}; both maximum
    adj = [0] * 5
    for a, b in [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    for impl in (ckernels, _pykernels):
        assert impl.max_clique(adj, 31) == 0b00111
        assert impl.first_clique_of_size(adj, 31, 3, 0b00111, 0) == 0b11001
