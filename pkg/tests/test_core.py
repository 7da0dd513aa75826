import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from posetkit import (
    DuplicateLabel,
    ElementNotInCarrier,
    EmptyCarrier,
    EmptySubset,
    HostMismatch,
    NotAntisymmetric,
    NotReflexive,
    NotTransitive,
    SplitNotCovering,
    UnknownLabel,
    build_poset,
    comparable,
    induced_subposet,
    is_antichain,
    is_chain,
    maximal_above,
    maximal_elements,
    minimal_below,
    minimal_elements,
    up_down_split,
)
from posetkit.core import FinitePoset
from posetkit.gen import GenSpec, antichain, boolean_lattice, enumerate_all_posets, generate, total_order


def labels_of(P, idx):
    return {P.label(i) for i in idx}


# ---------------------------------------------------------------- build_poset


def test_singleton():
    P = build_poset(["a"], [])
    assert P.n == 1
    assert P.relation_pairs() == [("a", "a")]


def test_divisor_closure(div6):
    assert div6.leq(div6.index("1"), div6.index("6"))
    assert not div6.leq(div6.index("2"), div6.index("3"))


def test_two_cycle_rejected():
    with pytest.raises(NotAntisymmetric) as info:
        build_poset(["a", "b"], [("a", "b"), ("b", "a")])
    assert info.value.witness == ("a", "b")


def test_label_errors():
    with pytest.raises(DuplicateLabel):
        build_poset(["a", "a"], [])
    with pytest.raises(UnknownLabel):
        build_poset(["a"], [("a", "z")])
    with pytest.raises(EmptyCarrier):
        build_poset([], [])


def test_full_kind_axioms():
    with pytest.raises(NotReflexive) as info:
        build_poset(["a", "b"], [("a", "a"), ("a", "b")], "full")
    assert info.value.witness == ("b", "b")
    with pytest.raises(NotTransitive) as info:
        build_poset(["a", "b", "c"], [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")], "full")
    assert info.value.witness == ("a", "b", "c")
    with pytest.raises(NotAntisymmetric):
        build_poset(["a", "b"], [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")], "full")


def test_reflexive_pairs_ignored_for_cover():
    P = build_poset(["a", "b"], [("a", "a"), ("a", "b")])
    assert P == build_poset(["a", "b"], [("a", "b")])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cover_rebuild_from_full_is_identity(n):
    for P in enumerate_all_posets(n):
        assert build_poset(P.labels, P.relation_pairs(), "full") == P


def test_equality_is_not_isomorphism():
    a = build_poset(["x", "y"], [("x", "y")])
    b = build_poset(["x", "y"], [("y", "x")])
    assert a != b


# ---------------------------------------------------------------- predicates


def test_comparable(div6):
    assert comparable(div6, "2", "6")
    assert not comparable(div6, "2", "3")
    for x in div6.labels:
        assert comparable(div6, x, x)
    with pytest.raises(ElementNotInCarrier):
        comparable(div6, "2", "5")


def test_chain_and_antichain_predicates(div6):
    assert is_chain(div6, div6.subset(["1", "2", "6"]))
    assert not is_chain(div6, div6.subset(["2", "3"]))
    assert not is_chain(div6, div6.subset([]))
    assert is_antichain(div6, div6.subset(["2", "3"]))
    assert not is_antichain(div6, div6.subset(["1", "2"]))
    for x in div6.labels:
        assert is_antichain(div6, div6.subset([x]))


def test_predicates_reject_foreign_subsets(div6):
    other = total_order(4)
    assert not is_chain(div6, other.subset([0]))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chain_antichain_intersection_at_most_one(n):
    for P in enumerate_all_posets(n):
        subsets = [P.subset(s) for s in brute.all_subsets(n)]
        chains = [s for s in subsets if is_chain(P, s)]
        antichains = [s for s in subsets if is_antichain(P, s)]
        for c in chains:
            for a in antichains:
                assert len(c.members & a.members) <= 1
        for s in subsets:
            if is_chain(P, s) and is_antichain(P, s):
                assert len(s) == 1


def test_no_two_common_random():
    import random

    rng = random.Random(5)
    for seed in range(40):
        P = generate(GenSpec("random_dag", 12, seed, "0.3"))
        for _ in range(20):
            s = P.subset([i for i in range(P.n) if rng.random() < 0.5])
            t = P.subset([i for i in range(P.n) if rng.random() < 0.5])
            if is_chain(P, s) and is_antichain(P, t):
                assert len(s.members & t.members) <= 1


# ---------------------------------------------------------------- extremal elements


def test_maximal_minimal_examples(div6, wedge):
    assert maximal_elements(div6).labels() == ["6"]
    assert minimal_elements(div6).labels() == ["1"]
    A = antichain(3)
    assert len(maximal_elements(A)) == 3
    B2 = boolean_lattice(2)
    assert maximal_elements(B2).labels() == ["{0,1}"]
    assert minimal_elements(wedge).labels() == ["c"]
    assert minimal_elements(total_order(5)).labels() == ["0"]


def test_extremal_by_scan(wedge):
    # every element checked for a strictly larger / smaller one
    for P in [wedge, boolean_lattice(3), generate(GenSpec("random_dag", 10, 3, "0.3"))]:
        leq = brute.leq_matrix(P)
        tops = {b for b in range(P.n) if not any(a != b and leq[b][a] for a in range(P.n))}
        bottoms = {a for a in range(P.n) if not any(b != a and leq[b][a] for b in range(P.n))}
        assert maximal_elements(P).members == tops
        assert minimal_elements(P).members == bottoms


def test_minimal_below_maximal_above(div6, vee, wedge):
    assert div6.label(minimal_below(div6, "6")) == "1"
    assert div6.label(maximal_above(div6, "1")) == "6"
    A = antichain(3)
    assert minimal_below(A, 1) == 1
    assert maximal_above(A, 0) == 0
    assert vee.label(minimal_below(vee, "c")) == "a"
    assert wedge.label(maximal_above(wedge, "c")) == "a"
    with pytest.raises(ElementNotInCarrier):
        minimal_below(div6, "9")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_extremal_lemmas(n):
    for P in enumerate_all_posets(n):
        tops, bottoms = maximal_elements(P), minimal_elements(P)
        assert len(tops) and len(bottoms)
        assert is_antichain(P, tops) and is_antichain(P, bottoms)
        for v in range(n):
            lo, hi = minimal_below(P, v), maximal_above(P, v)
            assert P.leq(lo, v) and lo in bottoms
            assert P.leq(v, hi) and hi in tops


# ---------------------------------------------------------------- up_down_split


def test_split_divisor(div6):
    s = up_down_split(div6, div6.subset(["2", "3"]))
    assert s.up.labels() == ["2", "3", "6"]
    assert s.down.labels() == ["1", "2", "3"]


def test_split_chain():
    P = total_order(5)
    s = up_down_split(P, P.subset([2]))
    assert s.up.sorted() == [2, 3, 4]
    assert s.down.sorted() == [0, 1, 2]


def test_split_not_maximum(div6):
    with pytest.raises(SplitNotCovering) as info:
        up_down_split(div6, div6.subset(["2"]))
    assert info.value.element == "3"


def test_split_host_mismatch(div6):
    with pytest.raises(HostMismatch):
        up_down_split(div6, total_order(4).subset([0]))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_split_invariants(n):
    from posetkit.decomp import width

    for P in enumerate_all_posets(n):
        w = width(P)
        tops, bottoms = maximal_elements(P).members, minimal_elements(P).members
        for s in brute.all_subsets(n):
            A = P.subset(s)
            if len(s) != w or not is_antichain(P, A):
                continue
            split = up_down_split(P, A, check=True)
            assert A.members <= split.up.members & split.down.members
            assert split.up.members | split.down.members == set(range(n))
            if A.members != tops and A.members != bottoms:
                assert split.up.members != set(range(n)) and split.down.members != set(range(n))


# ---------------------------------------------------------------- induced_subposet


def test_induced(div6):
    assert induced_subposet(div6, div6.subset(div6.labels)) == div6
    chain = induced_subposet(div6, div6.subset(["1", "2", "6"]))
    assert chain.n == 3 and is_chain(chain, chain.subset(range(3)))
    anti = induced_subposet(div6, div6.subset(["2", "3"]))
    assert is_antichain(anti, anti.subset(range(2)))
    with pytest.raises(EmptySubset):
        induced_subposet(div6, div6.subset([]))


# ---------------------------------------------------------------- properties


@st.composite
def posets(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    edges = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])))
    labels = [f"e{i}" for i in range(n)]
    return build_poset(labels, [(labels[i], labels[j]) for i, j in edges])


@given(posets())
@settings(max_examples=150, deadline=None)
def test_closure_matches_reachability(P):
    leq = brute.leq_matrix(P)
    for i, j, k in itertools.product(range(P.n), repeat=3):
        if leq[i][j] and leq[j][k]:
            assert leq[i][k]
    for i in range(P.n):
        assert leq[i][i]
        for j in range(P.n):
            if i != j:
                assert not (leq[i][j] and leq[j][i])


@given(posets())
@settings(max_examples=100, deadline=None)
def test_full_reconstruction_roundtrip(P):
    assert build_poset(P.labels, P.relation_pairs(), "full") == P
    assert isinstance(P, FinitePoset)


@given(posets())
@settings(max_examples=100, deadline=None)
def test_hasse_edges_by_triples(P):
    assert P.cover_pairs() == brute.hasse_edges(P)
    rebuilt = build_poset(P.labels, [(P.label(x), P.label(y)) for x, y in P.cover_pairs()])
    assert rebuilt == P
