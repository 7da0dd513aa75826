"""Minimum chain covers (Perles' induction) and antichain covers (peeling maxima).

Internally everything works on bitmasks inside one host poset: an induced
subposet is just a mask of surviving elements, since it shares the host's
order relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from . import kernels
from .core import (
    Antichain,
    Chain,
    ElementSubset,
    FinitePoset,
    InstanceTooLarge,
    PosetError,
    SplitNotCovering,
    bits,
    debug_enabled,
    mask_is_antichain,
    mask_is_chain,
    maximal_mask,
    minimal_mask,
    split_masks,
)

Flavor = Literal["chain_cover", "antichain_cover"]

# Largest poset handled by the exact branch-and-bound / Perles route.
PERLES_LIMIT = 20


class StitchFailure(PosetError):
    """A Perles sub-cover part did not contain exactly one pivot element."""


class CertificateMismatch(PosetError):
    """Witness and cover sizes differ on a produced certificate."""


@dataclass(frozen=True)
class CoverFamily:
    parts: tuple[ElementSubset, ...]
    host: FinitePoset = field(repr=False)
    flavor: Flavor = "chain_cover"
    method: str = ""

    @classmethod
    def from_masks(cls, host: FinitePoset, masks: Sequence[int], flavor: Flavor, method: str = "") -> "CoverFamily":
        return cls(tuple(ElementSubset.from_mask(host, m) for m in masks), host, flavor, method)

    @property
    def masks(self) -> list[int]:
        return [p.mask for p in self.parts]

    def canonical(self) -> "CoverFamily":
        """Parts ordered by least element index (empty parts last)."""
        key = lambda p: (min(p.members) if p.members else self.host.n, p.sorted())  # noqa: E731
        return CoverFamily(tuple(sorted(self.parts, key=key)), self.host, self.flavor, self.method)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class Certificate:
    """Equal-size witness and cover; the pair proves both are optimal."""

    witness: ElementSubset
    cover: CoverFamily
    theorem: Literal["dilworth", "mirsky"]


@dataclass
class PerlesTrace:
    """Instrumentation of one :func:`chain_cover_perles` run."""

    max_depth: int = 0
    calls: int = 0
    base: int = 0
    case1: int = 0
    case2: int = 0
    carrier_sizes: list[int] = field(default_factory=list)


@dataclass
class MirskyTrace:
    """Height of the remaining poset before each peel (the last entry is 0)."""

    heights: list[int] = field(default_factory=list)


# ---------------------------------------------------------------- width and height


def _topological(P: FinitePoset) -> list[int]:
    # x < y implies down[x] is a proper subset of down[y]
    return sorted(range(P.n), key=lambda i: P.down[i].bit_count())


def width_of(P: FinitePoset, within: int) -> int:
    """Width of the subposet induced on ``within`` via exact branch and bound."""
    if not within:
        return 0
    return kernels.max_clique(list(P.incomparability), within).bit_count()


def height_of(P: FinitePoset, within: int) -> int:
    """Height of the subposet induced on ``within`` via longest-path DP."""
    longest = [0] * P.n
    best = 0
    for v in _topological(P):
        if not within >> v & 1:
            continue
        below = P.down[v] & within & ~(1 << v)
        longest[v] = 1 + max((longest[u] for u in bits(below)), default=0)
        best = max(best, longest[v])
    return best


def width(P: FinitePoset) -> int:
    """Size of a largest antichain.

    Exact branch and bound up to ``PERLES_LIMIT`` elements, the size of a
    matching-based chain cover above it.
    """
    if P.n <= PERLES_LIMIT:
        return width_of(P, P.full_mask)
    return len(min_chain_cover_matching(P))


def height(P: FinitePoset) -> int:
    return height_of(P, P.full_mask)


def largest_antichain(P: FinitePoset) -> Antichain:
    """A maximum antichain, lexicographically first by sorted indices when n <= 20."""
    if P.n <= PERLES_LIMIT:
        return Antichain.from_mask(P, kernels.max_clique(list(P.incomparability), P.full_mask))
    return Antichain.from_mask(P, _konig_antichain(P))


def largest_chain(P: FinitePoset) -> Chain:
    """The lexicographically first maximum chain, built greedily.

    Index ``v`` joins the chain if some maximum chain contains the elements
    chosen so far plus ``v`` and skips every smaller index already rejected.
    """
    h = height(P)
    comp = P.comparability
    chosen = 0
    allowed = P.full_mask
    for v in range(P.n):
        if chosen.bit_count() == h:
            break
        if not allowed >> v & 1:
            continue
        trial = chosen | 1 << v
        cand = allowed & ~(((1 << v) - 1) & ~chosen)
        for c in bits(trial):
            cand &= comp[c] | 1 << c
        if height_of(P, cand) == h:
            chosen, allowed = trial, cand
        else:
            allowed &= ~(1 << v)
    return Chain.from_mask(P, chosen)


# ---------------------------------------------------------------- matching route


def _strict_matching(P: FinitePoset) -> list[int]:
    """Maximum matching of the split graph: left ``i`` to right ``j`` iff i < j."""
    n = P.n
    rows, cols = [], []
    for i in range(n):
        for j in bits(P.up[i] & ~(1 << i)):
            rows.append(i)
            cols.append(j)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    match = maximum_bipartite_matching(graph, perm_type="column")
    return [int(j) for j in match]


def min_chain_cover_matching(P: FinitePoset) -> CoverFamily:
    """Minimum chain cover from a maximum matching on strict-order pairs.

    Each matched pair ``i -> j`` links ``j`` after ``i``; the resulting
    paths are chains because the order is transitive. Size is
    ``n - |matching|``.
    """
    succ = _strict_matching(P)
    has_pred = 0
    for j in succ:
        if j >= 0:
            has_pred |= 1 << j
    parts = []
    for start in range(P.n):
        if has_pred >> start & 1:
            continue
        m, v = 0, start
        while v >= 0:
            m |= 1 << v
            v = succ[v]
        parts.append(m)
    return CoverFamily.from_masks(P, parts, "chain_cover", "matching").canonical()


def _konig_antichain(P: FinitePoset) -> int:
    """Maximum antichain as the complement of a König vertex cover."""
    succ = _strict_matching(P)
    pred = [-1] * P.n
    for i, j in enumerate(succ):
        if j >= 0:
            pred[j] = i
    reach_left = 0
    reach_right = 0
    frontier = [i for i in range(P.n) if succ[i] < 0]
    for i in frontier:
        reach_left |= 1 << i
    while frontier:
        u = frontier.pop()
        for v in bits(P.up[u] & ~(1 << u) & ~reach_right):
            reach_right |= 1 << v
            w = pred[v]
            if w >= 0 and not reach_left >> w & 1:
                reach_left |= 1 << w
                frontier.append(w)
    return reach_left & ~reach_right


# ---------------------------------------------------------------- Perles


def chain_cover_perles(P: FinitePoset, *, trace: PerlesTrace | None = None, check: bool | None = None) -> CoverFamily:
    """Minimum chain cover following Perles' induction on the carrier size.

    Case 1 (some maximum antichain is neither the maximal nor the minimal
    elements): recurse on the up-set and down-set of that antichain and
    join the two covers at the antichain. Case 2: remove a chain from a
    minimal element up to a maximal element and recurse on the rest.
    """
    if P.n > PERLES_LIMIT:
        raise InstanceTooLarge(f"Perles route is limited to {PERLES_LIMIT} elements, got {P.n}")
    if check is None:
        check = debug_enabled()
    incomp = list(P.incomparability)
    trace = trace if trace is not None else PerlesTrace()

    def solve(carrier: int, depth: int) -> list[int]:
        trace.calls += 1
        trace.max_depth = max(trace.max_depth, depth)
        trace.carrier_sizes.append(carrier.bit_count())
        if carrier.bit_count() == 1:
            trace.base += 1
            return [carrier]

        m = kernels.max_clique(incomp, carrier).bit_count()
        tops = maximal_mask(P, carrier)
        bottoms = minimal_mask(P, carrier)
        pivot = kernels.first_clique_of_size(incomp, carrier, m, tops, bottoms)

        if pivot:
            trace.case1 += 1
            up, down = split_masks(P, pivot, carrier)
            missing = carrier & ~(up | down)
            if missing:
                lab = P.label((missing & -missing).bit_length() - 1)
                raise SplitNotCovering(f"element {lab} escapes the split", lab)
            if check:
                assert up != carrier and down != carrier, "split did not shrink the carrier"
                assert width_of(P, up) == m and width_of(P, down) == m, "pivot not maximum in a half"
            upper = _by_pivot(solve(up, depth + 1), pivot)
            lower = _by_pivot(solve(down, depth + 1), pivot)
            parts = [upper[a] | lower[a] for a in bits(pivot)]
        else:
            trace.case2 += 1
            x = (bottoms & -bottoms).bit_length() - 1
            above = maximal_mask(P, P.up[x] & carrier)
            y = (above & -above).bit_length() - 1
            link = 1 << x | 1 << y
            rest = carrier & ~link
            if check and rest:
                assert width_of(P, rest) == m - 1, "removing the chain did not lower the width"
            parts = (solve(rest, depth + 1) if rest else []) + [link]

        if check:
            assert len(parts) == m, f"cover of size {len(parts)} for width {m}"
        return parts

    parts = solve(P.full_mask, 1)
    return CoverFamily.from_masks(P, parts, "chain_cover", "perles").canonical()


def _by_pivot(parts: list[int], pivot: int) -> dict[int, int]:
    joined: dict[int, int] = {}
    for part in parts:
        hit = part & pivot
        if hit.bit_count() != 1:
            raise StitchFailure(f"sub-cover part {bin(part)} meets the pivot in {hit.bit_count()} elements")
        a = hit.bit_length() - 1
        if a in joined:
            raise StitchFailure(f"pivot element {a} lies in two sub-cover parts")
        joined[a] = part
    if len(joined) != pivot.bit_count():
        raise StitchFailure("some pivot element is not covered by the sub-cover")
    return joined


# ---------------------------------------------------------------- Mirsky


def antichain_cover_mirsky(P: FinitePoset, *, trace: MirskyTrace | None = None, check: bool | None = None) -> CoverFamily:
    """Antichain cover by repeatedly removing the maximal elements.

    Parts are returned in emission order, top layer first.
    """
    if check is None:
        check = debug_enabled()
    remaining = P.full_mask
    parts = []
    h = height_of(P, remaining) if (check or trace is not None) else 0
    if trace is not None:
        trace.heights.append(h)
    while remaining:
        peel = maximal_mask(P, remaining)
        assert peel, "no maximal element in a nonempty poset"
        parts.append(peel)
        remaining &= ~peel
        if check or trace is not None:
            after = height_of(P, remaining)
            if trace is not None:
                trace.heights.append(after)
            if check:
                assert after == h - 1, f"peel lowered height {h} to {after}"
            h = after
    return CoverFamily.from_masks(P, parts, "antichain_cover", "mirsky")


# ---------------------------------------------------------------- covers and certificates


def disjointify_cover(cover: CoverFamily) -> CoverFamily:
    """Give every element to the first part containing it; drop emptied parts."""
    seen = 0
    parts = []
    for m in cover.masks:
        own = m & ~seen
        seen |= m
        if own:
            parts.append(own)
    return CoverFamily.from_masks(cover.host, parts, cover.flavor, cover.method)


def dilworth_certificate(P: FinitePoset) -> Certificate:
    witness = largest_antichain(P)
    cover = chain_cover_perles(P) if P.n <= PERLES_LIMIT else min_chain_cover_matching(P)
    if len(witness) != len(cover):
        raise CertificateMismatch(f"antichain of size {len(witness)} against {len(cover)} chains")
    return Certificate(witness, cover, "dilworth")


def mirsky_certificate(P: FinitePoset) -> Certificate:
    witness = largest_chain(P)
    cover = antichain_cover_mirsky(P)
    if len(witness) != len(cover):
        raise CertificateMismatch(f"chain of size {len(witness)} against {len(cover)} antichains")
    return Certificate(witness, cover, "mirsky")


def cover_is_valid(cover: CoverFamily) -> bool:
    """Every part passes its predicate and the parts cover the carrier."""
    P = cover.host
    pred = mask_is_chain if cover.flavor == "chain_cover" else mask_is_antichain
    union = 0
    for m in cover.masks:
        if not pred(P, m):
            return False
        union |= m
    return union == P.full_mask
