"""Brute-force baselines and certificate checkers.

Nothing here calls into ``decomp``; the checkers only look at the
structures they are handed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from . import kernels
from .core import (
    Antichain,
    Chain,
    ElementSubset,
    FinitePoset,
    InstanceTooLarge,
    bits,
    mask_is_antichain,
    mask_is_chain,
)
from .decomp import Certificate, CoverFamily

MIN_COVER_LIMIT = 15
MAX_ANTICHAIN_LIMIT = 20


class FailureKind(enum.Enum):
    NONE = "None"
    NOT_A_CHAIN = "NotAChain"
    NOT_AN_ANTICHAIN = "NotAnAntichain"
    NOT_A_COVER = "NotACover"
    SIZES_DIFFER = "SizesDiffer"
    INJECTION_FAILED = "InjectionFailed"
    HOST_MISMATCH = "HostMismatch"


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failure_kind: FailureKind = FailureKind.NONE
    witness: Any = None
    message: str = ""

    def __post_init__(self):
        if self.ok != (self.failure_kind is FailureKind.NONE):
            raise ValueError("ok must be true exactly when failure_kind is NONE")

    def render(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.failure_kind.value}: {self.message}"


OK = VerificationReport(True)


def _fail(kind: FailureKind, witness: Any, message: str) -> VerificationReport:
    return VerificationReport(False, kind, witness, message)


# ---------------------------------------------------------------- brute force


def _min_partition(P: FinitePoset, adj: tuple[int, ...]) -> int:
    if P.n > MIN_COVER_LIMIT:
        raise InstanceTooLarge(f"subset DP is limited to {MIN_COVER_LIMIT} elements, got {P.n}")
    return kernels.min_clique_partition(list(adj))


def brute_min_chain_cover_size(P: FinitePoset) -> int:
    """Fewest chains partitioning the carrier, by DP over all element subsets."""
    return _min_partition(P, P.comparability)


def brute_min_antichain_cover_size(P: FinitePoset) -> int:
    """Fewest antichains partitioning the carrier, by DP over all element subsets."""
    return _min_partition(P, P.incomparability)


def brute_max_antichain(P: FinitePoset) -> Antichain:
    """Maximum independent set of the comparability graph by branch and bound.

    Ties go to the lexicographically smallest sorted index tuple.
    """
    if P.n > MAX_ANTICHAIN_LIMIT:
        raise InstanceTooLarge(f"branch and bound is limited to {MAX_ANTICHAIN_LIMIT} elements, got {P.n}")
    comp = P.comparability
    order = list(range(P.n))
    best: list[int] = []

    def branch(pos: int, chosen: list[int], blocked: int) -> None:
        nonlocal best
        free = [v for v in order[pos:] if not blocked >> v & 1]
        if len(chosen) + len(free) <= len(best):
            return
        if not free:
            best = list(chosen)
            return
        v = free[0]
        nxt = order.index(v) + 1
        chosen.append(v)
        branch(nxt, chosen, blocked | comp[v])
        chosen.pop()
        branch(nxt, chosen, blocked)

    branch(0, [], 0)
    return Antichain(frozenset(best), P)


def brute_max_chain(P: FinitePoset) -> Chain:
    """A longest chain: longest path in the strict order, first predecessor on ties."""
    order = sorted(range(P.n), key=lambda i: (P.down[i].bit_count(), i))
    length = [1] * P.n
    prev = [-1] * P.n
    for v in order:
        for u in bits(P.down[v] & ~(1 << v)):
            if length[u] + 1 > length[v]:
                length[v], prev[v] = length[u] + 1, u
    end = max(range(P.n), key=lambda i: (length[i], -i))
    members = []
    while end >= 0:
        members.append(end)
        end = prev[end]
    return Chain(frozenset(members), P)


# ---------------------------------------------------------------- verification


def _same_host(a: ElementSubset, v: CoverFamily) -> bool:
    return a.host is v.host or a.host == v.host


def check_cover(v: CoverFamily) -> VerificationReport:
    """Every part passes its predicate and every element lies in some part."""
    P = v.host
    chains = v.flavor == "chain_cover"
    pred = mask_is_chain if chains else mask_is_antichain
    kind = FailureKind.NOT_A_CHAIN if chains else FailureKind.NOT_AN_ANTICHAIN
    noun = "chain" if chains else "antichain"
    union = 0
    for idx, part in enumerate(v.parts):
        if part.host is not P and part.host != P:
            return _fail(FailureKind.HOST_MISMATCH, idx, f"part {idx} belongs to another poset")
        m = part.mask
        if not pred(P, m):
            pair = _offending_pair(P, m, chains)
            detail = f" ({P.label(pair[0])}, {P.label(pair[1])})" if pair else " (empty)"
            return _fail(kind, (idx, pair), f"part {idx} is not a {noun}{detail}")
        union |= m
    missing = P.full_mask & ~union
    if missing:
        x = (missing & -missing).bit_length() - 1
        return _fail(FailureKind.NOT_A_COVER, x, f"element {P.label(x)} uncovered")
    return OK


def _offending_pair(P: FinitePoset, m: int, chains: bool) -> tuple[int, int] | None:
    for i in bits(m):
        for j in bits(m & ~((2 << i) - 1)):
            related = P.comparability[i] >> j & 1
            if chains != bool(related):
                return (i, j)
    return None


def _check_witness(w: ElementSubset, want_chain: bool) -> VerificationReport:
    P = w.host
    m = w.mask
    pred = mask_is_chain if want_chain else mask_is_antichain
    if pred(P, m):
        return OK
    kind = FailureKind.NOT_A_CHAIN if want_chain else FailureKind.NOT_AN_ANTICHAIN
    pair = _offending_pair(P, m, want_chain)
    detail = f" ({P.label(pair[0])}, {P.label(pair[1])})" if pair else " (empty)"
    noun = "chain" if want_chain else "antichain"
    return _fail(kind, ("witness", pair), f"witness is not a {noun}{detail}")


def _injection(w: ElementSubset, v: CoverFamily) -> VerificationReport:
    """Map each witness element to the first part holding it; must be total and injective."""
    P = v.host
    owner: dict[int, int] = {}
    masks = v.masks
    for x in w.sorted():
        part = next((i for i, m in enumerate(masks) if m >> x & 1), None)
        if part is None:
            return _fail(FailureKind.NOT_A_COVER, x, f"element {P.label(x)} uncovered")
        for y, p in owner.items():
            if p == part:
                return _fail(
                    FailureKind.INJECTION_FAILED,
                    (y, x),
                    f"elements {P.label(y)} and {P.label(x)} share part {part}",
                )
        owner[x] = part
    return OK


def verify_antichain_vs_cover(a: ElementSubset, v: CoverFamily) -> VerificationReport:
    """Pigeonhole check: an antichain meets each chain of a cover at most once."""
    if not _same_host(a, v):
        return _fail(FailureKind.HOST_MISMATCH, None, "antichain and cover live in different posets")
    for report in (_check_witness(a, want_chain=False), check_cover(v), _injection(a, v)):
        if not report.ok:
            return report
    return OK


def verify_chain_vs_antichain_cover(c: ElementSubset, v: CoverFamily) -> VerificationReport:
    """A chain meets each antichain of a cover at most once."""
    if not _same_host(c, v):
        return _fail(FailureKind.HOST_MISMATCH, None, "chain and cover live in different posets")
    for report in (_check_witness(c, want_chain=True), check_cover(v), _injection(c, v)):
        if not report.ok:
            return report
    return OK


def check_certificate(cert: Certificate) -> VerificationReport:
    """Validate witness, cover, coverage, equal sizes and the injection."""
    w, v = cert.witness, cert.cover
    if not _same_host(w, v):
        return _fail(FailureKind.HOST_MISMATCH, None, "witness and cover live in different posets")
    want_chain = cert.theorem == "mirsky"
    expected_flavor = "antichain_cover" if want_chain else "chain_cover"
    if v.flavor != expected_flavor:
        kind = FailureKind.NOT_AN_ANTICHAIN if want_chain else FailureKind.NOT_A_CHAIN
        return _fail(kind, "flavor", f"{cert.theorem} certificate needs a {expected_flavor}, got {v.flavor}")
    for report in (_check_witness(w, want_chain), check_cover(v)):
        if not report.ok:
            return report
    if len(w) != len(v.parts):
        return _fail(
            FailureKind.SIZES_DIFFER,
            (len(w), len(v.parts)),
            f"witness has {len(w)} elements, cover has {len(v.parts)} parts",
        )
    return _injection(w, v)
