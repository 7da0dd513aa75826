"""Finite posets over indexed labels, stored as dense bitset relation rows.

Element ``i`` is identified by its index in ``0..n-1``; ``up[i]`` is the
bitmask of all ``j`` with ``i <= j`` and ``down[i]`` the bitmask of all
``j`` with ``j <= i``. Both include ``i`` itself.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, Sequence

from . import kernels

RelationKind = Literal["cover", "full"]


def debug_enabled() -> bool:
    """True when ``POSETKIT_DEBUG=1`` asks for the expensive internal assertions."""
    return os.environ.get("POSETKIT_DEBUG") == "1"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


# ---------------------------------------------------------------- errors


class PosetError(Exception):
    """Base class for all posetkit errors."""


class DuplicateLabel(PosetError):
    pass


class UnknownLabel(PosetError):
    pass


class ElementNotInCarrier(PosetError):
    pass


class HostMismatch(PosetError):
    pass


class EmptySubset(PosetError):
    pass


class InstanceTooLarge(PosetError):
    pass


class AxiomViolation(PosetError):
    """An order axiom fails; ``axiom`` names it and ``witness`` is a label tuple."""

    axiom = "order"

    def __init__(self, message: str, witness: tuple[str, ...] = ()):
        super().__init__(message)
        self.witness = witness


class EmptyCarrier(AxiomViolation):
    axiom = "nonempty"


class NotReflexive(AxiomViolation):
    axiom = "reflexivity"


class NotAntisymmetric(AxiomViolation):
    axiom = "antisymmetry"


class NotTransitive(AxiomViolation):
    axiom = "transitivity"


class SplitNotCovering(PosetError):
    """The up-set and down-set of an antichain miss some element."""

    def __init__(self, message: str, element: str):
        super().__init__(message)
        self.element = element


# ---------------------------------------------------------------- the poset


class FinitePoset:
    """An immutable finite poset.

    Build one with :func:`build_poset`; the constructor trusts its rows.
    """

    __slots__ = ("_labels", "_index", "_up", "_down", "_comp", "_incomp", "_hash")

    def __init__(self, labels: Sequence[str], up: Sequence[int]):
        self._labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        self._up = tuple(up)
        n = len(self._labels)
        down = [0] * n
        for i, row in enumerate(self._up):
            for j in bits(row):
                down[j] |= 1 << i
        self._down = tuple(down)
        self._comp = tuple((u | d) & ~(1 << i) for i, (u, d) in enumerate(zip(self._up, self._down)))
        full = (1 << n) - 1
        self._incomp = tuple(full & ~c & ~(1 << i) for i, c in enumerate(self._comp))
        self._hash = hash((self._labels, self._up))

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def full_mask(self) -> int:
        return (1 << len(self._labels)) - 1

    @property
    def up(self) -> tuple[int, ...]:
        return self._up

    @property
    def down(self) -> tuple[int, ...]:
        return self._down

    @property
    def comparability(self) -> tuple[int, ...]:
        """Comparability graph rows, self excluded."""
        return self._comp

    @property
    def incomparability(self) -> tuple[int, ...]:
        """Incomparability graph rows, self excluded. Antichains are its cliques."""
        return self._incomp

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ElementNotInCarrier(f"no element labelled {label!r}") from None

    def label(self, i: int) -> str:
        return self._labels[i]

    def leq(self, i: int, j: int) -> bool:
        return bool(self._up[i] >> j & 1)

    def relation_matrix(self) -> list[list[bool]]:
        n = self.n
        return [[bool(self._up[i] >> j & 1) for j in range(n)] for i in range(n)]

    def relation_pairs(self) -> list[tuple[str, str]]:
        """Every pair of the order (reflexive pairs included) in index order."""
        return [(self._labels[i], self._labels[j]) for i in range(self.n) for j in bits(self._up[i])]

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Hasse edges ``(x, y)``: ``x < y`` with nothing strictly between."""
        edges = []
        for x in range(self.n):
            above = self._up[x] & ~(1 << x)
            for y in bits(above):
                between = above & self._down[y] & ~(1 << y)
                if not between:
                    edges.append((x, y))
        return edges

    def subset(self, members: Iterable[int | str]) -> "ElementSubset":
        idx = frozenset(self._resolve(m) for m in members)
        return ElementSubset(idx, self)

    def _resolve(self, m: int | str) -> int:
        if isinstance(m, str):
            return self.index(m)
        if not 0 <= m < self.n:
            raise ElementNotInCarrier(f"index {m} outside 0..{self.n - 1}")
        return m

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self._hash == other._hash and self._labels == other._labels and self._up == other._up

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"FinitePoset(n={self.n}, labels={list(self._labels)!r})"


@dataclass(frozen=True)
class ElementSubset:
    """A set of element indices of ``host``. Not validated beyond membership."""

    members: frozenset[int]
    host: FinitePoset = field(repr=False, compare=False)

    def __post_init__(self):
        bad = [i for i in self.members if not 0 <= i < self.host.n]
        if bad:
            raise ElementNotInCarrier(f"indices {sorted(bad)} not in carrier")

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    @classmethod
    def from_mask(cls, host: FinitePoset, mask: int):
        return cls(frozenset(bits(mask)), host)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def labels(self) -> list[str]:
        return [self.host.label(i) for i in sorted(self.members)]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, i: object) -> bool:
        return i in self.members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSubset):
            return NotImplemented
        return self.members == other.members and self.host == other.host

    def __hash__(self) -> int:
        return hash(self.members)


class Chain(ElementSubset):
    """A nonempty subset whose members are pairwise comparable."""

    def __post_init__(self):
        super().__post_init__()
        if not is_chain(self.host, self):
            raise ValueError(f"{self.labels()} is not a chain")


class Antichain(ElementSubset):
    """A nonempty subset with no two distinct comparable members."""

    def __post_init__(self):
        super().__post_init__()
        if not is_antichain(self.host, self):
            raise ValueError(f"{self.labels()} is not an antichain")


@dataclass(frozen=True)
class UpDownSplit:
    up: ElementSubset
    down: ElementSubset
    pivot: Antichain


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    ok: bool
    witness: tuple[str, ...] = ()


# ---------------------------------------------------------------- construction


def _index_input(labels: Sequence[str], pairs: Iterable[tuple[str, str]]) -> tuple[dict[str, int], list[tuple[int, int]]]:
    index: dict[str, int] = {}
    for lab in labels:
        if lab in index:
            raise DuplicateLabel(f"label {lab!r} appears twice")
        index[lab] = len(index)
    resolved = []
    for a, b in pairs:
        for lab in (a, b):
            if lab not in index:
                raise UnknownLabel(f"pair ({a}, {b}) references unknown label {lab!r}")
        resolved.append((index[a], index[b]))
    return index, resolved


def check_axioms(labels: Sequence[str], pairs: Iterable[tuple[str, str]], kind: RelationKind = "cover") -> tuple[list[AxiomCheck], list[int]]:
    """Evaluate every order axiom without raising on axiom failure.

    Returns the per-axiom results (nonempty, reflexivity, antisymmetry,
    transitivity, in that order) and the relation rows. Label errors
    still raise, since they make the input meaningless.
    """
    labels = list(labels)
    _, resolved = _index_input(labels, pairs)
    n = len(labels)
    rows = [0] * n
    for i, j in resolved:
        rows[i] |= 1 << j

    checks = [AxiomCheck("nonempty", n > 0)]
    if kind == "cover":
        rows = kernels.transitive_closure([r | (1 << i) for i, r in enumerate(rows)])
        checks.append(AxiomCheck("reflexivity", True))
    elif kind == "full":
        missing = next((i for i in range(n) if not rows[i] >> i & 1), None)
        checks.append(AxiomCheck("reflexivity", missing is None, () if missing is None else (labels[missing], labels[missing])))
    else:
        raise ValueError(f"unknown relation kind {kind!r}")

    witness: tuple[str, ...] = ()
    for i in range(n):
        for j in bits(rows[i] & ~(1 << i)):
            if rows[j] >> i & 1:
                witness = (labels[min(i, j)], labels[max(i, j)])
                break
        if witness:
            break
    checks.append(AxiomCheck("antisymmetry", not witness, witness))

    witness = ()
    if kind == "full":
        for i in range(n):
            for j in bits(rows[i]):
                gap = rows[j] & ~rows[i]
                if gap:
                    k = (gap & -gap).bit_length() - 1
                    witness = (labels[i], labels[j], labels[k])
                    break
            if witness:
                break
    checks.append(AxiomCheck("transitivity", not witness, witness))
    return checks, rows


_AXIOM_ERRORS = {
    "nonempty": EmptyCarrier,
    "reflexivity": NotReflexive,
    "antisymmetry": NotAntisymmetric,
    "transitivity": NotTransitive,
}


def build_poset(labels: Sequence[str], pairs: Iterable[tuple[str, str]] = (), kind: RelationKind = "cover") -> FinitePoset:
    """Build and validate a poset.

    With ``kind="cover"`` the pairs generate the order by reflexive-transitive
    closure (reflexive input pairs are harmless). With ``kind="full"`` the pairs
    must already be the complete order relation.

    >>> p = build_poset(["1", "2", "3", "6"], [("1", "2"), ("1", "3"), ("2", "6"), ("3", "6")])
    >>> p.leq(p.index("1"), p.index("6"))
    True
    """
    checks, rows = check_axioms(labels, pairs, kind)
    for c in checks:
        if not c.ok:
            exc = _AXIOM_ERRORS[c.axiom]
            detail = f" witness ({', '.join(c.witness)})" if c.witness else ""
            raise exc(f"{c.axiom} fails{detail}", c.witness)
    return FinitePoset(list(labels), rows)


# ---------------------------------------------------------------- predicates


def _check_host(P: FinitePoset, e: ElementSubset) -> None:
    if e.host is not P and e.host != P:
        raise HostMismatch("subset belongs to a different poset")


def comparable(P: FinitePoset, x: int, y: int) -> bool:
    x, y = P._resolve(x), P._resolve(y)
    return bool((P.up[x] | P.down[x]) >> y & 1)


def mask_is_chain(P: FinitePoset, mask: int) -> bool:
    if not mask:
        return False
    comp = P.comparability
    return all((mask & ~(1 << i)) & ~comp[i] == 0 for i in bits(mask))


def mask_is_antichain(P: FinitePoset, mask: int) -> bool:
    if not mask:
        return False
    comp = P.comparability
    return all(mask & comp[i] == 0 for i in bits(mask))


def is_chain(P: FinitePoset, e: ElementSubset) -> bool:
    """Nonempty, inside the carrier of ``P`` and pairwise comparable."""
    if e.host is not P and e.host != P:
        return False
    return mask_is_chain(P, e.mask)


def is_antichain(P: FinitePoset, e: ElementSubset) -> bool:
    """Nonempty, inside the carrier of ``P`` and pairwise incomparable."""
    if e.host is not P and e.host != P:
        return False
    return mask_is_antichain(P, e.mask)


# ---------------------------------------------------------------- extremal elements


def maximal_mask(P: FinitePoset, within: int) -> int:
    """Maximal elements of the subposet induced on ``within``."""
    up = P.up
    return mask_of(i for i in bits(within) if up[i] & within == 1 << i)


def minimal_mask(P: FinitePoset, within: int) -> int:
    down = P.down
    return mask_of(i for i in bits(within) if down[i] & within == 1 << i)


def maximal_elements(P: FinitePoset) -> Antichain:
    m = maximal_mask(P, P.full_mask)
    # a valid finite poset always has one
    assert m, "poset without maximal element"
    return Antichain.from_mask(P, m)


def minimal_elements(P: FinitePoset) -> Antichain:
    m = minimal_mask(P, P.full_mask)
    assert m, "poset without minimal element"
    return Antichain.from_mask(P, m)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def minimal_below(P: FinitePoset, y: int | str) -> int:
    """Lowest-index minimal element of ``P`` that lies below ``y``."""
    y = P._resolve(y)
    return _lowest(minimal_mask(P, P.down[y]))


def maximal_above(P: FinitePoset, x: int | str) -> int:
    """Lowest-index maximal element of ``P`` that lies above ``x``."""
    x = P._resolve(x)
    return _lowest(maximal_mask(P, P.up[x]))


# ---------------------------------------------------------------- splits and subposets


def split_masks(P: FinitePoset, pivot: int, within: int) -> tuple[int, int]:
    up = down = 0
    for y in bits(pivot):
        up |= P.up[y]
        down |= P.down[y]
    return up & within, down & within


def up_down_split(P: FinitePoset, A: ElementSubset, check: bool | None = None) -> UpDownSplit:
    """Split ``P`` into the elements above and below a maximum antichain ``A``."""
    _check_host(P, A)
    if not mask_is_antichain(P, A.mask):
        raise ValueError(f"{A.labels()} is not an antichain")
    if check is None:
        check = debug_enabled()
    if check:
        from .decomp import width

        if len(A) != width(P):
            raise ValueError(f"antichain of size {len(A)} is not maximum")
    up, down = split_masks(P, A.mask, P.full_mask)
    missing = P.full_mask & ~(up | down)
    if missing:
        lab = P.label(_lowest(missing))
        raise SplitNotCovering(f"element {lab} is neither above nor below the antichain", lab)
    return UpDownSplit(
        ElementSubset.from_mask(P, up),
        ElementSubset.from_mask(P, down),
        Antichain(A.members, P),
    )


def induced_subposet(P: FinitePoset, S: ElementSubset) -> FinitePoset:
    """Restrict the order of ``P`` to ``S``, keeping index order."""
    _check_host(P, S)
    if not S.members:
        raise EmptySubset("cannot induce a poset on the empty set")
    keep = S.sorted()
    pos = {old: new for new, old in enumerate(keep)}
    mask = S.mask
    rows = [mask_of(pos[j] for j in bits(P.up[i] & mask)) for i in keep]
    return FinitePoset([P.label(i) for i in keep], rows)
