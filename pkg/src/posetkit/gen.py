"""Seeded and structured poset families.

Random DAGs draw from SplitMix64 (Steele, Lea & Flood 2014):

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out = z ^ (z >> 31)

all arithmetic mod 2**64. An edge ``i -> j`` (``i < j``, pairs visited in
row-major order) is kept when ``(out >> 11) < p * 2**53``, evaluated
exactly with rational ``p``. The stream is identical on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal

from .core import FinitePoset, InstanceTooLarge, PosetError, bits, build_poset

Kind = Literal["random_dag", "boolean_lattice", "divisor", "grid", "total_order", "antichain", "exhaustive"]
KINDS = ("random_dag", "boolean_lattice", "divisor", "grid", "total_order", "antichain", "exhaustive")

MASK64 = (1 << 64) - 1
EXHAUSTIVE_LIMIT = 4


class BadParams(PosetError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def bernoulli(self, p: Fraction) -> bool:
        return (self.next() >> 11) * p.denominator < p.numerator * (1 << 53)


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``n`` is the element count (``k`` for boolean lattices, the integer
    whose divisors are taken for ``divisor``, the row count for ``grid``).
    ``m`` is the grid column count. For ``exhaustive`` the ``seed`` picks
    the poset by its position in :func:`enumerate_all_posets`.
    """

    kind: Kind
    n: int
    seed: int = 0
    edge_prob: Fraction | float | str = Fraction(1, 2)
    m: int = 1


def _labels(n: int) -> list[str]:
    return [str(i) for i in range(n)]


def random_dag(n: int, seed: int, p: Fraction) -> FinitePoset:
    rng = SplitMix64(seed)
    labels = _labels(n)
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n) if rng.bernoulli(p)]
    return build_poset(labels, pairs, "cover")


def boolean_lattice(k: int) -> FinitePoset:
    """Subsets of ``{0..k-1}`` under inclusion, labelled like ``{0,2}``."""
    def name(s: int) -> str:
        return "{" + ",".join(str(i) for i in bits(s)) + "}"

    labels = [name(s) for s in range(1 << k)]
    pairs = [(labels[s], labels[s | 1 << i]) for s in range(1 << k) for i in range(k) if not s >> i & 1]
    return build_poset(labels, pairs, "cover")


def divisor_poset(n: int) -> FinitePoset:
    divs = [d for d in range(1, n + 1) if n % d == 0]
    labels = [str(d) for d in divs]
    pairs = [(str(a), str(b)) for a in divs for b in divs if b != a and b % a == 0 and _is_prime(b // a)]
    return build_poset(labels, pairs, "cover")


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % f for f in range(2, int(q**0.5) + 1))


def grid(a: int, b: int) -> FinitePoset:
    """Product order on ``{0..a-1} x {0..b-1}``."""
    labels = [f"({i},{j})" for i in range(a) for j in range(b)]
    pairs = []
    for i in range(a):
        for j in range(b):
            if i + 1 < a:
                pairs.append((f"({i},{j})", f"({i + 1},{j})"))
            if j + 1 < b:
                pairs.append((f"({i},{j})", f"({i},{j + 1})"))
    return build_poset(labels, pairs, "cover")


def total_order(n: int) -> FinitePoset:
    labels = _labels(n)
    return build_poset(labels, list(zip(labels, labels[1:])), "cover")


def antichain(n: int) -> FinitePoset:
    return build_poset(_labels(n), [], "cover")


def _as_fraction(p: Fraction | float | str) -> Fraction:
    try:
        frac = Fraction(p)
    except (TypeError, ValueError, ZeroDivisionError):
        raise BadParams(f"edge probability {p!r} is not a number") from None
    if not 0 <= frac <= 1:
        raise BadParams(f"edge probability {p} outside [0, 1]")
    return frac


def generate(spec: GenSpec) -> FinitePoset:
    if spec.kind not in KINDS:
        raise BadParams(f"unknown kind {spec.kind!r}")
    if spec.n < 1 or spec.m < 1:
        raise BadParams("sizes must be at least 1")
    if not 0 <= spec.seed <= MASK64:
        raise BadParams("seed must be an unsigned 64-bit integer")
    if spec.kind == "random_dag":
        return random_dag(spec.n, spec.seed, _as_fraction(spec.edge_prob))
    if spec.kind == "boolean_lattice":
        if spec.n > 10:
            raise BadParams("boolean lattice rank above 10 is not desk scale")
        return boolean_lattice(spec.n)
    if spec.kind == "divisor":
        return divisor_poset(spec.n)
    if spec.kind == "grid":
        return grid(spec.n, spec.m)
    if spec.kind == "total_order":
        return total_order(spec.n)
    if spec.kind == "antichain":
        return antichain(spec.n)
    try:
        corpus = enumerate_all_posets(spec.n)
    except InstanceTooLarge as exc:
        raise BadParams(str(exc)) from None
    count = 0
    for count, P in enumerate(corpus, 1):
        if count - 1 == spec.seed:
            return P
    raise BadParams(f"only {count} labelled posets on {spec.n} elements")


def enumerate_all_posets(n: int) -> Iterator[FinitePoset]:
    """Every labelled partial order on ``n`` elements, each exactly once.

    Element ``k`` is added to each poset on ``0..k-1`` by choosing its
    strict down-set ``D`` (down-closed) and strict up-set ``U``
    (up-closed), disjoint, with every member of ``D`` below every member
    of ``U``. That choice determines the extension uniquely.
    """
    if n > EXHAUSTIVE_LIMIT:
        raise InstanceTooLarge(f"exhaustive enumeration is limited to {EXHAUSTIVE_LIMIT} elements")
    if n < 1:
        raise BadParams("n must be at least 1")
    return _enumerate(n)


def _enumerate(n: int) -> Iterator[FinitePoset]:
    labels = "abcdefghijklmnopqrstuvwxyz"[:n]

    def extend(up: list[int], k: int) -> Iterator[list[int]]:
        if k == n:
            yield up
            return
        down = [0] * k
        for i in range(k):
            for j in bits(up[i]):
                down[j] |= 1 << i
        for d in range(1 << k):
            if any(down[x] & ~d for x in bits(d)):
                continue
            for u in range(1 << k):
                if u & d or any(up[x] & ~u for x in bits(u)):
                    continue
                if any(up[x] & u != u for x in bits(d)):
                    continue
                rows = [row | (1 << k if d >> i & 1 else 0) for i, row in enumerate(up)]
                for x in bits(d):
                    rows[x] |= u
                rows.append(1 << k | u)
                yield from extend(rows, k + 1)

    for rows in extend([], 0):
        yield FinitePoset(list(labels), rows)
