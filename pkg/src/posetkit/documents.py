"""The ``posetkit/1`` line-oriented document format.

A file holds one or more documents. Each document opens with a header
line ``posetkit/1 <type>`` and closes with ``end``::

    posetkit/1 poset
    elements 1 2 3 6
    relation cover
    pair 1 2
    pair 1 3
    pair 2 6
    pair 3 6
    end

    posetkit/1 cover
    flavor chains
    method perles
    part 1 2 6
    part 3
    end

    posetkit/1 witness
    role antichain
    members 2 3
    end

Labels are whitespace-free tokens not starting with ``#``. Blank lines
and ``#`` comment lines are ignored everywhere. Between documents, lines
of ``key=value`` tokens (summary lines) are ignored as well. A document
missing its ``end`` is a parse error, which catches truncated files.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import ElementSubset, FinitePoset, PosetError, build_poset
from .decomp import CoverFamily

HEADER = "posetkit/1"
FLAVORS = {"chains": "chain_cover", "antichains": "antichain_cover"}
FLAVOR_NAMES = {v: k for k, v in FLAVORS.items()}


class ParseError(PosetError):
    pass


@dataclass
class PosetDocument:
    elements: list[str]
    kind: str
    pairs: list[tuple[str, str]]

    def build(self) -> FinitePoset:
        return build_poset(self.elements, self.pairs, self.kind)  # type: ignore[arg-type]


@dataclass
class CoverDocument:
    flavor: str
    method: str
    parts: list[list[str]] = field(default_factory=list)


@dataclass
class WitnessDocument:
    role: str
    members: list[str]


Document = PosetDocument | CoverDocument | WitnessDocument


def _fields(body: list[tuple[int, list[str]]], kind: str) -> dict[str, list[tuple[int, list[str]]]]:
    allowed = {
        "poset": {"elements", "relation", "pair"},
        "cover": {"flavor", "method", "part"},
        "witness": {"role", "members"},
    }[kind]
    out: dict[str, list[tuple[int, list[str]]]] = {}
    for lineno, toks in body:
        key = toks[0]
        if key not in allowed:
            raise ParseError(f"line {lineno}: unexpected field {key!r} in {kind} document")
        out.setdefault(key, []).append((lineno, toks[1:]))
    return out


def _single(fields, key: str, kind: str, lineno: int) -> list[str]:
    entries = fields.get(key)
    if not entries:
        raise ParseError(f"line {lineno}: {kind} document lacks {key!r}")
    if len(entries) > 1:
        raise ParseError(f"line {entries[1][0]}: duplicate {key!r}")
    return entries[0][1]


def _one_token(toks: list[str], key: str, lineno: int) -> str:
    if len(toks) != 1:
        raise ParseError(f"line {lineno}: {key!r} takes exactly one value")
    return toks[0]


def _build(kind: str, start: int, body: list[tuple[int, list[str]]]) -> Document:
    fields = _fields(body, kind)
    if kind == "poset":
        elements = _single(fields, "elements", kind, start)
        relation = _one_token(_single(fields, "relation", kind, start), "relation", start)
        if relation not in ("cover", "full"):
            raise ParseError(f"line {start}: relation must be 'cover' or 'full', got {relation!r}")
        pairs = []
        for lineno, toks in fields.get("pair", []):
            if len(toks) != 2:
                raise ParseError(f"line {lineno}: pair needs two labels")
            pairs.append((toks[0], toks[1]))
        return PosetDocument(list(elements), relation, pairs)
    if kind == "cover":
        flavor = _one_token(_single(fields, "flavor", kind, start), "flavor", start)
        if flavor not in FLAVORS:
            raise ParseError(f"line {start}: flavor must be 'chains' or 'antichains'")
        method = _one_token(_single(fields, "method", kind, start), "method", start) if "method" in fields else ""
        return CoverDocument(flavor, method, [toks for _, toks in fields.get("part", [])])
    role = _one_token(_single(fields, "role", kind, start), "role", start)
    if role not in ("chain", "antichain"):
        raise ParseError(f"line {start}: role must be 'chain' or 'antichain'")
    return WitnessDocument(role, list(_single(fields, "members", kind, start)))


def parse(text: str) -> list[Document]:
    docs: list[Document] = []
    current: tuple[str, int, list[tuple[int, list[str]]]] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if current is None:
            if toks[0] == HEADER:
                if len(toks) != 2 or toks[1] not in ("poset", "cover", "witness"):
                    raise ParseError(f"line {lineno}: bad header {line!r}")
                current = (toks[1], lineno, [])
            elif all("=" in t for t in toks):
                continue
            else:
                raise ParseError(f"line {lineno}: expected '{HEADER} <type>', got {line!r}")
        elif toks == ["end"]:
            kind, start, body = current
            docs.append(_build(kind, start, body))
            current = None
        elif toks[0] == HEADER:
            raise ParseError(f"line {lineno}: new document before 'end'")
        else:
            current[2].append((lineno, toks))
    if current is not None:
        raise ParseError(f"document opened on line {current[1]} has no 'end' (truncated?)")
    if not docs:
        raise ParseError("no document found")
    return docs


def first(docs: list[Document], cls: type) -> Document | None:
    return next((d for d in docs if isinstance(d, cls)), None)


# ---------------------------------------------------------------- rendering


def render_poset(P: FinitePoset, kind: str = "cover") -> str:
    """Canonical document; ``cover`` kind lists only the Hasse edges."""
    lines = [f"{HEADER} poset", "elements " + " ".join(P.labels), f"relation {kind}"]
    if kind == "cover":
        pairs = [(P.label(x), P.label(y)) for x, y in P.cover_pairs()]
    else:
        pairs = P.relation_pairs()
    lines += [f"pair {a} {b}" for a, b in pairs]
    lines.append("end")
    return "\n".join(lines) + "\n"


def render_cover(cover: CoverFamily) -> str:
    lines = [f"{HEADER} cover", f"flavor {FLAVOR_NAMES[cover.flavor]}"]
    if cover.method:
        lines.append(f"method {cover.method}")
    lines += ["part " + " ".join(p.labels()) for p in cover.canonical().parts]
    lines.append("end")
    return "\n".join(lines) + "\n"


def render_witness(w: ElementSubset, role: str) -> str:
    return f"{HEADER} witness\nrole {role}\nmembers {' '.join(w.labels())}\nend\n"


def cover_from_doc(P: FinitePoset, doc: CoverDocument) -> CoverFamily:
    parts = tuple(P.subset(labels) for labels in doc.parts)
    return CoverFamily(parts, P, FLAVORS[doc.flavor], doc.method)  # type: ignore[arg-type]


def witness_from_doc(P: FinitePoset, doc: WitnessDocument) -> ElementSubset:
    return P.subset(doc.members)
