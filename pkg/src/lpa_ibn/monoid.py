"""The talented monoid of a finite graph.

Generators are ``v(a)`` for a vertex ``v`` and an integer level ``a``; each
regular ``v(a)`` equals the sum of ``r(e)(a + 1)`` over the edges ``e`` leaving
``v``.  Elements are kept over the base graph (vertex index, level) and are
never materialised on the infinite covering graph.

Equality is decided by pushing both sides up to a common level, comparing the
sink generators that got stuck on the way, and then checking whether the
difference of the two frontiers is killed by some power of the expansion map.
"""

from __future__ import annotations

import enum
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ParseError, SinkError
from .graph import Graph


@dataclass(frozen=True)
class TalentedElement:
    """Finite multiset of generators; ``terms`` maps (vertex, level) to multiplicity."""

    terms: tuple[tuple[int, int, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: Mapping[tuple[int, int], int]) -> "TalentedElement":
        terms = []
        for (v, a), k in counts.items():
            if k < 0:
                raise ValueError("negative multiplicity")
            if k:
                terms.append((v, a, k))
        terms.sort(key=lambda t: (t[1], t[0]))
        return cls(tuple(terms))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]]) -> "TalentedElement":
        counts: dict[tuple[int, int], int] = defaultdict(int)
        for v, a, k in terms:
            counts[v, a] += k
        return cls.from_counts(counts)

    @classmethod
    def generator(cls, v: int, level: int, mult: int = 1) -> "TalentedElement":
        return cls.from_terms([(v, level, mult)])

    def counts(self) -> dict[tuple[int, int], int]:
        return {(v, a): k for v, a, k in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def levels(self) -> list[int]:
        return [a for _, a, _ in self.terms]

    def __add__(self, other: "TalentedElement") -> "TalentedElement":
        return TalentedElement.from_terms(self.terms + other.terms)

    def scaled(self, k: int) -> "TalentedElement":
        return TalentedElement.from_terms((v, a, m * k) for v, a, m in self.terms)


ZERO = TalentedElement()

_TERM = re.compile(r"^(?:(\d+)\s*\*\s*)?([^\s()*+]+)\s*\(\s*([+-]?\d+)\s*\)$")


def parse_element(text: str, g: Graph) -> TalentedElement:
    """Parse ``"2*u(2) + v(2)"``; ``"0"`` is the zero element."""
    text = text.strip()
    if text == "0":
        return ZERO
    if not text:
        raise ParseError("empty element")
    terms = []
    for chunk in text.split("+"):
        m = _TERM.match(chunk.strip())
        if not m:
            raise ParseError(f"cannot parse term {chunk.strip()!r}")
        k = int(m.group(1)) if m.group(1) else 1
        if k <= 0:
            raise ParseError(f"coefficient must be positive in {chunk.strip()!r}")
        terms.append((g.index(m.group(2)), int(m.group(3)), k))
    return TalentedElement.from_terms(terms)


def format_element(e: TalentedElement, g: Graph) -> str:
    if e.is_zero():
        return "0"
    parts = []
    for v, a, k in e.terms:
        name = f"{g.vertices[v]}({a})"
        parts.append(name if k == 1 else f"{k}*{name}")
    return "+".join(parts)


def shift(e: TalentedElement, n: int) -> TalentedElement:
    return TalentedElement(tuple((v, a + n, k) for v, a, k in e.terms))


def all_vertices(g: Graph, level: int, mult: int = 1) -> TalentedElement:
    """The element ``sum_v v(level)``, i.e. the class of the shifted free module."""
    return TalentedElement.from_terms((v, level, mult) for v in range(g.order))


@dataclass(frozen=True)
class NormalForm:
    frozen_sinks: tuple[tuple[int, tuple[int, ...]], ...]
    """(level, multiplicities over the sink vertices), only for levels with stuck mass."""
    frontier_level: int | None
    frontier: tuple[int, ...]


def _step(g: Graph, vec: list[int], sinks: set[int]) -> list[int]:
    out = [0] * g.order
    for v, k in enumerate(vec):
        if k and v not in sinks:
            for w, m in enumerate(g.adjacency[v]):
                if m:
                    out[w] += k * m
    return out


def expand_to_level(g: Graph, e: TalentedElement, delta: int | None) -> NormalForm:
    """Rewrite every regular generator below ``delta`` until it reaches ``delta``."""
    if e.is_zero():
        return NormalForm((), delta, (0,) * g.order)
    levels = e.levels()
    if delta is None:
        delta = max(levels)
    if delta < max(levels):
        raise ValueError(f"target level {delta} below existing level {max(levels)}")
    sinks = g.sinks()
    sink_set = set(sinks)
    by_level: dict[int, list[int]] = defaultdict(lambda: [0] * g.order)
    for v, a, k in e.terms:
        by_level[a][v] += k
    frozen = []
    vec = [0] * g.order
    for level in range(min(levels), delta):
        incoming = by_level.get(level)
        if incoming:
            vec = [x + y for x, y in zip(vec, incoming)]
        stuck = tuple(vec[s] for s in sinks)
        if any(stuck):
            frozen.append((level, stuck))
        vec = _step(g, vec, sink_set)
    incoming = by_level.get(delta)
    if incoming:
        vec = [x + y for x, y in zip(vec, incoming)]
    return NormalForm(tuple(frozen), delta, tuple(vec))


def element_of(g: Graph, nf: NormalForm) -> TalentedElement:
    """The element a normal form stands for."""
    sinks = g.sinks()
    terms = [(sinks[i], level, k) for level, stuck in nf.frozen_sinks for i, k in enumerate(stuck)]
    if nf.frontier_level is not None:
        terms += [(v, nf.frontier_level, k) for v, k in enumerate(nf.frontier)]
    return TalentedElement.from_terms(t for t in terms if t[2])


def equal(g: Graph, a: TalentedElement, b: TalentedElement) -> bool:
    """Decide ``a == b`` in the talented monoid of ``g``."""
    if a.is_zero() and b.is_zero():
        return True
    top = max(a.levels() + b.levels())
    na = expand_to_level(g, a, top)
    nb = expand_to_level(g, b, top)
    if na.frozen_sinks != nb.frozen_sinks:
        return False
    sinks = g.sinks()
    sink_set = set(sinks)
    d = [x - y for x, y in zip(na.frontier, nb.frontier)]
    # the kernels of the powers of the expansion map stabilise within h steps
    for _ in range(g.order + 1):
        if not any(d):
            return True
        if any(d[s] for s in sinks):
            return False
        d = _step(g, d, sink_set)
    return False


class OracleVerdict(enum.Enum):
    EQUAL = "equal"
    UNEQUAL = "unequal"
    INCONCLUSIVE = "inconclusive"


def equal_oracle(g: Graph, a: TalentedElement, b: TalentedElement, depth: int) -> OracleVerdict:
    """Semi-decision by brute expansion: compare full normal forms level by level.

    Shares nothing with :func:`equal` beyond :func:`expand_to_level`.
    """
    if a.is_zero() and b.is_zero():
        return OracleVerdict.EQUAL
    top = max(a.levels() + b.levels())
    for delta in range(top, top + depth + 1):
        na = expand_to_level(g, a, delta)
        nb = expand_to_level(g, b, delta)
        if na == nb:
            return OracleVerdict.EQUAL
        if na.frozen_sinks != nb.frozen_sinks:
            return OracleVerdict.UNEQUAL
    return OracleVerdict.INCONCLUSIVE


def certificate_to_equation(g: Graph, cert) -> tuple[TalentedElement, TalentedElement]:
    """The equation ``sum_P (sum_v v)(d - p) = sum_Q (sum_v v)(d - q)`` with ``d = max exponent``."""
    if g.has_sink():
        raise SinkError("certificates are only defined for graphs without sinks")
    P, Q = tuple(cert.P), tuple(cert.Q)
    if not P or not Q:
        raise ValueError("both sides of a certificate must be nonempty")
    top = max(P + Q)
    left = TalentedElement.from_terms((v, top - p, 1) for p in P for v in range(g.order))
    right = TalentedElement.from_terms((v, top - q, 1) for q in Q for v in range(g.order))
    return left, right
