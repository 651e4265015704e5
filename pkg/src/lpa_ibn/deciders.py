"""IBN and graded IBN decisions for Leavitt path algebras of finite graphs.

IBN: with the regular vertices listed first, the algebra has IBN iff
``rank(A^T - J) < rank([A^T - J | 1])`` over the rationals.

Graded IBN: a graph with a sink always has it.  Without sinks it fails exactly
when there are exponent multisets ``P``, ``Q`` of different sizes with
``1^T sum_P A^p == 1^T sum_Q A^q``.  Such a pair exists iff the integer
relation ``sum_p c_p 1^T A^p = 0`` has ``sum_p c_p != 0``, i.e. iff
``(0, ..., 0, 1)`` lies in the rational span of the vectors ``(1^T A^p | 1)``.
Those vectors are a Krylov sequence of ``diag(A^T, 1)``, an ``(h+1)``-square
matrix, so exponents ``0..h`` already span everything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np

from .errors import CertificateError, SinkError
from .exactmat import integer_direction, rank_q, solve_in_rowspan, transpose, vec_mat
from .graph import Graph, classify_vertices, maximal_sinks_and_cycles

MAXIMAL_SHORTCUT = "maximal-sink-or-cycle"

SINK_PRESENT = "sink-present"
NO_RELATION = "no-relation-exists"
COLUMN_SUM_UNIFORM = "column-sum-uniform"
SPAN_CERTIFICATE = "span-certificate"


@dataclass(frozen=True)
class Certificate:
    """Exponent multisets, stored sorted.  ``|P| != |Q|`` for a genuine certificate."""

    P: tuple[int, ...]
    Q: tuple[int, ...]

    def __post_init__(self) -> None:
        for side in (self.P, self.Q):
            if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in side):
                raise ValueError("exponents must be nonnegative integers")
        object.__setattr__(self, "P", tuple(sorted(self.P)))
        object.__setattr__(self, "Q", tuple(sorted(self.Q)))

    @property
    def m(self) -> int:
        return len(self.P)

    @property
    def n(self) -> int:
        return len(self.Q)

    def canonical(self) -> "Certificate":
        """Cancel exponents common to both sides."""
        p, q = list(self.P), list(self.Q)
        for x in list(p):
            if x in q:
                p.remove(x)
                q.remove(x)
        return Certificate(tuple(p), tuple(q))

    def to_dict(self) -> dict:
        return {"P": list(self.P), "Q": list(self.Q)}

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        return cls(tuple(data["P"]), tuple(data["Q"]))


@dataclass(frozen=True)
class IbnVerdict:
    has_ibn: bool
    rank_left: int
    rank_right: int
    shortcut: str | None = None

    def to_dict(self) -> dict:
        d = {"hasIbn": self.has_ibn, "rankLeft": self.rank_left, "rankRight": self.rank_right}
        if self.shortcut:
            d["shortcut"] = self.shortcut
        return d


@dataclass(frozen=True)
class GrIbnVerdict:
    has_gribn: bool
    reason: str
    certificate: Certificate | None = None
    column_sum: int | None = field(default=None)

    def to_dict(self) -> dict:
        d = {
            "hasGrIbn": self.has_gribn,
            "reason": self.reason,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }
        if self.column_sum is not None:
            d["columnSum"] = self.column_sum
        return d


def ibn_matrices(g: Graph) -> tuple[list[list[int]], list[list[int]]]:
    """``A^T - J`` and its augmentation by the all-ones column, regular vertices first."""
    cls = classify_vertices(g)
    order = sorted(cls.regular) + sorted(cls.sinks)
    z = len(cls.regular)
    a = [[g.adjacency[i][j] for j in order] for i in order]
    at = [list(row) for row in transpose(a)]
    for i in range(z):
        at[i][i] -= 1
    return at, [row + [1] for row in at]


def decide_ibn(g: Graph) -> IbnVerdict:
    left, right = ibn_matrices(g)
    rl, rr = rank_q(left), rank_q(right)
    sinks, cycles = maximal_sinks_and_cycles(g)
    shortcut = MAXIMAL_SHORTCUT if (sinks or cycles) else None
    return IbnVerdict(rl < rr, rl, rr, shortcut)


def sufficient_ibn_maximal(g: Graph) -> bool:
    sinks, cycles = maximal_sinks_and_cycles(g)
    return bool(sinks or cycles)


def _require_no_sinks(g: Graph) -> None:
    if g.has_sink():
        raise SinkError("graph has a sink")


def ones_powers(g: Graph, top: int) -> list[tuple[int, ...]]:
    """``[1^T A^0, 1^T A^1, ..., 1^T A^top]``."""
    x = (1,) * g.order
    out = [x]
    for _ in range(top):
        x = vec_mat(x, g.adjacency)
        out.append(x)
    return out


def column_sum_shortcut(g: Graph) -> int | None:
    """Common column sum ``c >= 2`` if every column of ``A`` sums to it."""
    _require_no_sinks(g)
    sums = set(g.column_sums())
    if len(sums) == 1:
        c = sums.pop()
        if c >= 2:
            return c
    return None


def shortcut_certificate(c: int) -> Certificate:
    """``1^T A = c 1^T`` read as one copy at exponent 1 against ``c`` copies at 0."""
    return Certificate((1,), (0,) * c)


def exact_certificate(g: Graph) -> Certificate | None:
    _require_no_sinks(g)
    h = g.order
    rows = [x + (1,) for x in ones_powers(g, h)]
    lam = solve_in_rowspan(rows, (0,) * h + (1,))
    if lam is None:
        return None
    coeffs = integer_direction(lam)
    P = tuple(p for p, c in enumerate(coeffs) if c > 0 for _ in range(c))
    Q = tuple(p for p, c in enumerate(coeffs) if c < 0 for _ in range(-c))
    return Certificate(P, Q)


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    _require_no_sinks(g)
    if not cert.P or not cert.Q:
        raise ValueError("both sides of a certificate must be nonempty")
    if cert.m == cert.n:
        return False
    powers = ones_powers(g, max(cert.P + cert.Q))
    h = g.order

    def side(exps):
        total = [0] * h
        for p in exps:
            total = [a + b for a, b in zip(total, powers[p])]
        return total

    return side(cert.P) == side(cert.Q)


def decide_gribn(g: Graph) -> GrIbnVerdict:
    if g.has_sink():
        return GrIbnVerdict(True, SINK_PRESENT)
    cert = exact_certificate(g)
    if cert is None:
        return GrIbnVerdict(True, NO_RELATION)
    c = column_sum_shortcut(g)
    if c is not None:
        verdict = GrIbnVerdict(False, COLUMN_SUM_UNIFORM, shortcut_certificate(c), c)
    else:
        verdict = GrIbnVerdict(False, SPAN_CERTIFICATE, cert)
    if not verify_certificate(g, verdict.certificate):
        raise CertificateError(f"certificate {verdict.certificate} failed verification")
    return verdict


@lru_cache(maxsize=8)
def _search_table(max_exp: int, max_terms: int) -> tuple[tuple[Certificate, ...], np.ndarray]:
    """Every disjoint pair (P, Q) with sizes m != n, m + n <= max_terms, in search order."""
    exps = range(max_exp + 1)
    multisets = {k: list(combinations_with_replacement(exps, k)) for k in range(1, max_terms)}
    certs: list[Certificate] = []
    for total in range(3, max_terms + 1):
        batch = []
        for m in range(1, total):
            n = total - m
            if m == n:
                continue
            for P in multisets[m]:
                used = set(P)
                for Q in multisets[n]:
                    if used.isdisjoint(Q):
                        batch.append((P, Q))
        batch.sort()
        certs.extend(Certificate(P, Q) for P, Q in batch)
    coeffs = np.zeros((len(certs), max_exp + 1), dtype=np.int64)
    for row, cert in enumerate(certs):
        for p in cert.P:
            coeffs[row, p] += 1
        for q in cert.Q:
            coeffs[row, q] -= 1
    return tuple(certs), coeffs


def bounded_certificate_search(g: Graph, max_exp: int, max_terms: int) -> Certificate | None:
    """First certificate in (total size, then lexicographic) order within the bounds."""
    _require_no_sinks(g)
    if max_exp < 1 or max_terms < 2:
        raise ValueError("need max_exp >= 1 and max_terms >= 2")
    if max_terms < 3:
        return None
    certs, coeffs = _search_table(max_exp, max_terms)
    # independent of the span solver: plain repeated vector-matrix products
    powers = [list((1,) * g.order)]
    for _ in range(max_exp):
        prev = powers[-1]
        powers.append([sum(prev[i] * g.adjacency[i][j] for i in range(g.order))
                       for j in range(g.order)])
    biggest = max(max(row) for row in powers)
    if biggest * max_terms < 2**62:
        sums = coeffs @ np.array(powers, dtype=np.int64)
    else:
        sums = coeffs.astype(object) @ np.array(powers, dtype=object)
    hits = np.flatnonzero(~np.any(sums != 0, axis=1))
    return certs[hits[0]] if hits.size else None
