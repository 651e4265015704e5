"""Graph families: Cayley graphs, Hopf graphs, lines and cycles.

Groups are given by Cayley tables (``table[i][j]`` is the index of ``i * j``)
and validated exhaustively, so keep them small.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path
from typing import Mapping, Sequence

from .errors import GroupAxiomError, NotGeneratingError, ParseError, SemanticError
from .graph import Graph

MAX_GROUP_ORDER = 64


@dataclass(frozen=True)
class Group:
    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.names)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise SemanticError(f"unknown group element {name!r}") from None


def group_from_table(names: Sequence[str], table: Sequence[Sequence[int]]) -> Group:
    names = tuple(str(x) for x in names)
    n = len(names)
    if n == 0:
        raise GroupAxiomError("empty group")
    if n > MAX_GROUP_ORDER:
        raise GroupAxiomError(f"order {n} exceeds the cap {MAX_GROUP_ORDER}")
    if len(set(names)) != n:
        raise GroupAxiomError("duplicate element names")
    if len(table) != n or any(len(row) != n for row in table):
        raise GroupAxiomError(f"table must be {n}x{n}")
    t = tuple(tuple(int(x) for x in row) for row in table)
    if any(not 0 <= x < n for row in t for x in row):
        raise GroupAxiomError("table entry out of range")
    full = set(range(n))
    for i, row in enumerate(t):
        if set(row) != full:
            raise GroupAxiomError(f"row {names[i]} is not a permutation (not a Latin square)")
    for j in range(n):
        if {t[i][j] for i in range(n)} != full:
            raise GroupAxiomError(f"column {names[j]} is not a permutation (not a Latin square)")
    ident = next((e for e in range(n) if all(t[e][x] == x == t[x][e] for x in range(n))), None)
    if ident is None:
        raise GroupAxiomError("no identity element")
    inverse = []
    for x in range(n):
        y = next((y for y in range(n) if t[x][y] == ident == t[y][x]), None)
        if y is None:
            raise GroupAxiomError(f"{names[x]} has no inverse")
        inverse.append(y)
    for a in range(n):
        ta = t[a]
        for b in range(n):
            tab = t[ta[b]]
            tb = t[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise GroupAxiomError(
                        f"associativity fails at ({names[a]}, {names[b]}, {names[c]})"
                    )
    return Group(names, t, ident, tuple(inverse))


def load_group(path: str | Path) -> Group:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read group from {path}: {exc}") from None
    if not isinstance(data, dict) or "elements" not in data or "table" not in data:
        raise ParseError("group JSON needs 'elements' and 'table'")
    return group_from_table(data["elements"], data["table"])


def group_to_dict(g: Group) -> dict:
    return {"elements": list(g.names), "table": [list(r) for r in g.table]}


def cyclic_group(n: int) -> Group:
    return group_from_table([str(i) for i in range(n)],
                            [[(i + j) % n for j in range(n)] for i in range(n)])


def _cycle_name(perm: tuple[int, ...]) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        parts.append("(" + "".join(str(i + 1) for i in cyc) + ")")
    return "".join(parts) or "id"


def symmetric_group(n: int) -> Group:
    """S_n with elements in cycle notation, identity first, then by support size and name."""
    perms = list(permutations(range(n)))
    perms.sort(key=lambda p: (sum(i != x for i, x in enumerate(p)), _cycle_name(p)))
    pos = {p: i for i, p in enumerate(perms)}
    # (a * b)(x) = a(b(x))
    table = [[pos[tuple(a[b[x]] for x in range(n))] for b in perms] for a in perms]
    return group_from_table([_cycle_name(p) for p in perms], table)


def direct_product(g1: Group, g2: Group) -> Group:
    pairs = [(a, b) for a in range(g1.order) for b in range(g2.order)]
    pos = {p: i for i, p in enumerate(pairs)}
    table = [[pos[g1.mul(a, c), g2.mul(b, d)] for c, d in pairs] for a, b in pairs]
    return group_from_table([f"({g1.names[a]},{g2.names[b]})" for a, b in pairs], table)


def conjugacy_classes(g: Group) -> list[list[int]]:
    """Orbits of ``x -> y x y^-1``, each sorted, ordered by smallest member."""
    seen: set[int] = set()
    classes = []
    for x in range(g.order):
        if x in seen:
            continue
        cls = sorted({g.mul(g.mul(y, x), g.inverse[y]) for y in range(g.order)})
        seen.update(cls)
        classes.append(cls)
    return classes


def generated_subgroup(g: Group, gens: Sequence[int]) -> set[int]:
    reached = {g.identity}
    frontier = [g.identity]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = g.mul(x, s)
            if y not in reached:
                reached.add(y)
                frontier.append(y)
    return reached


def cayley_graph(g: Group, gens: Sequence[int]) -> Graph:
    """One edge ``x -> x s`` per element ``x`` and generator ``s``."""
    gens = sorted(set(gens))
    if not gens:
        raise NotGeneratingError("empty generating set")
    if any(not 0 <= s < g.order for s in gens):
        raise SemanticError("generator index out of range")
    if len(generated_subgroup(g, gens)) != g.order:
        raise NotGeneratingError("the given elements do not generate the group")
    adj = [[0] * g.order for _ in range(g.order)]
    for x in range(g.order):
        for s in gens:
            adj[x][g.mul(x, s)] += 1
    return Graph(g.names, tuple(tuple(r) for r in adj))


def cyclic_cayley(n: int, j: int) -> Graph:
    """``C_n^j``: vertices ``v1..vn`` with edges ``v_i -> v_{i+1}`` and ``v_i -> v_{i+j}``."""
    if n < 3:
        raise SemanticError("need n >= 3")
    if not 0 <= j < n:
        raise SemanticError("need 0 <= j < n")
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        adj[i][(i + 1) % n] += 1
        adj[i][(i + j) % n] += 1
    return Graph.from_matrix(adj)


def ramification_from_counts(g: Group, counts: Mapping[int, int]) -> dict[int, int]:
    """Normalise ``{element index: count}`` to ``{class representative: count}``."""
    rep = {x: cls[0] for cls in conjugacy_classes(g) for x in cls}
    out: dict[int, int] = {}
    for x, k in counts.items():
        if not 0 <= x < g.order:
            raise SemanticError(f"element index {x} out of range")
        if isinstance(k, bool) or not isinstance(k, int) or k < 0:
            raise SemanticError(f"ramification count must be a nonnegative integer, got {k!r}")
        r = rep[x]
        if r in out:
            raise SemanticError(f"conjugacy class of {g.names[x]} given twice")
        out[r] = k
    return out


def parse_ramification(text: str, g: Group) -> dict[int, int]:
    """``"(123):1,(12):2"``: comma separated ``name:count``; names may be any class member."""
    counts = {}
    text = text.strip()
    if not text:
        return {}
    # element names may themselves contain commas, so split at ':<digits>' boundaries
    rest = text
    while rest:
        head, sep, tail = rest.partition(":")
        if not sep:
            raise ParseError(f"bad ramification entry {rest!r}")
        num, _, rest = tail.partition(",")
        try:
            k = int(num)
        except ValueError:
            raise ParseError(f"bad count {num!r}") from None
        x = g.index(head.strip())
        if x in counts:
            raise ParseError(f"element {head.strip()!r} given twice")
        counts[x] = k
    return ramification_from_counts(g, counts)


def format_ramification(g: Group, ram: Mapping[int, int]) -> str:
    return ",".join(f"{g.names[r]}:{k}" for r, k in sorted(ram.items()))


def ramification_weight(g: Group, ram: Mapping[int, int]) -> int:
    """``sum_C r_C |C|``, the common in- and out-degree of the Hopf graph."""
    size = {cls[0]: len(cls) for cls in conjugacy_classes(g)}
    return sum(k * size[r] for r, k in ram.items())


def hopf_graph(g: Group, ram: Mapping[int, int]) -> Graph:
    """``r_C`` parallel edges ``x -> x c`` for every ``x`` and every ``c`` in class ``C``."""
    ram = ramification_from_counts(g, ram)
    classes = {cls[0]: cls for cls in conjugacy_classes(g)}
    adj = [[0] * g.order for _ in range(g.order)]
    for r, k in ram.items():
        if not k:
            continue
        for x in range(g.order):
            for c in classes[r]:
                adj[x][g.mul(x, c)] += k
    return Graph(g.names, tuple(tuple(row) for row in adj))


def line_graph(n: int) -> Graph:
    """``L_n``: ``v1 -> v2 -> ... -> vn``."""
    if n < 1:
        raise SemanticError("line length must be positive")
    return Graph.from_edges([f"v{i}" for i in range(1, n + 1)],
                            [(f"v{i}", f"v{i + 1}") for i in range(1, n)])


def cycle_graph(m: int) -> Graph:
    """``C_m``: ``u1 -> u2 -> ... -> um -> u1``; ``m = 1`` is a single loop."""
    if m < 1:
        raise SemanticError("cycle length must be positive")
    names = [f"u{i}" for i in range(1, m + 1)]
    return Graph.from_edges(names, [(names[i], names[(i + 1) % m]) for i in range(m)])


def family(kind: str, size: int) -> Graph:
    if kind == "line":
        return line_graph(size)
    if kind == "cycle":
        return cycle_graph(size)
    raise SemanticError(f"unknown family {kind!r}")
