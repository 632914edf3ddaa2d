"""Dense multidigraph values and their basic invariants.

A graph is an n x n matrix of nonnegative integers: entry (i, j) counts the
directed edges i -> j, and a diagonal entry counts loops.  One loop adds 1 to
the out-degree and 1 to the in-degree of its vertex (so a single vertex with
two loops is already stable).  The empty graph (n = 0) is a valid value.

All sizes of interest are tiny (stability forces edge_count >= 2n, and the
catalogs stop at weight 5, so n <= 5 there; family builders go up to n = 16),
which is why canonical forms and automorphism counts are done by full
permutation search instead of partition refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from itertools import permutations

Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "Matrix",
    "MultiDigraph",
    "DegreeProfile",
    "EMPTY",
    "degrees",
    "is_semistable",
    "is_stable",
    "weak_components",
    "is_strongly_connected",
    "canonical_key",
    "canonical_form",
    "are_isomorphic",
    "automorphisms",
    "aut_order",
    "disjoint_union",
    "relabel",
    "parse_graph",
    "format_graph",
]


@dataclass(frozen=True)
class MultiDigraph:
    """Immutable multidigraph given by its adjacency matrix."""

    adj: Matrix

    @staticmethod
    def from_rows(rows) -> "MultiDigraph":
        adj = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(adj)
        for i, row in enumerate(adj):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
            for j, x in enumerate(row):
                if x < 0:
                    raise ValueError(f"row {i + 1}, column {j + 1}: negative entry {x}")
        return MultiDigraph(adj)

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(sum(row) for row in self.adj)

    @property
    def weight(self) -> int:
        return self.edge_count - self.n

    def out_degrees(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.adj)

    def in_degrees(self) -> tuple[int, ...]:
        n = self.n
        return tuple(sum(self.adj[i][v] for i in range(n)) for v in range(n))

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as (tail, head, label) with labels 0..adj[i][j]-1."""
        return [
            (i, j, t)
            for i, row in enumerate(self.adj)
            for j, mult in enumerate(row)
            for t in range(mult)
        ]

    def __repr__(self) -> str:
        return f"MultiDigraph({format_graph(self)!r})"


EMPTY = MultiDigraph(())


@dataclass(frozen=True)
class DegreeProfile:
    outdeg: tuple[int, ...]
    indeg: tuple[int, ...]


def degrees(g: MultiDigraph) -> DegreeProfile:
    return DegreeProfile(g.out_degrees(), g.in_degrees())


def is_semistable(g: MultiDigraph) -> bool:
    """deg-(v) >= 1, deg+(v) >= 1 and deg-(v) + deg+(v) >= 3 at every vertex."""
    outs, ins = g.out_degrees(), g.in_degrees()
    return all(o >= 1 and i >= 1 and o + i >= 3 for o, i in zip(outs, ins))


def is_stable(g: MultiDigraph) -> bool:
    """deg+(v) >= 2 and deg-(v) >= 2 at every vertex; the empty graph is stable."""
    outs, ins = g.out_degrees(), g.in_degrees()
    return all(o >= 2 for o in outs) and all(i >= 2 for i in ins)


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------


def _undirected_reach(adj: Matrix, start: int) -> set[int]:
    n = len(adj)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in range(n):
            if v not in seen and (adj[u][v] > 0 or adj[v][u] > 0):
                seen.add(v)
                stack.append(v)
    return seen


def _directed_reach(adj: Matrix, start: int, reverse: bool = False) -> set[int]:
    n = len(adj)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in range(n):
            mult = adj[v][u] if reverse else adj[u][v]
            if mult > 0 and v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def induced_subgraph(g: MultiDigraph, vertices: list[int]) -> MultiDigraph:
    return MultiDigraph(
        tuple(tuple(g.adj[u][v] for v in vertices) for u in vertices)
    )


def weak_components(g: MultiDigraph) -> list[MultiDigraph]:
    """Induced subgraphs on the undirected components, in canonical-key order."""
    remaining = set(range(g.n))
    parts = []
    while remaining:
        comp = _undirected_reach(g.adj, min(remaining))
        parts.append(induced_subgraph(g, sorted(comp)))
        remaining -= comp
    parts.sort(key=canonical_key)
    return parts


def is_strongly_connected(g: MultiDigraph) -> bool:
    if g.n == 0:
        raise ValueError("strong connectivity is undefined for the empty graph")
    full = set(range(g.n))
    return _directed_reach(g.adj, 0) == full and _directed_reach(g.adj, 0, reverse=True) == full


# ---------------------------------------------------------------------------
# canonical form, isomorphism, automorphisms
# ---------------------------------------------------------------------------


@cache
def canonical_key(g: MultiDigraph) -> tuple[int, ...]:
    """Vertex count followed by the lexicographically minimal flattening of adj.

    Minimal over all vertex permutations, so two graphs share a key exactly
    when they are isomorphic as multidigraphs (parallel edges unlabeled).
    """
    n = g.n
    if n == 0:
        return (0,)
    rows = g.adj
    best = min(
        tuple(rows[u][v] for u in per for v in per)
        for per in permutations(range(n))
    )
    return (n, *best)


def canonical_form(g: MultiDigraph) -> MultiDigraph:
    key = canonical_key(g)
    n = key[0]
    flat = key[1:]
    return MultiDigraph(tuple(flat[i * n : (i + 1) * n] for i in range(n)))


def are_isomorphic(g: MultiDigraph, h: MultiDigraph) -> bool:
    return canonical_key(g) == canonical_key(h)


@cache
def automorphisms(g: MultiDigraph) -> tuple[tuple[int, ...], ...]:
    """Vertex permutations phi with adj[phi(i)][phi(j)] = adj[i][j] everywhere."""
    n = g.n
    rows = g.adj
    found = []
    for per in permutations(range(n)):
        if all(rows[per[i]][per[j]] == rows[i][j] for i in range(n) for j in range(n)):
            found.append(per)
    return tuple(found)


@cache
def aut_order(g: MultiDigraph) -> int:
    """Order of the automorphism group with parallel edges distinguishable.

    Product of the factorials of all multiplicities times the number of
    vertex permutations stabilizing the matrix.
    """
    label_factor = math.prod(math.factorial(x) for row in g.adj for x in row)
    return label_factor * len(automorphisms(g))


def disjoint_union(gs: list[MultiDigraph]) -> MultiDigraph:
    total = sum(g.n for g in gs)
    out = [[0] * total for _ in range(total)]
    offset = 0
    for g in gs:
        for i in range(g.n):
            for j in range(g.n):
                out[offset + i][offset + j] = g.adj[i][j]
        offset += g.n
    return MultiDigraph(tuple(tuple(row) for row in out))


def relabel(g: MultiDigraph, per) -> MultiDigraph:
    """Graph whose vertex i is vertex per[i] of g."""
    n = g.n
    return MultiDigraph(tuple(tuple(g.adj[per[i]][per[j]] for j in range(n)) for i in range(n)))


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------
# Rows of space-separated decimal integers; rows joined by ';' on a command
# line or by newlines in files.  "0 2;2 0" is the double 2-cycle.


def parse_graph(text: str) -> MultiDigraph:
    rows = [r for r in text.replace(";", "\n").splitlines() if r.strip()]
    if not rows:
        return EMPTY
    parsed: list[list[int]] = []
    for i, row in enumerate(rows):
        entries = []
        for j, token in enumerate(row.split()):
            try:
                x = int(token)
            except ValueError:
                raise ValueError(f"row {i + 1}, column {j + 1}: not an integer: {token!r}") from None
            if x < 0:
                raise ValueError(f"row {i + 1}, column {j + 1}: negative entry {x}")
            entries.append(x)
        parsed.append(entries)
    n = len(parsed)
    for i, row in enumerate(parsed):
        if len(row) != n:
            raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n} (matrix must be square)")
    return MultiDigraph(tuple(tuple(row) for row in parsed))


def format_graph(g: MultiDigraph, sep: str = ";") -> str:
    return sep.join(" ".join(str(x) for x in row) for row in g.adj)
