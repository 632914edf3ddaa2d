"""Euler tours, arborescences, cycle-decomposition polynomials, and the two
identities that tie the weight-k catalogs to Bernoulli numbers and to the
unit-ball polynomials P_k.

Conventions that matter here:

* Parallel edges and loops are distinguishable everywhere (epsilon([[3]]) is
  2, not 1).
* epsilon(G) counts Euler tours starting with a fixed first edge; it is 0
  for graphs that are unbalanced, weakly disconnected, or edgeless.  For the
  rest it factors as tau(G) * prod((deg+(v) - 1)!) with tau the number of
  spanning in-trees toward the head of the fixed edge (matrix-tree minor of
  the loopless out-degree Laplacian, validated against brute force).
* A cycle decomposition is a partition of the edge multiset into closed
  trails, each counted up to cyclic rotation of the trail.  Equivalently it
  is a choice, at every vertex, of a bijection from in-edges to out-edges;
  p(H) is the number of trails.  Under this convention sum(N^p(H)) times the
  catalog weights reproduces P_1..P_4 exactly, and the coefficient of N^1 is
  epsilon(G) again (a closed trail through all edges meets the fixed first
  edge once, so trails up to rotation biject with tours starting there).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations, product

from .enumeration import enumerate_weight
from .graphs import MultiDigraph, aut_order, weak_components
from .zeta import det_a_minus_i, det_int, z

__all__ = [
    "IntPolynomial",
    "is_balanced",
    "arborescence_count",
    "arborescences_bruteforce",
    "euler_tour_count",
    "euler_tour_bruteforce",
    "cycle_decomposition_poly",
    "bernoulli",
    "bernoulli_identity_lhs",
    "unit_ball_lhs",
    "unit_ball_rhs",
    "UnitBallIdentity",
    "unit_ball_identity",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in one indeterminate N, exact rational coefficients,
    lowest degree first, trailing zeros trimmed."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(values) -> "IntPolynomial":
        cs = [Fraction(v) for v in values]
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPolynomial(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.of(
            [self.coefficient(t) + other.coefficient(t) for t in range(size)]
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial.of(out)

    def scale(self, factor) -> "IntPolynomial":
        return IntPolynomial.of([Fraction(factor) * c for c in self.coeffs])

    def __call__(self, x) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total


ZERO_POLY = IntPolynomial(())


def is_balanced(g: MultiDigraph) -> bool:
    return g.out_degrees() == g.in_degrees()


# ---------------------------------------------------------------------------
# arborescences and Euler tours
# ---------------------------------------------------------------------------


def arborescence_count(g: MultiDigraph, root: int) -> int:
    """Spanning in-trees toward root, by the matrix-tree minor.

    Laplacian is D_out - A with loops dropped; deleting the root row and
    column and taking the determinant counts the trees with every arrow
    pointing toward the root.  A single vertex has exactly one (empty) tree.
    """
    n = g.n
    if not 0 <= root < n:
        raise ValueError("root out of range")
    outs = g.out_degrees()
    lap = [
        [(outs[i] - g.adj[i][i] if i == j else -g.adj[i][j]) for j in range(n)]
        for i in range(n)
    ]
    minor = [[lap[i][j] for j in range(n) if j != root] for i in range(n) if i != root]
    return det_int(minor)


def arborescences_bruteforce(g: MultiDigraph, root: int) -> int:
    """Direct count: each non-root vertex picks one outgoing labeled edge and
    the picks must form a tree flowing into the root."""
    n = g.n
    if not 0 <= root < n:
        raise ValueError("root out of range")
    others = [v for v in range(n) if v != root]
    choices = []
    for v in others:
        opts = [(v, w) for w in range(n) if w != v for _ in range(g.adj[v][w])]
        choices.append(opts)
    count = 0
    for pick in product(*choices):
        parent = {v: w for (v, w) in pick}
        ok = True
        for v in others:
            seen = set()
            u = v
            while u != root:
                if u in seen:
                    ok = False
                    break
                seen.add(u)
                u = parent[u]
            if not ok:
                break
        count += ok
    return count


def _first_edge(g: MultiDigraph) -> tuple[int, int] | None:
    for i, row in enumerate(g.adj):
        for j, mult in enumerate(row):
            if mult > 0:
                return (i, j)
    return None


def euler_tour_count(g: MultiDigraph) -> int:
    """epsilon(G): Euler tours starting with a fixed first edge, via the
    tree factorization.  Zero for unbalanced, disconnected, or edgeless input."""
    first = _first_edge(g)
    if first is None or not is_balanced(g) or len(weak_components(g)) != 1:
        return 0
    tau = arborescence_count(g, first[1])
    return tau * math.prod(math.factorial(d - 1) for d in g.out_degrees())


def euler_tour_bruteforce(g: MultiDigraph) -> int:
    """Backtracking count of closed trails covering every labeled edge once,
    starting with the lexicographically first edge."""
    edges = g.edges()
    if len(edges) > 12:
        raise ValueError("brute-force Euler tour count is capped at 12 edges")
    if not edges:
        return 0
    if not is_balanced(g):
        return 0
    by_tail: dict[int, list[int]] = {}
    for idx, (u, _, _) in enumerate(edges):
        by_tail.setdefault(u, []).append(idx)
    used = [False] * len(edges)
    start_tail, start_head, _ = edges[0]
    used[0] = True

    def walk(at: int, left: int) -> int:
        if left == 0:
            return 1 if at == start_tail else 0
        total = 0
        for idx in by_tail.get(at, ()):
            if not used[idx]:
                used[idx] = True
                total += walk(edges[idx][1], left - 1)
                used[idx] = False
        return total

    return walk(start_head, len(edges) - 1)


# ---------------------------------------------------------------------------
# cycle decompositions
# ---------------------------------------------------------------------------


def cycle_decomposition_poly(g: MultiDigraph) -> IntPolynomial:
    """sum over cycle decompositions H of N^p(H), as a polynomial in N.

    Decompositions are enumerated as transition systems: one bijection from
    in-edges to out-edges per vertex; the trails are the cycles of the induced
    successor permutation on edges.  Unbalanced graphs have no decomposition
    and give the zero polynomial; an edgeless balanced graph gives 1 (the
    empty decomposition).
    """
    if not is_balanced(g):
        return ZERO_POLY
    edges = g.edges()
    if not edges:
        return IntPolynomial.of([1])
    ins: dict[int, list[int]] = {}
    outs: dict[int, list[int]] = {}
    for idx, (u, v, _) in enumerate(edges):
        outs.setdefault(u, []).append(idx)
        ins.setdefault(v, []).append(idx)
    verts = sorted(ins)
    counts: dict[int, int] = {}
    for choice in product(*(permutations(outs[v]) for v in verts)):
        succ = [0] * len(edges)
        for v, image in zip(verts, choice):
            for e, s in zip(ins[v], image):
                succ[e] = s
        cycles = 0
        visited = [False] * len(edges)
        for e in range(len(edges)):
            if not visited[e]:
                cycles += 1
                while not visited[e]:
                    visited[e] = True
                    e = succ[e]
        counts[cycles] = counts.get(cycles, 0) + 1
    top = max(counts)
    return IntPolynomial.of([counts.get(p, 0) for p in range(top + 1)])


# ---------------------------------------------------------------------------
# Bernoulli numbers and the Bernoulli identity
# ---------------------------------------------------------------------------


@cache
def bernoulli(k: int) -> Fraction:
    """B_k via the recurrence sum(binomial(k+1, j) * B_j, j=0..k) = 0."""
    if k < 0:
        raise ValueError("Bernoulli numbers need k >= 0")
    if k == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(k):
        acc += math.comb(k + 1, j) * bernoulli(j)
    return -acc / (k + 1)


def bernoulli_identity_lhs(k: int) -> Fraction:
    """sum of z(G) * epsilon(G) * prod((deg+(v) - 1)!) over stable weight-k
    graphs; the identity says this equals (-1)^(k+1) B_k / k."""
    if not 1 <= k <= 5:
        raise ValueError("identity is checked for weights 1..5")
    total = Fraction(0)
    for g in enumerate_weight(k):
        eps = euler_tour_count(g)
        if eps == 0:
            continue
        total += z(g) * eps * math.prod(math.factorial(d - 1) for d in g.out_degrees())
    return total


# ---------------------------------------------------------------------------
# unit-ball polynomial identity
# ---------------------------------------------------------------------------


def _interpolate(points: list[tuple[int, Fraction]]) -> IntPolynomial:
    """Lagrange interpolation through exact points."""
    result = ZERO_POLY
    xs = [x for x, _ in points]
    for t, (xt, yt) in enumerate(points):
        basis = IntPolynomial.of([1])
        denom = Fraction(1)
        for s, xs_ in enumerate(xs):
            if s == t:
                continue
            basis = basis * IntPolynomial.of([-xs_, 1])
            denom *= xt - xs_
        result = result + basis.scale(yt / denom)
    return result


def unit_ball_rhs(k: int) -> IntPolynomial:
    """P_k, the degree-2k polynomial with P_k(N) =
    sum over 1 <= i_1 < ... < i_k <= N of (-i_1)...(-i_k), by interpolation
    at N = 0..2k."""
    points = []
    for bound in range(2 * k + 1):
        # elementary symmetric polynomial e_k(1..bound)
        e = [Fraction(1)] + [Fraction(0)] * k
        for i in range(1, bound + 1):
            for t in range(k, 0, -1):
                e[t] += i * e[t - 1]
        points.append((bound, (-1) ** k * e[k]))
    return _interpolate(points)


def unit_ball_lhs(k: int) -> IntPolynomial:
    """Catalog side: sum over stable weight-k graphs of
    (-1)^(number of components) det(A - I)/|Aut(G)| * prod((deg+ - 1)!)
    times the cycle-decomposition polynomial."""
    if not 1 <= k <= 4:
        raise ValueError("unit-ball identity is checked for weights 1..4")
    total = ZERO_POLY
    for g in enumerate_weight(k):
        poly = cycle_decomposition_poly(g)
        if not poly.coeffs:
            continue
        comps = len(weak_components(g))
        scalar = Fraction((-1) ** comps * det_a_minus_i(g), aut_order(g))
        scalar *= math.prod(math.factorial(d - 1) for d in g.out_degrees())
        total = total + poly.scale(scalar)
    return total


@dataclass(frozen=True)
class UnitBallIdentity:
    lhs: IntPolynomial
    rhs: IntPolynomial

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def unit_ball_identity(k: int) -> UnitBallIdentity:
    return UnitBallIdentity(unit_ball_lhs(k), unit_ball_rhs(k))
