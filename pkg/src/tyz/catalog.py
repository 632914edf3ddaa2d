"""Persistent catalogs, formal sums, golden values, and verification suites.

A catalog is a JSON-lines file, one record per stable graph, sorted by
canonical key.  Every stored field is recomputable from the adjacency matrix
alone, and reading a catalog recomputes and compares all of them, so a
corrupt or tampered file fails loudly with the line number and field name.

The golden z-values for weights 1..4 live in data/golden_z.json.  They are
pinned independently of the closed formula, which is exactly what makes the
verify suites a double-entry check: the formula and the pinned table must
agree entry by entry.
"""

from __future__ import annotations

import json
import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from importlib import resources
from pathlib import Path

from .enumeration import GraphClassCounts, enumerate_stable, enumerate_weight
from .eulerian import (
    IntPolynomial,
    arborescence_count,
    arborescences_bruteforce,
    bernoulli,
    bernoulli_identity_lhs,
    euler_tour_bruteforce,
    euler_tour_count,
    is_balanced,
    unit_ball_identity,
)
from .graphs import (
    MultiDigraph,
    canonical_form,
    canonical_key,
    aut_order,
    format_graph,
    is_strongly_connected,
    weak_components,
)
from .spectral import charpoly, coefficient_from_linear, z_orbit
from .zeta import (
    FamilySpec,
    build_family,
    det_a_minus_i,
    sym_factor,
    z,
    z_family,
    z_strong,
)

__all__ = [
    "format_rational",
    "parse_rational",
    "connectivity_class",
    "CatalogRecord",
    "build_record",
    "write_catalog",
    "read_catalog",
    "catalog_cache_dir",
    "stable_records",
    "weight_records",
    "class_counts",
    "FormalSum",
    "expansion",
    "GoldenFixture",
    "golden_fixture",
    "TABLE2",
    "VerifyCase",
    "VerifyReport",
    "SUITE_NAMES",
    "verify",
]


# ---------------------------------------------------------------------------
# exact serialization
# ---------------------------------------------------------------------------

_RATIONAL_RE = re.compile(r"^(-?\d+)/(\d+)$")


def format_rational(q: Fraction) -> str:
    """Always "p/q" in lowest terms with q > 0, e.g. "-1/3" or "0/1"."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text.strip())
    if not m or int(m.group(2)) == 0:
        raise ValueError(f"not a rational in p/q form: {text!r}")
    return Fraction(int(m.group(1)), int(m.group(2)))


def format_poly(poly: IntPolynomial) -> str:
    """Coefficient list, lowest degree first, each entry in p/q form."""
    return "[" + ", ".join(format_rational(c) for c in poly.coeffs) + "]"


CLASS_DISCONNECTED = "disconnected"
CLASS_CONNECTED = "connected"
CLASS_STRONG = "strongly_connected"


def connectivity_class(g: MultiDigraph) -> str:
    if len(weak_components(g)) != 1:
        return CLASS_DISCONNECTED
    return CLASS_STRONG if is_strongly_connected(g) else CLASS_CONNECTED


# ---------------------------------------------------------------------------
# catalog records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogRecord:
    graph: MultiDigraph  # canonical form
    weight: int
    edges: int
    cls: str
    det_a_minus_i: int
    aut: int
    z: Fraction
    euler_tours: int
    charpoly: tuple[int, ...]


def build_record(g: MultiDigraph) -> CatalogRecord:
    g = canonical_form(g)
    return CatalogRecord(
        graph=g,
        weight=g.weight,
        edges=g.edge_count,
        cls=connectivity_class(g),
        det_a_minus_i=det_a_minus_i(g),
        aut=aut_order(g),
        z=z(g),
        euler_tours=euler_tour_count(g),
        charpoly=charpoly(g),
    )


_JSON_FIELDS = (
    "vertices",
    "adjacency",
    "weight",
    "edges",
    "class",
    "det_A_minus_I",
    "aut_order",
    "z",
    "euler_tours",
    "charpoly",
)


def record_to_json(rec: CatalogRecord) -> dict:
    return {
        "vertices": rec.graph.n,
        "adjacency": [list(row) for row in rec.graph.adj],
        "weight": rec.weight,
        "edges": rec.edges,
        "class": rec.cls,
        "det_A_minus_I": rec.det_a_minus_i,
        "aut_order": rec.aut,
        "z": format_rational(rec.z),
        "euler_tours": rec.euler_tours,
        "charpoly": list(rec.charpoly),
    }


def _record_from_json(obj: dict, where: str) -> CatalogRecord:
    missing = [f for f in _JSON_FIELDS if f not in obj]
    if missing:
        raise ValueError(f"{where}: missing field '{missing[0]}'")
    g = MultiDigraph.from_rows(obj["adjacency"])
    fresh = build_record(g)
    if fresh.graph != g:
        raise ValueError(f"{where}: field 'adjacency': matrix is not in canonical form")
    stored = {
        "vertices": obj["vertices"],
        "weight": obj["weight"],
        "edges": obj["edges"],
        "class": obj["class"],
        "det_A_minus_I": obj["det_A_minus_I"],
        "aut_order": obj["aut_order"],
        "z": obj["z"],
        "euler_tours": obj["euler_tours"],
        "charpoly": tuple(obj["charpoly"]),
    }
    recomputed = {
        "vertices": fresh.graph.n,
        "weight": fresh.weight,
        "edges": fresh.edges,
        "class": fresh.cls,
        "det_A_minus_I": fresh.det_a_minus_i,
        "aut_order": fresh.aut,
        "z": format_rational(fresh.z),
        "euler_tours": fresh.euler_tours,
        "charpoly": fresh.charpoly,
    }
    for field in recomputed:
        if stored[field] != recomputed[field]:
            raise ValueError(
                f"{where}: field '{field}': stored {stored[field]!r}, "
                f"recomputed {recomputed[field]!r}"
            )
    return fresh


def write_catalog(records, path) -> None:
    records = sorted(records, key=lambda r: canonical_key(r.graph))
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(record_to_json(rec)) + "\n")


def read_catalog(path) -> list[CatalogRecord]:
    """Load and fully re-verify a catalog; raises with line number on any
    corrupt or inconsistent record."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {line_no}: invalid JSON: {exc}") from None
            out.append(_record_from_json(obj, f"line {line_no}"))
    return out


# ---------------------------------------------------------------------------
# enumeration cache
# ---------------------------------------------------------------------------

_memo: dict[tuple[int, int], tuple[CatalogRecord, ...]] = {}


def catalog_cache_dir() -> Path | None:
    """TYZ_CACHE_DIR (default ./.tyz-cache); set it to "" to disable caching."""
    raw = os.environ.get("TYZ_CACHE_DIR")
    if raw is None:
        return Path(".tyz-cache")
    return Path(raw) if raw else None


def stable_records(j: int, s: int) -> tuple[CatalogRecord, ...]:
    """Catalog records for the j-vertex, s-edge stable graphs, cached in
    memory and, when a cache directory is configured, on disk."""
    if (j, s) in _memo:
        return _memo[(j, s)]
    cache_root = catalog_cache_dir()
    path = None if cache_root is None else cache_root / f"stable-{j}-{s}.jsonl"
    if path is not None and path.exists():
        try:
            records = tuple(read_catalog(path))
        except (ValueError, OSError):
            records = None  # stale or corrupt cache entry: rebuild below
        if records is not None:
            _memo[(j, s)] = records
            return records
    records = tuple(build_record(g) for g in enumerate_stable(j, s))
    if path is not None:
        try:
            write_catalog(records, path)
        except OSError:
            pass  # caching is best effort, results are already in hand
    _memo[(j, s)] = records
    return records


def weight_records(k: int) -> tuple[CatalogRecord, ...]:
    recs = [r for j in range(1, k + 1) for r in stable_records(j, j + k)]
    recs.sort(key=lambda r: canonical_key(r.graph))
    return tuple(recs)


def class_counts(k: int) -> GraphClassCounts:
    """Same counts as classify(k) but served from the record cache."""
    recs = weight_records(k)
    return GraphClassCounts(
        total=len(recs),
        connected=sum(r.cls != CLASS_DISCONNECTED for r in recs),
        strongly_connected=sum(r.cls == CLASS_STRONG for r in recs),
        lam=sum(r.cls == CLASS_STRONG and r.det_a_minus_i != 0 for r in recs),
    )


# ---------------------------------------------------------------------------
# formal sums
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FormalSum:
    """The weight-k expansion coefficient as a formal rational combination of
    stable graphs; zero coefficients are retained."""

    weight: int
    terms: tuple[tuple[MultiDigraph, Fraction], ...]

    def coefficient(self, g: MultiDigraph) -> Fraction:
        key = canonical_key(g)
        for graph, value in self.terms:
            if canonical_key(graph) == key:
                return value
        return Fraction(0)


def expansion(k: int) -> FormalSum:
    if not 1 <= k <= 5:
        raise ValueError("expansion is available for weights 1..5")
    return FormalSum(k, tuple((r.graph, r.z) for r in weight_records(k)))


# ---------------------------------------------------------------------------
# golden values
# ---------------------------------------------------------------------------

TABLE2 = {
    1: (1, 1, 1, 1),
    2: (4, 3, 3, 3),
    3: (15, 11, 10, 9),
    4: (82, 61, 51, 45),
    5: (589, 474, 373, 316),
}


@dataclass(frozen=True)
class GoldenFixture:
    weight: int
    entries: tuple[tuple[MultiDigraph, Fraction], ...]


@cache
def golden_fixture(weight: int) -> GoldenFixture:
    """Pinned (graph, z) pairs: complete for weights 1..3, the strongly
    connected graphs for weight 4."""
    data = json.loads(resources.files("tyz").joinpath("data/golden_z.json").read_text())
    if str(weight) not in data:
        raise ValueError(f"no golden fixture for weight {weight}")
    entries = tuple(
        (MultiDigraph.from_rows(entry["adjacency"]), parse_rational(entry["z"]))
        for entry in data[str(weight)]
    )
    return GoldenFixture(weight, entries)


def _fixture_by_key(weight: int) -> dict[tuple[int, ...], Fraction]:
    return {canonical_key(g): value for g, value in golden_fixture(weight).entries}


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerifyCase:
    name: str
    expected: str
    actual: str
    ok: bool


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    cases: tuple[VerifyCase, ...]

    @property
    def passed(self) -> int:
        return sum(c.ok for c in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _case(name, expected, actual) -> VerifyCase:
    return VerifyCase(name, str(expected), str(actual), expected == actual)


def _rat_case(name, expected: Fraction, actual: Fraction) -> VerifyCase:
    return VerifyCase(
        name, format_rational(expected), format_rational(actual), expected == actual
    )


def _suite_table2(max_weight: int = 4, allow_slow: bool = False) -> list[VerifyCase]:
    if not 1 <= max_weight <= 5:
        raise ValueError("table2 covers weights 1..5")
    if max_weight >= 5 and not allow_slow:
        raise ValueError("weight 5 takes minutes; pass --allow-slow to include it")
    return [
        _case(f"counts weight {k}", TABLE2[k], class_counts(k).as_tuple())
        for k in range(1, max_weight + 1)
    ]


def _suite_weight(k: int) -> list[VerifyCase]:
    fixture = _fixture_by_key(k)
    cases = []
    records = weight_records(k)
    if k in (2, 3):
        cases.append(_case(f"graph count weight {k}", len(fixture), len(records)))
        for rec in records:
            key = canonical_key(rec.graph)
            name = f"z({format_graph(rec.graph)})"
            if key not in fixture:
                cases.append(VerifyCase(name, "pinned value", "missing from fixture", False))
            else:
                cases.append(_rat_case(name, fixture[key], rec.z))
        return cases
    # weight 4: the fixture pins the strongly connected graphs; connected but
    # not strongly connected graphs must vanish; disconnected ones must equal
    # the product of the pinned component values over the component symmetry.
    strong_in_catalog = {
        canonical_key(r.graph) for r in records if r.cls == CLASS_STRONG
    }
    cases.append(_case("strongly connected count", len(fixture), len(strong_in_catalog)))
    cases.append(_case("fixture keys match catalog", sorted(fixture), sorted(strong_in_catalog)))
    component_fixtures = {w: _fixture_by_key(w) for w in (1, 2, 3)}
    for rec in records:
        name = f"z({format_graph(rec.graph)})"
        if rec.cls == CLASS_STRONG:
            expected = fixture.get(canonical_key(rec.graph))
            if expected is None:
                continue  # already reported by the key-set case
            cases.append(_rat_case(name, expected, rec.z))
        elif rec.cls == CLASS_CONNECTED:
            cases.append(_rat_case(name + " vanishes", Fraction(0), rec.z))
        else:
            comps = weak_components(rec.graph)
            expected = Fraction(1)
            for c in comps:
                expected *= component_fixtures[c.weight][canonical_key(c)]
            expected /= sym_factor(comps)
            cases.append(_rat_case(name + " from components", expected, rec.z))
    return cases


def _suite_bernoulli(max_weight: int = 4, allow_slow: bool = False) -> list[VerifyCase]:
    if not 1 <= max_weight <= 5:
        raise ValueError("bernoulli suite covers weights 1..5")
    if max_weight >= 5 and not allow_slow:
        raise ValueError("weight 5 takes minutes; pass --allow-slow to include it")
    cases = []
    for k in range(1, max_weight + 1):
        target = (-1) ** (k + 1) * bernoulli(k) / k
        cases.append(_rat_case(f"tour sum weight {k}", target, bernoulli_identity_lhs(k)))
    return cases


_P1_PRINTED = IntPolynomial.of([0, Fraction(-1, 2), Fraction(-1, 2)])
_P2_PRINTED = IntPolynomial.of(
    [0, Fraction(-1, 12), Fraction(-1, 8), Fraction(1, 12), Fraction(1, 8)]
)


def _suite_unitball() -> list[VerifyCase]:
    cases = []
    printed = {1: _P1_PRINTED, 2: _P2_PRINTED}
    for k in range(1, 5):
        check = unit_ball_identity(k)
        cases.append(
            VerifyCase(
                f"P_{k} catalog sum", format_poly(check.rhs), format_poly(check.lhs), check.equal
            )
        )
        leading = Fraction((-1) ** k, 2**k * math.factorial(k))
        cases.append(
            _rat_case(f"P_{k} leading coefficient", leading, check.lhs.leading())
        )
        if k in printed:
            cases.append(
                VerifyCase(
                    f"P_{k} printed form",
                    format_poly(printed[k]),
                    format_poly(check.lhs),
                    printed[k] == check.lhs,
                )
            )
    return cases


def _suite_oracle() -> list[VerifyCase]:
    cases = []
    for k in range(1, 5):
        for g in enumerate_weight(k):
            name = format_graph(g)
            poly = charpoly(g)
            rebuilt = (1,) + tuple(coefficient_from_linear(g, i) for i in range(1, g.n + 1))
            cases.append(_case(f"charpoly({name})", poly, rebuilt))
            if connectivity_class(g) == CLASS_STRONG:
                cases.append(_rat_case(f"orbit sum z({name})", z_strong(g), z_orbit(g)))
    return cases


def _suite_best() -> list[VerifyCase]:
    cases = []
    for k in range(1, 4):
        for g in enumerate_weight(k):
            if not is_balanced(g) or connectivity_class(g) == CLASS_DISCONNECTED:
                continue
            name = format_graph(g)
            cases.append(
                _case(f"epsilon({name})", euler_tour_bruteforce(g), euler_tour_count(g))
            )
            by_matrix = [arborescence_count(g, r) for r in range(g.n)]
            by_force = [arborescences_bruteforce(g, r) for r in range(g.n)]
            cases.append(_case(f"in-trees({name})", by_force, by_matrix))
            cases.append(
                _case(f"in-trees({name}) root-independent", [by_matrix[0]] * g.n, by_matrix)
            )
    return cases


def _family_instances() -> list[FamilySpec]:
    specs = []
    for name in ("A", "B", "C"):
        specs += [FamilySpec(name, n=n) for n in range(3, 9)]
    for name in ("K", "D"):
        specs += [FamilySpec(name, n=n) for n in range(2, 5)]
    specs += [FamilySpec("Kmn", n=n, m=m) for m in (2, 3) for n in (2, 3)]
    specs += [FamilySpec("loops", n=n) for n in range(2, 7)]
    for k in range(1, 5):
        for g in enumerate_weight(k):
            if g.n == 2 and g.adj[0][1] * g.adj[1][0] != 0:
                specs.append(
                    FamilySpec(
                        "twovertex",
                        m=g.adj[0][0],
                        i=g.adj[0][1],
                        j=g.adj[1][0],
                        n=g.adj[1][1],
                    )
                )
    return specs


def _spec_label(spec: FamilySpec) -> str:
    if spec.family == "twovertex":
        return f"twovertex[{spec.m} {spec.i};{spec.j} {spec.n}]"
    if spec.family == "Kmn":
        return f"K({spec.m},{spec.n})"
    return f"{spec.family}({spec.n})"


def _suite_families() -> list[VerifyCase]:
    cases = []
    for spec in _family_instances():
        built = build_family(spec)
        cases.append(_rat_case(_spec_label(spec), z_family(spec), z(built)))
    return cases


SUITE_NAMES = (
    "table2",
    "weight2",
    "weight3",
    "weight4",
    "bernoulli",
    "unitball",
    "oracle",
    "best",
    "families",
    "all",
)


def verify(suite: str, max_weight: int | None = None, allow_slow: bool = False) -> VerifyReport:
    """Run one named suite (or "all") and report expected vs actual per case."""

    def run(name: str) -> list[VerifyCase]:
        if name == "table2":
            return _suite_table2(4 if max_weight is None else max_weight, allow_slow)
        if name == "weight2":
            return _suite_weight(2)
        if name == "weight3":
            return _suite_weight(3)
        if name == "weight4":
            return _suite_weight(4)
        if name == "bernoulli":
            return _suite_bernoulli(4 if max_weight is None else max_weight, allow_slow)
        if name == "unitball":
            return _suite_unitball()
        if name == "oracle":
            return _suite_oracle()
        if name == "best":
            return _suite_best()
        if name == "families":
            return _suite_families()
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}")

    if suite == "all":
        cases = []
        for name in SUITE_NAMES[:-1]:
            cases += run(name)
        return VerifyReport("all", tuple(cases))
    return VerifyReport(suite, tuple(run(suite)))
