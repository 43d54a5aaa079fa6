"""
Braid monodromy tables, degeneration diagrams and the regeneration rules.

A :class:`Configuration` is a braid monodromy table: singularities listed in
the order they occur along the axis, each with its type and a half-twist
expression. Its :class:`Factorization` multiplies the factors left to right in
that order; this reproduces the triangle arrangement and the four-line table
exactly. Points at infinity are kept in the table but left out of the local
product.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from typing import Iterable, Sequence

from . import halftwist as ht
from .braid import BraidError, BraidWord, free_reduce, product
from .halftwist import DoubledIndex, Expr


class UnsupportedFeature(BraidError):
    """Raised for configurations outside the supported range (k-points with k >= 4)."""


class SingularityType(enum.Enum):
    BRANCH = "branch"
    NODE = "node"
    NODE_AT_INFINITY = "node_at_infinity"
    CUSP = "cusp"
    TANGENCY = "tangency"
    MULTI_POINT = "multipoint"

    @property
    def epsilon(self) -> int:
        return _EPSILON[self]


_EPSILON = {
    SingularityType.BRANCH: 1,
    SingularityType.NODE: 2,
    SingularityType.NODE_AT_INFINITY: 2,
    SingularityType.CUSP: 3,
    SingularityType.TANGENCY: 4,
    SingularityType.MULTI_POINT: 2,
}


@dataclasses.dataclass(frozen=True)
class Singularity:
    """One row of a monodromy table.

    `count` > 1 bundles several singular points contributing one factor (the
    three cusps of a regenerated tangency, the four nodes of a regenerated
    node). `multiplicity` is the number of branches through a multi-point.
    """

    type: SingularityType
    incident: tuple[str, ...]
    expr: Expr
    count: int = 1
    multiplicity: int = 2
    label: str = ""

    @property
    def degree(self) -> int:
        """Exponent sum this row contributes: ε per point, ε·C(k,2) for a k-point."""
        pairs = math.comb(self.multiplicity, 2) if self.type is SingularityType.MULTI_POINT else 1
        return self.type.epsilon * pairs * self.count


@dataclasses.dataclass(frozen=True)
class Factorization:
    strands: int
    factors: tuple[tuple[str, BraidWord], ...]

    def __post_init__(self):
        for label, w in self.factors:
            if w.strands != self.strands:
                raise BraidError(f"factor {label!r} has {w.strands} strands, expected {self.strands}")

    def words(self) -> list[BraidWord]:
        return [w for _, w in self.factors]

    def __len__(self):
        return len(self.factors)


def table_product(f: Factorization) -> BraidWord:
    """Product of the factors in listed order, free-reduced."""
    return free_reduce(product(f.words(), f.strands))


@dataclasses.dataclass(frozen=True)
class Component:
    kind: str
    label: str


@dataclasses.dataclass(frozen=True)
class Configuration:
    name: str
    strands: int
    components: tuple[Component, ...]
    singularities: tuple[Singularity, ...]

    def __post_init__(self):
        labels = {c.label for c in self.components}
        for s in self.singularities:
            missing = [x for x in s.incident if x not in labels]
            if missing:
                raise BraidError(f"{self.name}: singularity {s.label or s.type.value} names unknown components {missing}")

    @property
    def component_count(self) -> int:
        return len(self.components)

    def local_singularities(self) -> list[Singularity]:
        return [s for s in self.singularities if s.type is not SingularityType.NODE_AT_INFINITY]

    def factorization(self, include_infinity: bool = False) -> Factorization:
        rows = self.singularities if include_infinity else self.local_singularities()
        factors = []
        for k, s in enumerate(rows, 1):
            factors.append((s.label or f"{k}:{s.type.value}", ht.compile(s.expr, self.strands)))
        return Factorization(self.strands, tuple(factors))

    def product(self) -> BraidWord:
        return table_product(self.factorization())

    def expected_degree(self) -> int:
        return sum(s.degree for s in self.local_singularities())

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "strands": self.strands,
            "components": [{"kind": c.kind, "label": c.label} for c in self.components],
            "singularities": [
                {
                    "type": s.type.value,
                    "incident": list(s.incident),
                    "expr": str(s.expr),
                    "count": s.count,
                    "multiplicity": s.multiplicity,
                    "label": s.label,
                }
                for s in self.singularities
            ],
        }


# --------------------------------------------------------------------------
# JSON configuration files

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["strands", "components", "singularities"],
    "properties": {
        "name": {"type": "string"},
        "strands": {"type": "integer", "minimum": 1},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "label"],
                "properties": {"kind": {"enum": ["line", "conic"]}, "label": {"type": "string"}},
            },
        },
        "singularities": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["type", "incident", "expr"],
                "properties": {
                    "type": {"enum": [t.value for t in SingularityType]},
                    "incident": {"type": "array", "items": {"type": "string"}},
                    "expr": {"type": "string"},
                    "count": {"type": "integer", "minimum": 1},
                    "multiplicity": {"type": "integer", "minimum": 2},
                    "label": {"type": "string"},
                },
            },
        },
    },
}


class ConfigError(BraidError):
    """Configuration file does not match the schema; `path` locates the field."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def configuration_from_json(data: dict) -> Configuration:
    import jsonschema

    validator = jsonschema.Draft7Validator(CONFIG_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        path = "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)
        raise ConfigError(err.message, path)
    sings = []
    for k, row in enumerate(data["singularities"]):
        stype = SingularityType(row["type"])
        mult = row.get("multiplicity", 2)
        if stype is SingularityType.MULTI_POINT and mult > 3:
            raise UnsupportedFeature(f"{mult}-points are not supported (singularity {k})")
        try:
            expr = ht.parse(row["expr"])
        except ht.ParseError as exc:
            raise ConfigError(str(exc), f"$.singularities[{k}].expr") from exc
        sings.append(Singularity(stype, tuple(row["incident"]), expr, row.get("count", 1), mult, row.get("label", "")))
    comps = tuple(Component(c["kind"], c["label"]) for c in data["components"])
    return Configuration(data.get("name", "config"), data["strands"], comps, tuple(sings))


# --------------------------------------------------------------------------
# line arrangements


def generic_line_factorization(m: int) -> Factorization:
    """Node factors Z²_{k l} of a generic arrangement of m lines.

    Ordered by l = 2..m and, for each l, k = l-1 down to 1. With paths passing
    below intermediate strands this is the order whose product is Δ² on the
    nose; increasing k only gives a factorization equivalent to it.
    """
    if m < 2:
        raise ValueError(f"need at least two lines, got {m}")
    factors = []
    for l in range(2, m + 1):
        for k in range(l - 1, 0, -1):
            factors.append((f"Z^2[{k},{l}]", ht.compile_z(k, l, power=2, n=m)))
    return Factorization(m, tuple(factors))


def full_twist(m: int) -> BraidWord:
    """Δ² = (σ1 ⋯ σ_{m-1})^m."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return BraidWord(m, tuple((i, 1) for i in range(1, m)) * m)


# --------------------------------------------------------------------------
# degeneration diagrams

EDGE_KINDS = ("horiz", "vert", "diag")


@dataclasses.dataclass(frozen=True)
class DegenerationDiagram:
    """Vertices on the integer lattice and the lines of the degenerated branch curve.

    Only lines between two planes belong in `edges`; the outer boundary of a
    planar picture is left out. For identified boundaries (the pillow) the
    shared boundary edges are lines and are listed.
    """

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int, str], ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple((int(a), int(b), str(k)) for a, b, k in self.edges))
        for a, b, kind in self.edges:
            if not (0 <= a < len(self.vertices) and 0 <= b < len(self.vertices)) or a == b:
                raise BraidError(f"edge ({a}, {b}) does not join two listed vertices")
            if kind not in EDGE_KINDS:
                raise BraidError(f"edge kind must be one of {EDGE_KINDS}, got {kind!r}")
        if self.names and len(self.names) != len(self.vertices):
            raise BraidError("one name per vertex required")

    def name(self, v: int) -> str:
        return self.names[v] if self.names else f"v{v}"

    @classmethod
    def from_json(cls, data: dict) -> "DegenerationDiagram":
        kinds = {"diag": "diag", "horiz": "horiz", "vert": "vert"}
        edges = []
        for a, b, kind in data["edges"]:
            if kind not in kinds:
                raise ConfigError(f"unknown edge kind {kind!r}", "$.edges")
            edges.append((a, b, kind))
        return cls(tuple(map(tuple, data["vertices"])), tuple(edges), tuple(data.get("names", ())))

    def to_json(self) -> dict:
        out = {"vertices": [list(v) for v in self.vertices], "edges": [list(e) for e in self.edges]}
        if self.names:
            out["names"] = list(self.names)
        return out


def lex_order_vertices(d: DegenerationDiagram) -> list[int]:
    """Vertex indices sorted by (y, x): left to right, then upwards."""
    if len(set(d.vertices)) != len(d.vertices):
        raise BraidError("duplicate vertices")
    return sorted(range(len(d.vertices)), key=lambda k: (d.vertices[k][1], d.vertices[k][0]))


def lex_order_lines(d: DegenerationDiagram, vertex_order: Sequence[int] | None = None) -> list[int]:
    """Edge indices sorted by larger endpoint, then smaller endpoint, under the vertex order."""
    order = list(vertex_order) if vertex_order is not None else lex_order_vertices(d)
    rank = {v: r for r, v in enumerate(order)}

    def key(e: int):
        a, b, _ = d.edges[e]
        lo, hi = sorted((rank[a], rank[b]))
        return hi, lo

    return sorted(range(len(d.edges)), key=key)


@dataclasses.dataclass(frozen=True)
class KPoint:
    vertex: int
    k: int
    kind: str | None  # "I" / "II" for 3-points


def classify_k_points(d: DegenerationDiagram, vertices: Iterable[int] | None = None) -> list[KPoint]:
    """Number of lines through each vertex and the type of each 3-point.

    A 3-point with one diagonal (two double lines and a conic after
    regeneration) is type I; with two diagonals it is type II. Vertices on no
    line are skipped. `vertices` restricts the classification, which lets a
    caller inspect the 3-points of a diagram that also has higher k-points.
    """
    degree = [0] * len(d.vertices)
    diagonals = [0] * len(d.vertices)
    for a, b, kind in d.edges:
        for v in (a, b):
            degree[v] += 1
            diagonals[v] += kind == "diag"
    chosen = range(len(d.vertices)) if vertices is None else list(vertices)
    out = []
    for v in chosen:
        k = degree[v]
        if k == 0:
            continue
        if k >= 4:
            raise UnsupportedFeature(f"{d.name(v)} is a {k}-point; only k <= 3 is supported")
        kind = None
        if k == 3:
            if diagonals[v] == 1:
                kind = "I"
            elif diagonals[v] == 2:
                kind = "II"
            else:
                raise BraidError(f"{d.name(v)}: a 3-point needs one or two diagonals, found {diagonals[v]}")
        out.append(KPoint(v, k, kind))
    return out


# --------------------------------------------------------------------------
# regeneration rules


def _doubled_range(i: int, j: int, n: int) -> None:
    if not (1 <= i < j):
        raise BraidError(f"need 1 <= i < j, got ({i}, {j})")
    if 2 * j > n:
        raise BraidError(f"components {i}, {j} need {2 * j} strands once doubled, have {n}")


def regenerate_node(i: int, j: int, mode: str, n: int) -> Expr:
    """Z²_{ij} regenerated: 'first' → Z²_{ii',j}, 'second' → Z²_{i,jj'}, 'both' → Z²_{ii',jj'}."""
    _doubled_range(i, j, n)
    I, I_, J, J_ = DoubledIndex(i), DoubledIndex(i, True), DoubledIndex(j), DoubledIndex(j, True)
    if mode == "first":
        return ht.Z(((I, I_), (J,)), False, 2)
    if mode == "second":
        return ht.Z(((I,), (J, J_)), False, 2)
    if mode == "both":
        return ht.Z(((I, I_), (J, J_)), False, 2)
    raise ValueError(f"mode must be 'first', 'second' or 'both', got {mode!r}")


def expand_node_regeneration(i: int, j: int, mode: str, n: int) -> list[Expr]:
    """The same regenerated node written as a product of plain Z² factors."""
    _doubled_range(i, j, n)
    I, I_, J, J_ = DoubledIndex(i), DoubledIndex(i, True), DoubledIndex(j), DoubledIndex(j, True)
    if mode == "first":
        return [ht.z(I_, J, 2), ht.z(I, J, 2)]
    if mode == "second":
        return [ht.z(I, J_, 2), ht.z(I, J, 2)]
    if mode == "both":
        return [ht.z(I_, J_, 2), ht.z(I_, J, 2), ht.z(I, J_, 2), ht.z(I, J, 2)]
    raise ValueError(f"mode must be 'first', 'second' or 'both', got {mode!r}")


def regenerate_tangency(i: int, j: int, side: str, n: int) -> list[Expr]:
    """Three cusp factors replacing a tangency Z⁴ between components i < j.

    side='left' doubles the later component: (Z³_{i'j})^{Z_{jj'}}, Z³_{i'j},
    (Z³_{i'j})^{Z_{jj'}⁻¹}. side='right' doubles the earlier one:
    (Z³_{ij})^{Z_{ii'}}, Z³_{ij}, (Z³_{ij})^{Z_{ii'}⁻¹}.
    """
    _doubled_range(i, j, n)
    I, I_, J, J_ = DoubledIndex(i), DoubledIndex(i, True), DoubledIndex(j), DoubledIndex(j, True)
    if side == "left":
        cusp, twist = ht.z(I_, J, 3), ht.z(J, J_)
    elif side == "right":
        cusp, twist = ht.z(I, J, 3), ht.z(I, I_)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return [ht.Conjugate(cusp, twist), cusp, ht.Conjugate(cusp, ht.Inverse(twist))]


def regenerated_branch(i: int, j: int, side: str, n: int) -> Expr:
    """Branch point of the conic next to a regenerated tangency.

    left: (Z_{ii'})^{Z²_{i',jj'}}; right: (Z_{jj'})^{Z²_{j,ii'}}.
    """
    _doubled_range(i, j, n)
    I, I_, J, J_ = DoubledIndex(i), DoubledIndex(i, True), DoubledIndex(j), DoubledIndex(j, True)
    if side == "left":
        return ht.Conjugate(ht.z(I, I_), ht.Z(((I_,), (J, J_)), False, 2))
    if side == "right":
        return ht.Conjugate(ht.z(J, J_), ht.Z(((J,), (I, I_)), False, 2))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


# --------------------------------------------------------------------------
# built-in configurations

_T = SingularityType


def _row(kind: SingularityType, incident: str, text: str, count: int = 1, multiplicity: int = 2, label: str = "") -> Singularity:
    return Singularity(kind, tuple(incident.split()), ht.parse(text), count, multiplicity, label)


def _components(spec: str) -> tuple[Component, ...]:
    kinds = {"L": "line", "C": "conic"}
    return tuple(Component(kinds[tok[0]], tok) for tok in spec.split())


def triangle() -> Configuration:
    return Configuration("triangle", 3, _components("L1 L2 L3"), (
        _row(_T.NODE, "L1 L2", "Z[1,2]^2"),
        _row(_T.NODE, "L1 L3", "Zb[1,3]^2"),
        _row(_T.NODE, "L2 L3", "Z[2,3]^2"),
    ))


def table1() -> Configuration:
    """Four lines, a triple point and one pair of parallel lines.

    The parallel pair meets at infinity; that row is kept for reference and is
    dropped from the local product.
    """
    return Configuration("table1", 4, _components("L1 L2 L3 L4"), (
        _row(_T.NODE, "L2 L3", "Z[2,3]^2"),
        _row(_T.NODE, "L2 L4", "Zb[2,4]^2"),
        _row(_T.MULTI_POINT, "L1 L3 L4", "Z[1,3,4]^2", multiplicity=3),
        _row(_T.NODE_AT_INFINITY, "L1 L2", "Z[1,2]^2", label="infinity"),
    ))


def conic_line(case: str) -> Configuration:
    if case == "A":
        rows = (
            _row(_T.TANGENCY, "C1 L2", "Z[2,3]^4"),
            _row(_T.BRANCH, "C1", "Z[1,2] ^ { Z[2,3]^2 }"),
        )
    elif case == "B":
        rows = (
            _row(_T.NODE, "C1 L2", "Z[2,3]^2"),
            _row(_T.NODE, "C1 L2", "Z[1,3]^2"),
            _row(_T.BRANCH, "C1", "Z[1,2]"),
        )
    else:
        raise ValueError(f"case must be 'A' or 'B', got {case!r}")
    return Configuration(f"prop16-{case}", 3, _components("C1 L2"), rows)


def two_conics(case: str) -> Configuration:
    if case == "A":
        rows = (
            _row(_T.TANGENCY, "C1 C2", "Z[2,3]^4"),
            _row(_T.BRANCH, "C2", "Z[3,4] ^ { Z[2,3]^2 }"),
            _row(_T.BRANCH, "C1", "Z[1,2] ^ { Z[2,3]^2 }"),
        )
    elif case == "B":
        rows = (
            _row(_T.NODE, "C1 C2", "Z[2,3]^2"),
            _row(_T.NODE, "C1 C2", "Zb[2,4]^2"),
            _row(_T.NODE, "C1 C2", "Z[1,3]^2"),
            _row(_T.NODE, "C1 C2", "Z[1,4]^2 ^ { Z[3,4]^-2 }"),
            _row(_T.BRANCH, "C2", "Z[3,4]"),
            _row(_T.BRANCH, "C1", "Z[1,2]"),
        )
    else:
        raise ValueError(f"case must be 'A' or 'B', got {case!r}")
    return Configuration(f"prop17-{case}", 4, _components("C1 C2"), rows)


def _cusp_rows(exprs: list[Expr], incident: str) -> tuple[Singularity, ...]:
    return tuple(Singularity(_T.CUSP, tuple(incident.split()), e, label=f"cusp{k}") for k, e in enumerate(exprs, 1))


def two_point_factorization(case: str) -> Factorization:
    """Complete regeneration of a 2-point (conic and line meeting at a tangency).

    Case A has the conic first (components 1, 1') and the line second; case B
    swaps them. The three cusps come before the branch point.
    """
    return two_point_configuration(case).factorization()


def two_point_configuration(case: str) -> Configuration:
    if case == "A":
        comps = _components("C1 L2")
        rows = _cusp_rows(regenerate_tangency(1, 2, "left", 4), "C1 L2")
        rows += (Singularity(_T.BRANCH, ("C1",), regenerated_branch(1, 2, "left", 4), label="branch"),)
    elif case == "B":
        comps = _components("L1 C2")
        rows = _cusp_rows(regenerate_tangency(1, 2, "right", 4), "L1 C2")
        rows += (Singularity(_T.BRANCH, ("C2",), regenerated_branch(1, 2, "right", 4), label="branch"),)
    else:
        raise ValueError(f"case must be 'A' or 'B', got {case!r}")
    return Configuration(f"2pt-{case}", 4, comps, rows)


# Local contributions of the regenerated 3-points, copied letter for letter
# from the published itemized lists with (i, j, k) = (1, 2, 3). Each entry is
# (type, count, incident components, word).
_TYPE1_ITEMS = {
    "A": ("L1 L2 C3", [
        (_T.CUSP, 3, "L2 C3", "s4^3 (s4^-1 s3^3 s4) (s3^2 s4^3 s3^-2)"),
        (_T.NODE, 4, "L1 L2",
         "(s4^-2 s3^-1 s2^2 s3 s4^2) (s3 s4^-2 s3^-1 s2^2 s3 s4^2 s3^-1)"
         " (s4^-2 s3^-1 s2^-1 s1^2 s2 s3 s4^2) (s3 s4^-2 s3^-1 s2^-1 s1^2 s2 s3 s4^2 s3^-1)"),
        (_T.CUSP, 3, "L1 C3",
         "(s4^-1 s3^-1 s2^3 s3 s4) (s4^-1 s3^-1 s2^-1 s1^3 s2 s3 s4) (s1^2 s4^-1 s3^-1 s2^3 s3 s4 s1^-2)"),
        (_T.BRANCH, 1, "C3", "s4^-1 s3^-1 s2^-1 s1^-2 s2^-1 s3^-1 s4^-1 s5 s4 s3 s2 s1^2 s2 s3 s4"),
    ]),
    "B": ("L1 C2 L3", [
        (_T.CUSP, 3, "L1 C2", "s2^3 (s2^-1 s1^3 s2) (s1^2 s2^3 s1^-2)"),
        (_T.CUSP, 3, "C2 L3", "(s5^-1 s4^3 s5) s4^3 (s5 s4^3 s5^-1)"),
        (_T.BRANCH, 1, "C2", "s4^-1 s5^-2 s4^-1 s2^-1 s1^-2 s2^-1 s3 s2 s1^2 s2 s4 s5^2 s4"),
        (_T.NODE, 4, "L1 L3",
         "(s5^-1 s4^-1 s3 s2^2 s3^-1 s4 s5) (s4^-1 s3 s2^2 s3^-1 s4)"
         " (s5^-1 s4^-1 s3 s2^-1 s1^2 s2 s3^-1 s4 s5) (s4^-1 s3 s2^-1 s1^2 s2 s3^-1 s4)"),
    ]),
    "C": ("C1 L2 L3", [
        (_T.CUSP, 3, "C1 L2", "(s3^-1 s2^3 s3) s2^3 (s3 s2^3 s3^-1)"),
        (_T.NODE, 4, "L2 L3",
         "(s5^-1 s3 s2^-2 s3^-1 s4^2 s3 s2^2 s3^-1 s5) (s3 s2^-2 s3^-1 s4^2 s3 s2^2 s3^-1)"
         " (s5^-1 s3^2 s2^-2 s3^-1 s4^2 s3 s2^2 s3^-2 s5) (s3^2 s2^-2 s3^-1 s4^2 s3 s2^2 s3^-2)"),
        (_T.CUSP, 3, "C1 L3",
         "(s5^-1 s4 s3 s2^3 s3^-1 s4^-1 s5) (s4 s3 s2^3 s3^-1 s4^-1) (s5 s4 s3 s2^3 s3^-1 s4^-1 s5^-1)"),
        (_T.BRANCH, 1, "C1", "s2^-1 s3^-1 s4^-1 s5^-2 s4^-1 s3^-1 s2^-1 s1 s2 s3 s4 s5^2 s4 s3 s2"),
    ]),
}

_TYPE2_ITEMS = ("C1 L2 C3", [
    (_T.CUSP, 3, "L2 C3", "s4^3 (s4^-1 s3^3 s4) (s3^2 s4^3 s3^-2)"),
    (_T.BRANCH, 1, "C3", "s4^-1 s3^-2 s4^-1 s5 s4 s3^2 s4"),
    (_T.NODE, 4, "C1 C3",
     "(s5^-1 s4^-1 s3^-1 s2^2 s3 s4 s5) (s5^-1 s4^-1 s3^-1 s2^-1 s1^2 s2 s3 s4 s5)"
     " (s4^-1 s3^-2 s4^-2 s3^-1 s2^2 s3 s4^2 s3^2 s4) (s4^-1 s3^-2 s4^-2 s3^-1 s2^-1 s1^2 s2 s3 s4^2 s3^2 s4)"),
    (_T.CUSP, 3, "C1 L2", "(s3^-1 s2^3 s3) s2^3 (s3 s2^3 s3^-1)"),
    (_T.BRANCH, 1, "C1", "s2^-1 s3^-2 s2^-1 s1 s2 s3^2 s2"),
])

# The simplified positive words quoted for the three 3-point products.
TYPE1_A_WORD = "s4 s3^2 s4 s2 s3 s1 s2 s4 s3^2 s2 s4 s3 s2 s1 s2 s3 s5 s4 s3 s2 s1 s1 s2 s3 s4"
TYPE1_B_WORD = "s4 s3 s2 s1 s5 s4 s3 s2 s1 s2 s3 s4 s5 s1 s2 s3 s4 s3 s2 s1 s3 s2 s3 s2 s1 s3 s2"
TYPE2_WORD = "s1 s2 s5 s4 s3 s5 s2 s3 s1 s2 s2 s3 s4 s5 s5 s4^2 s5 s3 s4^2 s3 s4 s2 s3 s4^2 s3"

# The five type-2 items multiply to a braid that is not itself positive (its
# normal form starts with Δ⁻¹). The quoted word is its conjugate by
# (σ1σ2σ3σ4σ5)⁻¹, so the closures agree; see `type2_conjugator`.
TYPE2_CONJUGATOR = "s5^-1 s4^-1 s3^-1 s2^-1 s1^-1"


def _item_configuration(name: str, items) -> Configuration:
    comps, rows = items
    sings = tuple(
        Singularity(kind, tuple(inc.split()), ht.parse(text), count, label=f"({k})")
        for k, (kind, count, inc, text) in enumerate(rows, 1)
    )
    return Configuration(name, 6, _components(comps), sings)


def three_point_type1_configuration(case: str) -> Configuration:
    if case not in _TYPE1_ITEMS:
        raise ValueError(f"case must be 'A', 'B' or 'C', got {case!r}")
    return _item_configuration(f"3pt-type1-{case}", _TYPE1_ITEMS[case])


def three_point_type1_factorization(case: str) -> Factorization:
    return three_point_type1_configuration(case).factorization()


def three_point_type2_configuration() -> Configuration:
    return _item_configuration("3pt-type2", _TYPE2_ITEMS)


def three_point_type2_factorization() -> Factorization:
    return three_point_type2_configuration().factorization()


BUILTIN = {
    "triangle": triangle,
    "table1": table1,
    "prop16-A": lambda: conic_line("A"),
    "prop16-B": lambda: conic_line("B"),
    "prop17-A": lambda: two_conics("A"),
    "prop17-B": lambda: two_conics("B"),
    "2pt-A": lambda: two_point_configuration("A"),
    "2pt-B": lambda: two_point_configuration("B"),
    "3pt-type1-A": lambda: three_point_type1_configuration("A"),
    "3pt-type1-B": lambda: three_point_type1_configuration("B"),
    "3pt-type1-C": lambda: three_point_type1_configuration("C"),
    "3pt-type2": three_point_type2_configuration,
}


def builtin(name: str) -> Configuration:
    try:
        return BUILTIN[name]()
    except KeyError:
        raise KeyError(f"no built-in configuration {name!r}; known: {', '.join(BUILTIN)}") from None


def type2_conjugator() -> BraidWord:
    return ht.evaluate(TYPE2_CONJUGATOR, 6)


# --------------------------------------------------------------------------
# degeneration diagrams from the examples


def type1_case(d: DegenerationDiagram, vertex: int, vertex_order: Sequence[int] | None = None) -> str:
    """Which regeneration case a type-I 3-point falls into under a vertex order.

    Order the three lines through the vertex; the diagonal becomes the conic.
    Diagonal last is case A, in the middle case B, first case C.
    """
    (kp,) = classify_k_points(d, [vertex])
    if kp.kind != "I":
        raise BraidError(f"{d.name(vertex)} is not a type-I 3-point")
    through = [e for e in lex_order_lines(d, vertex_order) if vertex in d.edges[e][:2]]
    rank = next(r for r, e in enumerate(through) if d.edges[e][2] == "diag")
    return "CBA"[rank]


def _diagram(names: str, coords, edges) -> DegenerationDiagram:
    labels = names.split()
    index = {name: k for k, name in enumerate(labels)}
    return DegenerationDiagram(
        tuple(coords),
        tuple((index[a], index[b], kind) for a, b, kind in (e.split() for e in edges)),
        tuple(labels),
    )


def surface_2pt_diagram() -> DegenerationDiagram:
    """CP¹×CP¹ embedded by (1,2): two squares, two parallel diagonals, two 2-points."""
    return _diagram(
        "v1 v2 v3 v4 v5 v6",
        [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)],
        ["v1 v5 diag", "v2 v5 vert", "v2 v6 diag"],
    )


def pillow_diagram() -> DegenerationDiagram:
    """The (2,2) pillow: two 2×2 pieces glued along their boundary.

    The boundary edges are shared by both pieces and listed once. Coordinates
    for v1..v9 are those of the first piece; v10 sits in the second piece and
    is placed above everything only so that lexicographic order puts it last.
    """
    return _diagram(
        "v1 v2 v3 v4 v5 v6 v7 v8 v9 v10",
        [(0, 2), (1, 2), (2, 2), (0, 1), (2, 1), (0, 0), (1, 0), (2, 0), (1, 1), (1, 3)],
        [
            # boundary
            "v1 v2 horiz", "v2 v3 horiz", "v6 v7 horiz", "v7 v8 horiz",
            "v1 v4 vert", "v4 v6 vert", "v3 v5 vert", "v5 v8 vert",
            # first piece
            "v4 v9 horiz", "v9 v5 horiz", "v2 v9 vert", "v9 v7 vert",
            "v6 v9 diag", "v9 v3 diag", "v4 v2 diag", "v7 v5 diag",
            # second piece
            "v4 v10 horiz", "v10 v5 horiz", "v2 v10 vert", "v10 v7 vert",
            "v1 v10 diag", "v10 v8 diag", "v4 v7 diag", "v2 v5 diag",
        ],
    )


def pillow_orders() -> dict[str, list[int]]:
    """Three vertex orders of the pillow, as indices into `pillow_diagram().vertices`."""
    d = pillow_diagram()
    pos = {name: k for k, name in enumerate(d.names)}

    def seq(text: str) -> list[int]:
        return [pos[x] for x in text.split()]

    return {
        "boundary": seq("v1 v2 v3 v4 v5 v6 v7 v8 v9 v10"),
        "clockwise": seq("v1 v2 v3 v5 v8 v7 v6 v4 v9 v10"),
        "lexicographic": lex_order_vertices(d),
    }


def toric_diagram() -> DegenerationDiagram:
    """Singular toric surface in CP⁶: a square strip with a triangle on top."""
    return _diagram(
        "v1 v2 v3 v4 v5 v6 v7",
        [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (1, 2)],
        ["v2 v4 diag", "v2 v6 diag", "v4 v5 horiz", "v5 v6 horiz", "v2 v5 vert", "v5 v7 vert"],
    )


def cp1xcp1_diagram(n: int) -> DegenerationDiagram:
    """CP¹×CP¹ embedded by (1,n): a 1×n strip, verticals plus a zigzag of diagonals."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    coords = [(x, 0) for x in range(n + 1)] + [(x, 1) for x in range(n + 1)]

    def at(x: int, y: int) -> int:
        return x + (n + 1) * y

    edges = [(at(x, 0), at(x, 1), "vert") for x in range(1, n)]
    edges += [(at(x, 1 - x % 2), at(x + 1, 1 - (x + 1) % 2), "diag") for x in range(n)]
    return DegenerationDiagram(tuple(coords), tuple(edges), tuple(f"v{k}" for k in range(1, 2 * n + 3)))


def three_point_shapes() -> dict[str, DegenerationDiagram]:
    """The two local shapes of a 3-point: one diagonal (I) or two (II)."""
    return {
        "I": _diagram("P Q R S", [(0, 0), (1, 0), (0, 1), (1, 1)], ["P R vert", "P Q horiz", "P S diag"]),
        "II": _diagram("Q P R S", [(0, 1), (1, 0), (1, 1), (2, 1)], ["P Q diag", "P R vert", "P S diag"]),
    }


DIAGRAMS = {
    "surface-2pt": surface_2pt_diagram,
    "pillow": pillow_diagram,
    "toric": toric_diagram,
    "cp1xcp1-4": lambda: cp1xcp1_diagram(4),
}
