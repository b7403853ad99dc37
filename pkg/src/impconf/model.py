"""Polygon complexes: the data of a polygonal configuration and its validation.

A configuration is a set of A-polygons and even-sided B-polygons together
with a bijection between the edges of the A-polygons and the *active*
edges of the B-polygons.  Edges of a polygon with ``sides`` corners are
numbered ``0 .. sides-1`` counterclockwise, edge ``i`` running from corner
``i`` to corner ``i+1``.  On B-polygons the even edges are active and the
odd edges inactive.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

A = "A"
B = "B"

_TOKEN = re.compile(r"\d+|\D+")


def id_key(ident: str) -> tuple:
    """Natural sort key, so that ``B2`` sorts before ``B10``."""
    return tuple((0, int(t), "") if t.isdigit() else (1, 0, t) for t in _TOKEN.findall(ident))


class ConfigurationError(ValueError):
    """Raised when a configuration cannot even be assembled."""


@dataclass(frozen=True)
class Polygon:
    id: str
    kind: str
    sides: int

    def __post_init__(self):
        if self.kind not in (A, B):
            raise ConfigurationError(f"polygon {self.id}: kind must be A or B, got {self.kind!r}")
        if self.sides < 1:
            raise ConfigurationError(f"polygon {self.id}: sides must be positive")

    def is_active(self, edge: int) -> bool:
        return self.kind == A or edge % 2 == 0


@dataclass(frozen=True, order=True)
class GlueEntry:
    """Identification of A-edge ``a_side`` with active B-edge ``b_side``."""

    a_side: tuple[str, int]
    b_side: tuple[str, int]


@dataclass(frozen=True)
class Configuration:
    polygons: tuple[Polygon, ...]
    glue: tuple[GlueEntry, ...]
    punctures: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        polys = tuple(sorted(self.polygons, key=lambda P: id_key(P.id)))
        ids = [P.id for P in polys]
        if len(set(ids)) != len(ids):
            raise ConfigurationError("duplicate polygon ids")
        glue = tuple(
            sorted(self.glue, key=lambda g: (id_key(g.a_side[0]), g.a_side[1], id_key(g.b_side[0]), g.b_side[1]))
        )
        object.__setattr__(self, "polygons", polys)
        object.__setattr__(self, "glue", glue)
        object.__setattr__(self, "punctures", frozenset(self.punctures))

    # -- lookups -----------------------------------------------------------

    @cached_property
    def by_id(self) -> dict[str, Polygon]:
        return {P.id: P for P in self.polygons}

    @cached_property
    def index_of(self) -> dict[str, int]:
        return {P.id: i for i, P in enumerate(self.polygons)}

    def polygon(self, ident: str) -> Polygon:
        return self.by_id[ident]

    @property
    def a_polygons(self) -> list[Polygon]:
        return [P for P in self.polygons if P.kind == A]

    @property
    def b_polygons(self) -> list[Polygon]:
        return [P for P in self.polygons if P.kind == B]

    @property
    def N(self) -> int:
        return sum(P.sides for P in self.a_polygons)

    @property
    def p(self) -> int:
        return len(self.a_polygons)

    @property
    def q(self) -> int:
        return len(self.b_polygons)

    @cached_property
    def a_to_b(self) -> dict[tuple[str, int], tuple[str, int]]:
        return {g.a_side: g.b_side for g in self.glue}

    @cached_property
    def b_to_a(self) -> dict[tuple[str, int], tuple[str, int]]:
        return {g.b_side: g.a_side for g in self.glue}

    def with_punctures(self, punctures: Iterable[str]) -> "Configuration":
        return Configuration(self.polygons, self.glue, frozenset(punctures))

    def a_edges(self) -> list[tuple[str, int]]:
        return [(P.id, i) for P in self.a_polygons for i in range(P.sides)]

    def active_b_edges(self) -> list[tuple[str, int]]:
        return [(P.id, j) for P in self.b_polygons for j in range(0, P.sides, 2)]

    def inactive_b_edges(self) -> list[tuple[str, int]]:
        return [(P.id, j) for P in self.b_polygons for j in range(1, P.sides, 2)]

    def is_complete(self) -> bool:
        """True when the glue table is a bijection between A-edges and active B-edges."""
        a_edges = set(self.a_edges())
        b_edges = set(self.active_b_edges())
        return (
            len(self.glue) == len(a_edges) == len(b_edges)
            and set(self.a_to_b) == a_edges
            and set(self.b_to_a) == b_edges
        )


@dataclass(frozen=True)
class Finding:
    severity: str
    code: str
    message: str
    location: str = ""

    def __str__(self):
        loc = f" [{self.location}]" if self.location else ""
        return f"{self.severity}: {self.code}: {self.message}{loc}"


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...] = ()

    @property
    def errors(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "error"]

    @property
    def warnings(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.errors

    def codes(self) -> list[str]:
        return [f.code for f in self.findings]

    def __str__(self):
        if not self.findings:
            return "ok"
        return "\n".join(str(f) for f in self.findings)


def is_connected(c: Configuration) -> bool:
    if not c.polygons:
        return False
    parent = {P.id: P.id for P in c.polygons}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in c.glue:
        ra, rb = find(g.a_side[0]), find(g.b_side[0])
        if ra != rb:
            parent[ra] = rb
    return len({find(P.id) for P in c.polygons}) == 1


def validate_definition(c: Configuration) -> ValidationReport:
    """Check ``c`` against every constraint of a polygonal impossible configuration.

    Problems are returned as findings rather than raised.  A configuration
    with no error findings can be passed to :func:`impconf.cmap.build_map`.
    """
    out: list[Finding] = []

    def err(code, msg, loc=""):
        out.append(Finding("error", code, msg, loc))

    N, p, q = c.N, c.p, c.q
    for P in c.a_polygons:
        if P.sides < 3:
            err("a-sides", f"A-polygon has {P.sides} sides; at least 3 required", P.id)
    for P in c.b_polygons:
        if P.sides % 2 or P.sides < 4:
            err("b-sides", f"B-polygon has {P.sides} sides; an even number >= 4 required", P.id)

    if N < 3:
        err("n-too-small", f"N = {N} A-corners; at least 3 required")
    if 4 * p < N:
        err("p-below-range", f"p below N/4 (p = {p}, N = {N})")
    if 3 * p > N:
        err("p-above-range", f"p above N/3 (p = {p}, N = {N})")
    if q != N - 2 * p:
        err("q-mismatch", f"q = {q} B-polygons but N - 2p = {N - 2 * p}")
    b_total = sum(P.sides for P in c.b_polygons)
    if b_total != 2 * N:
        err("b-corner-total", f"B-polygons have {b_total} corners in total, expected 2N = {2 * N}")
    if c.a_polygons and not any(P.sides == 3 for P in c.a_polygons):
        err("no-triangle", "no A-polygon is a triangle")

    out.extend(_glue_findings(c))

    if c.polygons and not is_connected(c):
        err("disconnected", "glued complex is not connected")

    # A missing triangle does not stop the gluing from being analysed.
    structural = not any(f.severity == "error" and f.code != "no-triangle" for f in out)
    if structural:
        # Imported here: cmap depends on this module.
        from .cmap import build_map, config_rings_of_squares, map_rings_of_squares

        for ring in config_rings_of_squares(c):
            err("ring-of-squares", "ring of square faces glued along opposite edges", " ".join(ring))
        m = build_map(c)
        for d in sorted(c.punctures - set(m.d_faces()), key=id_key):
            err("puncture-unknown", f"no complementary face {d}", d)
        if not any(f.code == "ring-of-squares" for f in out):
            for ring in map_rings_of_squares(m):
                out.append(
                    Finding("warning", "capped-ring-of-squares",
                            "ring of squares through capping faces", " ".join(ring))
                )
    return ValidationReport(tuple(out))


def _glue_findings(c: Configuration) -> list[Finding]:
    out = []
    seen_a: set = set()
    seen_b: set = set()
    for g in c.glue:
        aid, i = g.a_side
        bid, j = g.b_side
        loc = f"{aid}.{i} {bid}.{j}"
        P = c.by_id.get(aid)
        Q = c.by_id.get(bid)
        if P is None or P.kind != A:
            out.append(Finding("error", "glue-bad-polygon", f"{aid} is not an A-polygon", loc))
            continue
        if Q is None or Q.kind != B:
            out.append(Finding("error", "glue-bad-polygon", f"{bid} is not a B-polygon", loc))
            continue
        if not 0 <= i < P.sides or not 0 <= j < Q.sides:
            out.append(Finding("error", "glue-range", "edge index out of range", loc))
            continue
        if j % 2:
            out.append(Finding("error", "glue-inactive", f"B-edge {bid}.{j} is inactive", loc))
        if g.a_side in seen_a:
            out.append(Finding("error", "glue-duplicate", f"A-edge {aid}.{i} glued twice", loc))
        if g.b_side in seen_b:
            out.append(Finding("error", "glue-duplicate", f"B-edge {bid}.{j} glued twice", loc))
        seen_a.add(g.a_side)
        seen_b.add(g.b_side)
    for e in c.a_edges():
        if e not in seen_a:
            out.append(Finding("error", "glue-missing", f"A-edge {e[0]}.{e[1]} is not glued", f"{e[0]}.{e[1]}"))
    for e in c.active_b_edges():
        if e not in seen_b:
            out.append(Finding("error", "glue-missing", f"active B-edge {e[0]}.{e[1]} is not glued", f"{e[0]}.{e[1]}"))
    return out
