"""Boundary curves, tracks, Euler characteristic and genus of configurations."""
from __future__ import annotations

from dataclasses import dataclass, field

from .cmap import A, B, D, CombinatorialMap, build_map
from .model import Configuration, id_key


class PunctureError(ValueError):
    pass


@dataclass(frozen=True)
class BoundaryCurve:
    id: str
    edges: tuple[tuple[str, int], ...]

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Track:
    id: str
    darts: tuple[int, ...]
    edge_kinds: tuple[str, ...]
    coherent: bool = True

    @property
    def length(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class SurfaceSummary:
    N: int
    p: int
    q: int
    r: int
    chi: int
    genus: int
    punctures: int
    tracks: int
    minimal: bool
    unicursal: bool
    admits_negative_curvature: bool
    notes: tuple[str, ...] = field(default=())

    KEYS = ("N", "p", "q", "r", "chi", "genus", "punctures", "tracks",
            "minimal", "unicursal", "admits_negative_curvature")

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.KEYS}

    def report(self) -> str:
        def fmt(v):
            return ("yes" if v else "no") if isinstance(v, bool) else str(v)

        lines = [f"{k}: {fmt(v)}" for k, v in self.as_dict().items()]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines) + "\n"


def boundary_curves(c: Configuration) -> list[BoundaryCurve]:
    """Group the inactive B-edges into the closed curves they form.

    The inactive edge ``(B, j)`` starts at the corner of ``B`` glued to
    corner ``i`` of the A-polygon across ``(B, j-1)``; the inactive edge
    ending there is the one just before the B-edge glued to ``(A, i-1)``.
    Curves are listed in order of their smallest edge.
    """
    order = c.index_of

    def pred(edge):
        bid, j = edge
        aid, i = c.b_to_a[(bid, j - 1)]
        n = c.by_id[aid].sides
        bid2, j2 = c.a_to_b[(aid, (i - 1) % n)]
        return (bid2, (j2 - 1) % c.by_id[bid2].sides)

    edges = sorted(c.inactive_b_edges(), key=lambda e: (order[e[0]], e[1]))
    seen = set()
    curves = []
    for e in edges:
        if e in seen:
            continue
        cyc = []
        x = e
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = pred(x)
        if x != e:
            raise ValueError("boundary tracing did not close up")
        curves.append(BoundaryCurve(f"D{len(curves)}", tuple(cyc)))
    return curves


def genus_from_counts(p: int, r: int) -> int:
    twice = 2 - r + p
    if twice % 2 or twice < 0:
        raise ValueError(f"2 - r + p = {twice} is not a valid doubled genus")
    return twice // 2


def trace_tracks(m: CombinatorialMap) -> list[Track]:
    """Decompose the edges into straight-through curves.

    At a 4-valent vertex the exit is the opposite edge, ``sigma^2``, so the
    successor of a dart leaving a vertex is ``sigma^2(alpha(d))``.  Each
    track is a pair of mutually reverse cycles of that permutation; the
    returned direction runs A-polygon sides counterclockwise, when there are any.
    """
    sigma, alpha = m.sigma, m.alpha
    if any(len(v) != 4 for v in m.vertices):
        raise ValueError("tracks need a 4-valent map")
    n = m.num_darts
    tau = [sigma[sigma[alpha[d]]] for d in range(n)]
    seen = [False] * n
    cycles = []
    for s in range(n):
        if seen[s]:
            continue
        cyc = []
        d = s
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = tau[d]
        cycles.append(tuple(cyc))
    by_dart = {d: i for i, cyc in enumerate(cycles) for d in cyc}

    def glued_kinds(cyc):
        return {m.kind_of_dart(d) for d in cyc if {m.kind_of_dart(d), m.kind_of_dart(alpha[d])} == {A, B}}

    used = set()
    pairs = []
    for i, cyc in enumerate(cycles):
        if i in used:
            continue
        j = by_dart[alpha[cyc[0]]]
        used.update((i, j))
        first, second = cycles[i], cycles[j]
        if glued_kinds(first) != {A} and glued_kinds(second) == {A}:
            first = second
        pairs.append(first)

    def edge_kind(d):
        ks = {m.kind_of_dart(d), m.kind_of_dart(alpha[d])}
        if ks == {A, B}:
            return "glued"
        if ks == {B, D}:
            return "capped"
        return "other"

    def rotate_min(cyc):
        k = cyc.index(min(cyc, key=lambda d: (min(d, alpha[d]), d)))
        return cyc[k:] + cyc[:k]

    pairs.sort(key=lambda cyc: min(min(d, alpha[d]) for d in cyc))
    tracks = []
    for i, cyc in enumerate(pairs):
        cyc = rotate_min(cyc)
        gk = glued_kinds(cyc)
        tracks.append(Track(f"T{i}", cyc, tuple(edge_kind(d) for d in cyc), coherent=len(gk) <= 1))
    return tracks


def minimal_bound(genus: int, punctures: int) -> int:
    if punctures == 0:
        return 6 * genus - 3
    return 6 * genus + 3 * punctures - 6


def check_minimal_unicursal(s: SurfaceSummary) -> tuple[bool, bool]:
    return s.N == minimal_bound(s.genus, s.punctures), s.tracks == 1


def surface_summary(c: Configuration, m: CombinatorialMap | None = None) -> SurfaceSummary:
    if m is None:
        m = build_map(c)
    curves = boundary_curves(c)
    r = len(curves)
    chi = -c.p + r
    genus = genus_from_counts(c.p, r)
    k = len(c.punctures)
    tracks = len(trace_tracks(m))
    notes = []
    if genus == 0 and k in (1, 2):
        notes.append(
            "sphere with one or two punctures: no geodesic configuration of this kind exists there"
        )
    minimal = c.N == minimal_bound(genus, k)
    return SurfaceSummary(
        N=c.N, p=c.p, q=c.q, r=r, chi=chi, genus=genus, punctures=k, tracks=tracks,
        minimal=minimal, unicursal=tracks == 1,
        admits_negative_curvature=2 - 2 * genus - k < 0,
        notes=tuple(notes),
    )


_REQUIRED = {0: 3, 1: 1}


def puncture_plan(c: Configuration) -> frozenset[str]:
    """Complementary discs to puncture so the surface can carry the configuration.

    Discs bounded by one or two segments are always punctured; then the
    lowest-numbered remaining discs are punctured until a genus-0 surface
    has three punctures and a genus-1 surface has one.  Existing punctures
    count towards the totals.
    """
    curves = boundary_curves(c)
    genus = genus_from_counts(c.p, len(curves))
    names = [cv.id for cv in curves]
    plan = {d for d in c.punctures if d in names}
    plan |= {cv.id for cv in curves if cv.length <= 2}
    need = _REQUIRED.get(genus, 0)
    if len(curves) < need:
        raise PunctureError(
            f"insufficient boundary curves: genus {genus} needs {need} punctured discs, only {len(curves)} exist"
        )
    for nm in sorted(names, key=id_key):
        if len(plan) >= need:
            break
        plan.add(nm)
    return frozenset(plan)


def apply_puncture_plan(c: Configuration) -> Configuration:
    return c.with_punctures(puncture_plan(c))


def unpunctured_small_faces(m: CombinatorialMap) -> list[str]:
    """Discs bounded by one or two segments that carry no puncture."""
    return [
        m.face_name[f] for f, cyc in enumerate(m.faces)
        if len(cyc) <= 2 and f not in m.punctured
    ]
