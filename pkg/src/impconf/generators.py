"""Example families and exhaustive enumeration of configurations.

Gluings are handled internally as permutations: A-edges are numbered
polygon by polygon, active B-edges likewise (``(B, 2k)`` gets the k-th
slot of its polygon), and ``perm[a]`` is the active B-edge glued to A-edge
``a``.  The inactive edge ``(B, 2k+1)`` shares the slot of ``(B, 2k)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cmap import build_map, canonical_configuration, canonical_form, config_rings_of_squares
from .model import A, B, Configuration, GlueEntry, Polygon, is_connected
from .topology import apply_puncture_plan, boundary_curves


class SearchError(RuntimeError):
    pass


class EnumerationGuardError(ValueError):
    pass


# -- permutation-level model -------------------------------------------------


@dataclass(frozen=True)
class Frame:
    """Edge numbering for fixed polygon sizes."""

    a_sizes: tuple[int, ...]
    b_sizes: tuple[int, ...]

    @property
    def N(self) -> int:
        return sum(self.a_sizes)

    def _rot(self, sizes):
        nxt, prv, owner, start = [], [], [], []
        base = 0
        for k, s in enumerate(sizes):
            for i in range(s):
                nxt.append(base + (i + 1) % s)
                prv.append(base + (i - 1) % s)
                owner.append(k)
                start.append(base)
            base += s
        return nxt, prv, owner, start

    @property
    def rho_a(self):
        return self._rot(self.a_sizes)

    @property
    def rho_b(self):
        return self._rot(tuple(s // 2 for s in self.b_sizes))

    def configuration(self, perm, a_ids=None, b_ids=None) -> Configuration:
        a_ids = a_ids or [f"A{i}" for i in range(len(self.a_sizes))]
        b_ids = b_ids or [f"B{i}" for i in range(len(self.b_sizes))]
        polys = [Polygon(a_ids[i], A, s) for i, s in enumerate(self.a_sizes)]
        polys += [Polygon(b_ids[i], B, s) for i, s in enumerate(self.b_sizes)]
        a_edges = [(a_ids[i], e) for i, s in enumerate(self.a_sizes) for e in range(s)]
        b_edges = [(b_ids[i], 2 * k) for i, s in enumerate(self.b_sizes) for k in range(s // 2)]
        glue = [GlueEntry(a_edges[a], b_edges[perm[a]]) for a in range(len(perm))]
        return Configuration(tuple(polys), tuple(glue))


def _count_cycles(f, n):
    seen = [False] * n
    k = 0
    for s in range(n):
        if not seen[s]:
            k += 1
            while not seen[s]:
                seen[s] = True
                s = f[s]
    return k


def fast_invariants(frame: Frame, perm) -> tuple[int, int]:
    """``(r, tracks)`` straight from the gluing permutation.

    Boundary: slot ``s`` is followed by ``rho_b^-1 perm rho_a^-1 perm^-1 (s)``.
    Tracks: glued edge ``a`` meets the inactive edges of slots
    ``perm(rho_a a)`` and ``rho_b^-1 perm(rho_a^-1 a)``; tracks are the
    cycles of that 2-regular graph.
    """
    n = len(perm)
    ra_next, ra_prev, _, _ = frame.rho_a
    _, rb_prev, _, _ = frame.rho_b
    inv = [0] * n
    for a, s in enumerate(perm):
        inv[s] = a
    beta = [rb_prev[perm[ra_prev[inv[s]]]] for s in range(n)]
    r = _count_cycles(beta, n)
    # Nodes 0..n-1 glued edges, n..2n-1 inactive slots.
    adj = [[] for _ in range(2 * n)]
    for a in range(n):
        for s in (perm[ra_next[a]], rb_prev[perm[ra_prev[a]]]):
            adj[a].append(n + s)
            adj[n + s].append(a)
    seen = [False] * (2 * n)
    tracks = 0
    for s in range(2 * n):
        if seen[s]:
            continue
        tracks += 1
        stack = [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return r, tracks


def _partial_ok(frame, perm, inv, n, want_r, want_tracks):
    """Reject partial gluings that already close a short boundary curve or track."""
    ra_next, ra_prev, _, _ = frame.rho_a
    _, rb_prev, _, _ = frame.rho_b

    def beta(s):
        a = inv[s]
        if a < 0:
            return -1
        t = perm[ra_prev[a]]
        return -1 if t < 0 else rb_prev[t]

    if want_r == 1:
        seen = [False] * n
        for s in range(n):
            if seen[s]:
                continue
            x, length = s, 0
            while x >= 0 and not seen[x]:
                seen[x] = True
                x = beta(x)
                length += 1
            if x == s and length < n:
                return False
    if want_tracks == 1:
        parent = list(range(2 * n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        nedges = [0] * (2 * n)
        for a in range(n):
            for s in ((perm[ra_next[a]], ra_next[a]), (perm[ra_prev[a]], ra_prev[a])):
                slot, src = s
                if slot < 0:
                    continue
                if src == ra_prev[a]:
                    slot = rb_prev[slot]
                x, y = find(a), find(n + slot)
                if x != y:
                    parent[x] = y
                    nedges[y] += nedges[x]
                nedges[find(y)] += 1
        size = {}
        for v in range(2 * n):
            rv = find(v)
            size[rv] = size.get(rv, 0) + 1
        for rv, sz in size.items():
            if nedges[rv] == sz and sz < 2 * n:
                return False
    return True


def search_gluing(frame: Frame, want_r=None, want_tracks=None, first=None, limit=10**7):
    """Depth-first search for a gluing with prescribed ``r`` and track count.

    ``want_r`` and ``want_tracks`` may be ``1`` (pruned eagerly) or any
    other value (checked at the leaves).  Returns a permutation or None.
    """
    n = frame.N
    perm = [-1] * n
    inv = [-1] * n
    nodes = 0
    order = list(range(n))
    if first is not None:
        perm[0], inv[first] = first, 0

    def rec(i):
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise SearchError("node limit exceeded")
        if i == n:
            r, t = fast_invariants(frame, perm)
            return (want_r is None or r == want_r) and (want_tracks is None or t == want_tracks)
        a = order[i]
        if perm[a] >= 0:
            return rec(i + 1)
        for s in range(n):
            if inv[s] >= 0:
                continue
            perm[a], inv[s] = s, a
            if _partial_ok(frame, perm, inv, n, want_r, want_tracks) and rec(i + 1):
                return True
            perm[a], inv[s] = -1, -1
        return False

    return list(perm) if rec(0) else None


# -- the families --------------------------------------------------------------


def gen_small(variant: str) -> Configuration:
    """The two N=3 configurations: ``sphere3`` (r = 3) and ``torus1`` (r = 1)."""
    want = {"sphere3": 3, "torus1": 1}
    if variant not in want:
        raise ValueError(f"unknown variant {variant!r}")
    found = [c for c in enumerate_configurations(EnumerationOptions(3)) if len(boundary_curves(c)) == want[variant]]
    if len(found) != 1:
        raise SearchError(f"expected one N=3 class with r={want[variant]}, found {len(found)}")
    return found[0]


@lru_cache(maxsize=None)
def gen_pn(n: int, punctured: bool = False) -> Configuration:
    """Unicursal configuration of genus ``n`` from ``2n-1`` triangles and ``2n-1`` hexagons, r = 1."""
    if n < 2:
        raise ValueError("genus must be at least 2")
    k = 2 * n - 1
    frame = Frame((3,) * k, (6,) * k)
    perm = search_gluing(frame, want_r=1, want_tracks=1, first=0)
    if perm is None:
        raise SearchError(f"no gluing found for genus {n}")
    c = canonical_configuration(frame.configuration(perm))
    if punctured:
        c = c.with_punctures({"D0"})
    return c


# -- enumeration ---------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationOptions:
    N: int
    max_results: int | None = None
    quotient_reflections: bool = False
    max_vertices: int = 9
    apply_punctures: bool = True

    def __post_init__(self):
        if self.N < 3:
            raise ValueError("N must be at least 3")


def partitions(total: int, count: int, smallest: int, step: int = 1) -> list[tuple[int, ...]]:
    """Nondecreasing tuples of ``count`` parts ``>= smallest``, spaced by ``step``, with the given sum."""
    out = []

    def rec(rem, k, lo, acc):
        if k == 0:
            if rem == 0:
                out.append(tuple(acc))
            return
        v = lo
        while v * k <= rem:
            rec(rem - v, k - 1, v, acc + [v])
            v += step

    rec(total, count, smallest, [])
    return out


def p_range(N: int) -> range:
    return range(-(-N // 4), N // 3 + 1)


def candidate_frames(N: int) -> list[Frame]:
    frames = []
    for p in p_range(N):
        q = N - 2 * p
        for a_sizes in partitions(N, p, 3):
            for b_sizes in partitions(2 * N, q, 4, 2):
                frames.append(Frame(a_sizes, b_sizes))
    return frames


def _gluings(frame: Frame):
    """Gluings covering every isomorphism class at least once.

    Rotating and permuting equal A-polygons, the A-edge glued to the first
    active B-edge can be taken to be edge 0 of the first A-polygon of its size.
    """
    n = frame.N
    starts = []
    base = 0
    seen_sizes = set()
    for s in frame.a_sizes:
        if s not in seen_sizes:
            seen_sizes.add(s)
            starts.append(base)
        base += s
    for a0 in starts:
        rest = [a for a in range(n) if a != a0]
        for tail in itertools.permutations(range(1, n)):
            perm = [0] * n
            perm[a0] = 0
            for a, s in zip(rest, tail):
                perm[a] = s
            yield perm


def enumerate_configurations(opts: EnumerationOptions):
    """All configurations with ``opts.N`` vertices, one per isomorphism class.

    Classes are emitted in order of their canonical code.
    """
    N = opts.N
    if N > opts.max_vertices:
        raise EnumerationGuardError(f"N = {N} exceeds the enumeration guard ({opts.max_vertices})")
    classes = {}
    for frame in candidate_frames(N):
        for perm in _gluings(frame):
            c = frame.configuration(perm)
            if not is_connected(c) or config_rings_of_squares(c):
                continue
            code = canonical_form(build_map(c), opts.quotient_reflections)
            if code not in classes:
                classes[code] = c
    emitted = 0
    for code in sorted(classes):
        if opts.max_results is not None and emitted >= opts.max_results:
            return
        c = canonical_configuration(classes[code], opts.quotient_reflections)
        if opts.apply_punctures:
            c = apply_puncture_plan(c)
        emitted += 1
        yield c


# -- splices -------------------------------------------------------------------


class SpliceSiteError(ValueError):
    """The arm cannot take this splice."""


class SpliceContractError(RuntimeError):
    """A splice result broke its declared invariants."""


@dataclass(frozen=True)
class SpliceTemplate:
    """A planar piece inserted along one glued edge.

    The glued pair ``(a1, s1)`` at the site is cut; ``a1`` is glued to the
    template's free B-edge and ``s1`` to its free A-edge.  Polygons are
    referred to by their position in ``polygons``.
    """

    kind: str
    polygons: tuple[tuple[str, int], ...]
    internal: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    free_a: tuple[int, int]
    free_b: tuple[int, int]
    delta_punctures: int
    delta_vertices: int
    delta_tracks: int
    needs_hexagon: bool


# Found by find_template(); the test suite re-runs the search.
SPLICE_TEMPLATES = {
    "a": SpliceTemplate(
        "a", ((A, 3), (B, 6)),
        (((0, 1), (1, 4)), ((0, 2), (1, 2))),
        (0, 0), (1, 0), 1, 3, 1, True,
    ),
    "b": SpliceTemplate(
        "b", ((A, 4), (B, 4), (B, 4)),
        (((0, 1), (1, 2)), ((0, 2), (2, 0)), ((0, 3), (2, 2))),
        (0, 0), (1, 0), 1, 4, 0, False,
    ),
    "c": SpliceTemplate(
        "c", ((A, 3), (A, 3), (B, 6), (B, 6)),
        (((0, 1), (2, 4)), ((0, 2), (3, 0)), ((1, 0), (2, 2)), ((1, 1), (3, 4)), ((1, 2), (3, 2))),
        (0, 0), (2, 0), 2, 6, 0, True,
    ),
}

_TEMPLATE_SHAPES = {
    "a": ((3,), (6,), 1, 3, 1, True),
    "b": ((4,), (4, 4), 1, 4, 0, False),
    "c": ((3, 3), (6, 6), 2, 6, 0, True),
}


def _fresh_ids(c: Configuration, kinds) -> list[str]:
    used = set(c.by_id)
    counters = {A: sum(1 for P in c.polygons if P.kind == A), B: sum(1 for P in c.polygons if P.kind == B)}
    out = []
    for kind in kinds:
        while f"{kind}{counters[kind]}" in used:
            counters[kind] += 1
        name = f"{kind}{counters[kind]}"
        used.add(name)
        out.append(name)
    return out


def legal_sites(c: Configuration, kind: str) -> list[tuple[str, int]]:
    """Arms ``(B id, inactive edge)`` accepted by splice ``kind``."""
    tpl = SPLICE_TEMPLATES[kind]
    return [
        (P.id, j) for P in c.b_polygons if P.sides == 6 or not tpl.needs_hexagon
        for j in range(1, P.sides, 2)
    ]


def apply_template(c: Configuration, tpl: SpliceTemplate, site: tuple[str, int]) -> Configuration:
    bid, j = site
    P = c.by_id.get(bid)
    if P is None or P.kind != B or not 0 <= j < P.sides or j % 2 == 0:
        raise SpliceSiteError(f"{bid}.{j} is not an inactive B-edge")
    s1 = (bid, j - 1)
    a1 = c.b_to_a[s1]
    ids = _fresh_ids(c, [k for k, _ in tpl.polygons])
    polys = list(c.polygons) + [Polygon(ids[i], k, s) for i, (k, s) in enumerate(tpl.polygons)]
    glue = [g for g in c.glue if g.b_side != s1]
    glue += [GlueEntry((ids[ai], e), (ids[bi], f)) for (ai, e), (bi, f) in tpl.internal]
    glue.append(GlueEntry(a1, (ids[tpl.free_b[0]], tpl.free_b[1])))
    glue.append(GlueEntry((ids[tpl.free_a[0]], tpl.free_a[1]), s1))
    new = Configuration(tuple(polys), tuple(glue))

    # A disc stays punctured if it still contains an edge of a punctured
    # disc; discs made only of new edges are punctured.
    old = boundary_curves(c)
    old_punctured = {e for cv in old if cv.id in c.punctures for e in cv.edges}
    old_edges = {e for cv in old for e in cv.edges}
    punct = set()
    for cv in boundary_curves(new):
        es = set(cv.edges)
        if es & old_punctured or not es & old_edges:
            punct.add(cv.id)
    return new.with_punctures(punct)


def splice(c: Configuration, kind: str, site: tuple[str, int] | None = None) -> Configuration:
    """Insert partial configuration ``kind`` (a, b or c) at arm ``site``."""
    from .model import validate_definition
    from .topology import surface_summary, unpunctured_small_faces

    if kind not in SPLICE_TEMPLATES:
        raise ValueError(f"unknown splice kind {kind!r}")
    tpl = SPLICE_TEMPLATES[kind]
    if site is None:
        site = legal_sites(c, kind)[0]
    bid, _ = site
    if bid in c.by_id and tpl.needs_hexagon and c.by_id[bid].sides != 6:
        raise SpliceSiteError(f"splice {kind} must sit on an arm leaving a hexagon; {bid} has {c.by_id[bid].sides} sides")
    new = apply_template(c, tpl, site)
    before = surface_summary(c)
    after = surface_summary(new)
    if after.tracks - before.tracks != tpl.delta_tracks and kind == "a":
        raise SpliceSiteError(
            f"splice a at {bid}.{site[1]} joins two different tracks instead of adding one"
        )
    problems = []
    if not validate_definition(new).ok:
        problems.append(str(validate_definition(new)))
    if after.genus != before.genus:
        problems.append("genus changed")
    if after.punctures - before.punctures != tpl.delta_punctures:
        problems.append("puncture count")
    if after.N - before.N != tpl.delta_vertices:
        problems.append("vertex count")
    if after.tracks - before.tracks != tpl.delta_tracks:
        problems.append("track count")
    if unpunctured_small_faces(build_map(new)):
        problems.append("unpunctured monogon or bigon")
    if problems:
        raise SpliceContractError(f"splice {kind} at {bid}.{site[1]}: " + "; ".join(problems))
    return new


def _probe_sites():
    bases = [gen_pn(2, True), apply_puncture_plan(gen_small("sphere3")), apply_puncture_plan(gen_small("torus1")),
             gen_pn(3, True)]
    return [(base, (P.id, j)) for base in bases for P in base.b_polygons if P.sides == 6
            for j in range(1, 6, 2)]


def find_template(kind: str) -> SpliceTemplate:
    """Search the first template satisfying the contracts of ``kind`` on probe bases.

    Kinds b and c must work at every probe site; kind a, which adds a
    track, is only required to work on single-track bases.
    """
    from .model import validate_definition
    from .topology import surface_summary, unpunctured_small_faces

    a_sizes, b_sizes, dk, dn, dt, hexa = _TEMPLATE_SHAPES[kind]
    polys = tuple((A, s) for s in a_sizes) + tuple((B, s) for s in b_sizes)
    a_edges = [(i, e) for i, s in enumerate(a_sizes) for e in range(s)]
    b_edges = [(len(a_sizes) + i, f) for i, s in enumerate(b_sizes) for f in range(0, s, 2)]
    free_a = a_edges[0]
    probes = [(base, site, surface_summary(base)) for base, site in _probe_sites()]
    for free_b in b_edges:
        rest_a = [x for x in a_edges if x != free_a]
        rest_b = [x for x in b_edges if x != free_b]
        for image in itertools.permutations(rest_b):
            tpl = SpliceTemplate(kind, polys, tuple(zip(rest_a, image)), free_a, free_b, dk, dn, dt, hexa)
            ok = True
            for base, site, s0 in probes:
                new = apply_template(base, tpl, site)
                s = surface_summary(new)
                if kind == "a" and s0.tracks > 1:
                    if s.genus != s0.genus:
                        ok = False
                        break
                    continue
                if (s.punctures - s0.punctures, s.N - s0.N, s.tracks - s0.tracks, s.genus) != (dk, dn, dt, s0.genus) \
                        or unpunctured_small_faces(build_map(new)) or not validate_definition(new).ok:
                    ok = False
                    break
            if ok:
                return tpl
    raise SearchError(f"no template for splice {kind}")
