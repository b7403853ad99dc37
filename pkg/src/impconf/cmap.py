"""Dart-based oriented maps built from glued polygon complexes.

Every face side is a dart.  ``alpha`` pairs the two darts of an edge and
``phi`` steps counterclockwise around a face, so that dart ``d`` runs from
corner ``side(d)`` to corner ``side(d) + 1`` of its face.  The vertex
rotation is ``sigma = alpha . phi^-1``; each dart then stands for the face
corner at its start.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass
from functools import cached_property

from .model import A, B, Configuration, GlueEntry, Polygon

D = "D"
CODE_VERSION = 1
_KIND_CODE = {A: 0, B: 1, D: 2}


class MapError(RuntimeError):
    """The glued complex does not close up into a 4-valent map."""


@dataclass(frozen=True)
class CombinatorialMap:
    alpha: tuple[int, ...]
    phi: tuple[int, ...]
    faces: tuple[tuple[int, ...], ...]
    face_kind: tuple[str, ...]
    face_name: tuple[str, ...]
    punctured: frozenset[int] = frozenset()

    @classmethod
    def from_permutations(cls, alpha, phi, kinds, punctured=(), names=None):
        """Build a map from raw permutations.

        ``kinds`` (and ``names``) are indexed by face, faces being the cycles
        of ``phi`` numbered by their smallest dart.
        """
        n = len(alpha)
        if sorted(phi) != list(range(n)) or sorted(alpha) != list(range(n)):
            raise MapError("alpha and phi must be permutations of the same darts")
        if any(alpha[d] == d or alpha[alpha[d]] != d for d in range(n)):
            raise MapError("alpha must be a fixed-point-free involution")
        faces = _cycles(phi)
        if len(kinds) != len(faces):
            raise MapError(f"{len(faces)} faces but {len(kinds)} kinds")
        if names is None:
            names = tuple(f"F{i}" for i in range(len(faces)))
        return cls(tuple(alpha), tuple(phi), faces, tuple(kinds), tuple(names), frozenset(punctured))

    @property
    def num_darts(self) -> int:
        return len(self.alpha)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for f, cyc in enumerate(self.faces):
            for d in cyc:
                out[d] = f
        return tuple(out)

    @cached_property
    def side_of(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for cyc in self.faces:
            for i, d in enumerate(cyc):
                out[d] = i
        return tuple(out)

    @cached_property
    def phi_inv(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for d, e in enumerate(self.phi):
            out[e] = d
        return tuple(out)

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        return tuple(self.alpha[self.phi_inv[d]] for d in range(self.num_darts))

    @cached_property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return _cycles(self.sigma)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        out = [0] * self.num_darts
        for v, cyc in enumerate(self.vertices):
            for d in cyc:
                out[d] = v
        return tuple(out)

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return self.num_darts // 2

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F

    def kind_of_dart(self, d: int) -> str:
        return self.face_kind[self.face_of[d]]

    def d_faces(self) -> dict[str, int]:
        return {self.face_name[f]: f for f, k in enumerate(self.face_kind) if k == D}

    def face_index(self, name: str) -> int:
        return self.face_name.index(name)

    def with_punctures(self, names) -> "CombinatorialMap":
        idx = frozenset(self.face_index(n) for n in names)
        return CombinatorialMap(self.alpha, self.phi, self.faces, self.face_kind, self.face_name, idx)

    def quadrant_patterns(self) -> list[tuple[str, ...]]:
        return [tuple(self.kind_of_dart(d) for d in cyc) for cyc in self.vertices]

    def is_connected(self) -> bool:
        n = self.num_darts
        if n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (self.phi[d], self.alpha[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == n

    def mirror(self) -> "CombinatorialMap":
        """The same map with the opposite orientation."""
        faces = tuple((cyc[0],) + tuple(reversed(cyc[1:])) for cyc in self.faces)
        return CombinatorialMap(self.alpha, self.phi_inv, faces, self.face_kind, self.face_name, self.punctured)


def _cycles(perm) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc = []
        d = s
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return tuple(out)


QUADRANT = (A, B, D, B)
_QUADRANT_ROTATIONS = {QUADRANT[i:] + QUADRANT[:i] for i in range(4)}


def has_quadrant_pattern(pattern) -> bool:
    return tuple(pattern) in _QUADRANT_ROTATIONS


def build_map(c: Configuration) -> CombinatorialMap:
    """Close the glued complex by capping each boundary curve with a disc."""
    base = {}
    n = 0
    for P in c.polygons:
        base[P.id] = n
        n += P.sides
    alpha: list[int] = [-1] * n
    phi: list[int] = [0] * n
    phi_inv: list[int] = [0] * n
    faces, kinds, names = [], [], []
    for P in c.polygons:
        b = base[P.id]
        cyc = tuple(range(b, b + P.sides))
        for i, d in enumerate(cyc):
            phi[d] = cyc[(i + 1) % P.sides]
            phi_inv[d] = cyc[(i - 1) % P.sides]
        faces.append(cyc)
        kinds.append(P.kind)
        names.append(P.id)
    for g in c.glue:
        da = base[g.a_side[0]] + g.a_side[1]
        db = base[g.b_side[0]] + g.b_side[1]
        if alpha[da] != -1 or alpha[db] != -1:
            raise MapError(f"edge glued twice near {g}")
        alpha[da], alpha[db] = db, da

    free = [d for d in range(n) if alpha[d] == -1]
    for d in free:
        if kinds[_face_by_base(base, c, d)] != B:
            raise MapError("an A-edge is left unglued")

    # Walk backwards around the start vertex of each free dart until the
    # next free dart; that is the preceding side of the capping disc.
    prev_free = {}
    for d in free:
        x = phi_inv[d]
        steps = 0
        while alpha[x] != -1:
            x = phi_inv[alpha[x]]
            steps += 1
            if steps > n:
                raise MapError("vertex rotation does not close")
        prev_free[d] = x
    if sorted(prev_free.values()) != free:
        raise MapError("boundary tracing is not a permutation")

    cycles = []
    seen = set()
    for d in free:  # ascending, so each cycle starts at its smallest dart
        if d in seen:
            continue
        cyc = []
        x = d
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = prev_free[x]
        cycles.append(cyc)
    alpha += [-1] * len(free)
    phi += [0] * len(free)
    nd = n
    for k, cyc in enumerate(cycles):
        darts = list(range(nd, nd + len(cyc)))
        for i, b in enumerate(cyc):
            alpha[darts[i]] = b
            alpha[b] = darts[i]
            phi[darts[i]] = darts[(i + 1) % len(cyc)]
        nd += len(cyc)
        faces.append(tuple(darts))
        kinds.append(D)
        names.append(f"D{k}")
    name_idx = {nm: i for i, nm in enumerate(names)}
    punctured = set()
    for pname in c.punctures:
        if pname in name_idx and kinds[name_idx[pname]] == D:
            punctured.add(name_idx[pname])
    m = CombinatorialMap(tuple(alpha), tuple(phi), tuple(faces), tuple(kinds), tuple(names), frozenset(punctured))
    for pat in m.quadrant_patterns():
        if not has_quadrant_pattern(pat):
            raise MapError(f"vertex with corner pattern {pat}")
    return m


def _face_by_base(base, c, d):
    for i, P in enumerate(c.polygons):
        if base[P.id] <= d < base[P.id] + P.sides:
            return i
    raise IndexError(d)


def dart_of_edge(c: Configuration, edge: tuple[str, int]) -> int:
    """Dart index of polygon side ``edge`` in ``build_map(c)``."""
    n = 0
    for P in c.polygons:
        if P.id == edge[0]:
            return n + edge[1]
        n += P.sides
    raise KeyError(edge)


# -- canonical form ---------------------------------------------------------


def _dart_class(m: CombinatorialMap, d: int) -> int:
    f = m.face_of[d]
    return 2 * _KIND_CODE[m.face_kind[f]] + (1 if f in m.punctured else 0)


def _encode(m: CombinatorialMap, phi, start, best):
    """Traversal code from ``start``; None as soon as it exceeds ``best``."""
    n = m.num_darts
    alpha = m.alpha
    label = {start: 0}
    order = [start]
    code = []
    pos = 0
    for i in range(n):
        if i >= len(order):
            raise MapError("canonical form needs a connected map")
        d = order[i]
        row = []
        for e in (phi[d], alpha[d]):
            if e not in label:
                label[e] = len(order)
                order.append(e)
            row.append(label[e])
        row.append(_dart_class(m, d))
        for v in row:
            if best is not None:
                if v > best[pos]:
                    return None
                if v < best[pos]:
                    best = None
            code.append(v)
            pos += 1
    return code, order


def canonical_labeling(m: CombinatorialMap, reflections: bool = False):
    """Return ``(code, order, mirrored)`` minimizing the traversal code.

    ``order`` lists darts in canonical order; if ``mirrored`` the code was
    taken on the orientation-reversed map.
    """
    key = lambda d: (_dart_class(m, d), len(m.faces[m.face_of[d]]))
    kmin = min(key(d) for d in range(m.num_darts))
    starts = [d for d in range(m.num_darts) if key(d) == kmin]
    variants = [(False, m.phi)]
    if reflections:
        variants.append((True, m.phi_inv))
    best = None
    for mirrored, phi in variants:
        for s in starts:
            res = _encode(m, phi, s, best[0] if best else None)
            if res is not None and (best is None or res[0] < best[0]):
                best = (res[0], res[1], mirrored)
    code, order, mirrored = best
    header = struct.pack(">BH", CODE_VERSION, m.num_darts)
    return header + struct.pack(f">{len(code)}H", *code), order, mirrored


def canonical_form(m: CombinatorialMap, reflections: bool = False) -> bytes:
    return canonical_labeling(m, reflections)[0]


def canonical_configuration(c: Configuration, reflections: bool = False) -> Configuration:
    """Relabel ``c`` so that isomorphic configurations become equal."""
    return configuration_from_map(build_map(c), reflections)


def configuration_from_map(m: CombinatorialMap, reflections: bool = False) -> Configuration:
    _, order, mirrored = canonical_labeling(m, reflections)
    phi = m.phi_inv if mirrored else m.phi
    label = {d: i for i, d in enumerate(order)}
    face_min = {}
    for d in order:
        face_min.setdefault(m.face_of[d], label[d])
    counters = {A: 0, B: 0}
    polys = []
    where = {}  # dart -> (new polygon id, edge index)
    for f in sorted(face_min, key=face_min.get):
        kind = m.face_kind[f]
        if kind == D:
            continue
        darts = m.faces[f]
        if kind == A:
            first = min(darts, key=label.get)
        else:
            active = [d for d in darts if m.kind_of_dart(m.alpha[d]) == A]
            first = min(active, key=label.get)
        pid = f"{kind}{counters[kind]}"
        counters[kind] += 1
        polys.append(Polygon(pid, kind, len(darts)))
        d = first
        for i in range(len(darts)):
            where[d] = (pid, i)
            d = phi[d]
    glue = []
    for d, (pid, i) in where.items():
        if pid.startswith(A) and m.face_kind[m.face_of[d]] == A:
            glue.append(GlueEntry((pid, i), where[m.alpha[d]]))
    plain = Configuration(tuple(polys), tuple(glue))
    if not m.punctured:
        return plain
    new_map = build_map(plain)
    punct = set()
    for f in m.punctured:
        b_old = m.alpha[m.faces[f][0]]
        nd = dart_of_edge(plain, where[b_old])
        punct.add(new_map.face_name[new_map.face_of[new_map.alpha[nd]]])
    return plain.with_punctures(punct)


# -- rings of squares --------------------------------------------------------


def config_rings_of_squares(c: Configuration) -> list[tuple[str, ...]]:
    """Rings of square A/B faces glued along opposite edges, in the uncapped complex."""
    partner = {}
    for g in c.glue:
        partner[g.a_side] = g.b_side
        partner[g.b_side] = g.a_side
    square = {P.id for P in c.polygons if P.sides == 4}
    rings = {}
    for g in c.glue:
        start = g.a_side
        if start[0] not in square or g.b_side[0] not in square:
            continue
        state = start
        faces = []
        edges = []
        for _ in range(len(partner) + 1):
            pid, e = state
            faces.append(pid)
            out = (pid, (e + 2) % 4)
            nxt = partner.get(out)
            if nxt is None or nxt[0] not in square:
                break
            edges.append(frozenset((out, nxt)))
            state = nxt
            if state == start:
                key = frozenset(edges)
                rings.setdefault(key, tuple(faces))
                break
    return sorted(rings.values())


def map_rings_of_squares(m: CombinatorialMap) -> list[tuple[str, ...]]:
    """Rings of unpunctured quadrilateral faces of a map, any face kind."""
    ok = [len(cyc) == 4 and f not in m.punctured for f, cyc in enumerate(m.faces)]
    rings = {}
    for start in range(m.num_darts):
        if not ok[m.face_of[start]]:
            continue
        d = start
        faces, edges = [], []
        for _ in range(m.num_darts + 1):
            faces.append(m.face_name[m.face_of[d]])
            out = m.phi[m.phi[d]]
            nxt = m.alpha[out]
            if not ok[m.face_of[nxt]]:
                break
            edges.append(frozenset((out, nxt)))
            d = nxt
            if d == start:
                rings.setdefault(frozenset(edges), tuple(faces))
                break
    return sorted(rings.values())


def detect_ring_of_squares(obj) -> list[tuple[str, ...]]:
    if isinstance(obj, CombinatorialMap):
        return map_rings_of_squares(obj)
    return config_rings_of_squares(obj)
