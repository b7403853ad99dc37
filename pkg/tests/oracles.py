"""Slow reference implementations used to cross-check the package."""
import itertools
from fractions import Fraction

from impconf.cmap import config_rings_of_squares
from impconf.model import Configuration, GlueEntry, Polygon


def size_multisets(total, count, sizes):
    return [t for t in itertools.combinations_with_replacement(sizes, count) if sum(t) == total]


def frames(N):
    for p in range(1, N + 1):
        if not 4 * p >= N >= 3 * p:
            continue
        q = N - 2 * p
        for a in size_multisets(N, p, range(3, N + 1)):
            for b in size_multisets(2 * N, q, range(4, 2 * N + 1, 2)):
                yield a, b


def _moves(a, b):
    """Generators of the relabeling group acting on (A index, edge, B index, edge) gluings."""
    moves = []
    for i, s in enumerate(a):
        moves.append(lambda g, i=i, s=s: frozenset(((x, (e + 1) % s if x == i else e), y) for (x, e), y in g))
    for j, s in enumerate(b):
        moves.append(lambda g, j=j, s=s: frozenset((x, (y, (f + 2) % s if y == j else f)) for x, (y, f) in g))
    for i in range(len(a) - 1):
        if a[i] == a[i + 1]:
            sw = {i: i + 1, i + 1: i}
            moves.append(lambda g, sw=sw: frozenset(((sw.get(x, x), e), y) for (x, e), y in g))
    for j in range(len(b) - 1):
        if b[j] == b[j + 1]:
            sw = {j: j + 1, j + 1: j}
            moves.append(lambda g, sw=sw: frozenset((x, (sw.get(y, y), f)) for x, (y, f) in g))
    return moves


def _connected(a, b, g):
    parent = list(range(len(a) + len(b)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for (x, _), (y, _) in g:
        parent[find(x)] = find(len(a) + y)
    return len({find(x) for x in range(len(parent))}) == 1


def to_configuration(a, b, g):
    polys = [Polygon(f"A{i}", "A", s) for i, s in enumerate(a)] + [Polygon(f"B{j}", "B", s) for j, s in enumerate(b)]
    glue = [GlueEntry((f"A{x}", e), (f"B{y}", f)) for (x, e), (y, f) in g]
    return Configuration(tuple(polys), tuple(glue))


def orbit_classes(N):
    """One representative per relabeling orbit of valid gluings, no symmetry shortcuts."""
    reps = []
    for a, b in frames(N):
        a_edges = [(i, e) for i, s in enumerate(a) for e in range(s)]
        b_edges = [(j, f) for j, s in enumerate(b) for f in range(0, s, 2)]
        moves = _moves(a, b)
        seen = set()
        for image in itertools.permutations(b_edges):
            g = frozenset(zip(a_edges, image))
            if g in seen:
                continue
            orbit = {g}
            todo = [g]
            while todo:
                h = todo.pop()
                for mv in moves:
                    k = mv(h)
                    if k not in orbit:
                        orbit.add(k)
                        todo.append(k)
            seen |= orbit
            if not _connected(a, b, g):
                continue
            c = to_configuration(a, b, g)
            if config_rings_of_squares(c):
                continue
            reps.append(c)
    return reps


def grid_feasible(lp, steps):
    """Search a rational grid for a point strictly satisfying every row."""
    names, M, rhs, _ = lp.rows()
    pts = [Fraction(k, steps) for k in range(1, steps)]
    for x in itertools.product(pts, repeat=lp.num_vertices):
        if all(sum(c * v for c, v in zip(row, x)) < r for row, r in zip(M, rhs)):
            return x
    return None
