"""Gauss-Bonnet angle obstruction, decided in exact rational arithmetic.

Angles are measured in units of pi.  Each vertex ``v`` carries one
variable ``x_v``, the angle of its A-corner.  Geodesics cross
transversally, so the two B-corners at ``v`` have angle ``1 - x_v`` and
the capping-disc corner has angle ``x_v``.  A disc face with ``n`` corners
in negative curvature has angle sum strictly below ``n - 2``.

The strict system is open, so it is decided by maximizing a uniform
margin ``t``: the system is solvable iff the optimum ``t*`` is positive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cmap import A, B, CombinatorialMap, build_map
from .lp import maximize_margin
from .model import Configuration

IMPOSSIBLE = "Impossible"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class FaceConstraint:
    """``sum(corner angles) < bound``; ``corners`` holds ``(vertex, complement)``."""

    face: str
    kind: str
    corners: tuple[tuple[int, bool], ...]
    bound: int
    punctured: bool = False

    def coefficients(self, nvars: int) -> tuple[list[Fraction], Fraction]:
        """Linear form ``a . x < b`` equivalent to this constraint."""
        a = [Fraction(0)] * nvars
        b = Fraction(self.bound)
        for v, comp in self.corners:
            if comp:
                a[v] -= 1
                b -= 1
            else:
                a[v] += 1
        return a, b

    def render(self) -> str:
        terms = [f"(1 - x{v})" if comp else f"x{v}" for v, comp in self.corners]
        return f"{self.face}: {' + '.join(terms)} < {self.bound}"


@dataclass(frozen=True)
class AngleLP:
    num_vertices: int
    constraints: tuple[FaceConstraint, ...]

    def rows(self) -> tuple[list[str], list[list[Fraction]], list[Fraction], list[int]]:
        """All strict rows, face constraints first, then ``0 < x_v`` and ``x_v < 1``.

        The last component flags face rows (1) versus box rows (0).
        """
        n = self.num_vertices
        names, M, b, is_face = [], [], [], []
        for fc in self.constraints:
            a, rhs = fc.coefficients(n)
            names.append(f"face:{fc.face}")
            M.append(a)
            b.append(rhs)
            is_face.append(1)
        for v in range(n):
            lo = [Fraction(0)] * n
            lo[v] = Fraction(-1)
            names.append(f"lower:x{v}")
            M.append(lo)
            b.append(Fraction(0))
            is_face.append(0)
            hi = [Fraction(0)] * n
            hi[v] = Fraction(1)
            names.append(f"upper:x{v}")
            M.append(hi)
            b.append(Fraction(1))
            is_face.append(0)
        return names, M, b, is_face


@dataclass(frozen=True)
class ObstructionResult:
    status: str
    slack: Fraction
    boundary_point: dict[int, Fraction]
    witness: dict[int, Fraction] | None = None
    certificate: dict[str, Fraction] | None = None
    explanation: str = ""
    lp: AngleLP | None = field(default=None, repr=False, compare=False)

    @property
    def impossible(self) -> bool:
        return self.status == IMPOSSIBLE


def build_angle_lp(m: CombinatorialMap, include_punctured_faces: bool = False) -> AngleLP:
    """One strict angle-sum constraint per unpunctured face.

    With ``include_punctured_faces`` a punctured disc contributes
    ``sum < sides`` (a cusp: Euler characteristic zero).  That bound goes
    beyond the classical argument and is off by default.
    """
    cons = []
    for f, cyc in enumerate(m.faces):
        kind = m.face_kind[f]
        punct = f in m.punctured
        if punct and not include_punctured_faces:
            continue
        corners = tuple((m.vertex_of[d], kind == B) for d in cyc)
        bound = len(cyc) if punct else len(cyc) - 2
        cons.append(FaceConstraint(m.face_name[f], kind, corners, bound, punct))
    return AngleLP(m.V, tuple(cons))


def verify_certificate(lp: AngleLP, cert: dict[str, Fraction]) -> bool:
    """True iff ``cert`` combines the strict rows into ``0 < (something <= 0)``."""
    names, M, b, _ = lp.rows()
    y = [Fraction(cert.get(nm, 0)) for nm in names]
    if any(v < 0 for v in y) or not any(v > 0 for v in y):
        return False
    for v in range(lp.num_vertices):
        if sum(y[k] * M[k][v] for k in range(len(M))) != 0:
            return False
    return sum(yk * bk for yk, bk in zip(y, b)) <= 0


def verify_witness(lp: AngleLP, x: dict[int, Fraction], margin: Fraction = Fraction(0)) -> bool:
    """True iff ``x`` satisfies every strict row, each with room at least ``margin``."""
    names, M, b, _ = lp.rows()
    xs = [Fraction(x[v]) for v in range(lp.num_vertices)]
    for row, rhs in zip(M, b):
        room = rhs - sum(a * xv for a, xv in zip(row, xs))
        if room <= 0 or room < margin:
            return False
    return True


def solve_slack(lp: AngleLP) -> ObstructionResult:
    names, M, b, is_face = lp.rows()
    n = lp.num_vertices
    if n == 0:
        raise ValueError("angle system without vertices")
    t, x, y = maximize_margin(M, b, [1] * len(M))
    if t > Fraction(1, 2):
        raise ArithmeticError("margin above 1/2 is impossible; solver error")
    # Among points achieving t on the face rows, maximize the box margin:
    # a canonical, more central representative of the optimal set.
    b2 = [bk - t if fk else bk for bk, fk in zip(b, is_face)]
    s, x2, _ = maximize_margin(M, b2, [1 - fk for fk in is_face])
    point = {v: x2[v] for v in range(n)}
    if t > 0:
        if not verify_witness(lp, point, t):
            raise ArithmeticError("witness failed exact substitution")
        return ObstructionResult(INCONCLUSIVE, t, point, witness=point, lp=lp)
    cert = {nm: yk for nm, yk in zip(names, y) if yk != 0}
    if not verify_certificate(lp, cert):
        raise ArithmeticError("certificate failed exact verification")
    return ObstructionResult(IMPOSSIBLE, t, point, certificate=cert, lp=lp)


def half_weight_certificate(lp: AngleLP) -> dict[str, Fraction]:
    """Weight 1 on every A-face row and 1/2 on every B-face row."""
    out = {}
    for fc in lp.constraints:
        if fc.kind == A and not fc.punctured:
            out[f"face:{fc.face}"] = Fraction(1)
        elif fc.kind == B and not fc.punctured:
            out[f"face:{fc.face}"] = Fraction(1, 2)
    return out


def render_certificate(lp: AngleLP, cert: dict[str, Fraction]) -> str:
    by_name = {f"face:{fc.face}": fc for fc in lp.constraints}
    lines = []
    for nm, w in cert.items():
        if nm in by_name:
            body = by_name[nm].render()
        elif nm.startswith("lower:"):
            body = f"0 < {nm[6:]}"
        else:
            body = f"{nm[6:]} < 1"
        lines.append(f"  {fraction_str(w)} * [{body}]")
    names, M, b, _ = lp.rows()
    total = sum(Fraction(cert.get(nm, 0)) * bk for nm, bk in zip(names, b))
    lines.append(f"  sum: 0 < {fraction_str(total)}")
    return "\n".join(lines)


def explain(c: Configuration, lp: AngleLP, cert: dict[str, Fraction]) -> str:
    N, p, q = c.N, c.p, c.q
    lines = [
        f"A-faces: sum of A-corner angles < (N - 2p) pi = {N - 2 * p} pi",
        "B-faces: every B-corner is pi minus an A-corner, each A-corner used twice,",
        f"         so the B-face bounds give sum of A-corner angles > q pi = {q} pi",
        "q = N - 2p, so the two bounds contradict each other.",
        "solver certificate:",
        render_certificate(lp, cert),
    ]
    return "\n".join(lines)


def check_obstruction(c: Configuration, include_punctured_faces: bool = False) -> ObstructionResult:
    m = build_map(c)
    lp = build_angle_lp(m, include_punctured_faces)
    res = solve_slack(lp)
    if res.impossible:
        return ObstructionResult(
            res.status, res.slack, res.boundary_point, None, res.certificate,
            explain(c, lp, res.certificate), lp,
        )
    return res


def fraction_str(v) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"
