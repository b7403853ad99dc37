"""Track-count parity: the number of tracks agrees with the number of vertices mod 2.

Counting preimages of the leftward unit vector under the Gauss map of a
standard planar drawing, a B-polygon contributes 1 and an A-polygon with
``n`` sides contributes ``n - 2``, giving the even total ``2q``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cmap import build_map
from .model import A, B, Configuration, Polygon
from .topology import trace_tracks


@dataclass(frozen=True)
class ParityReport:
    N: int
    track_count: int
    b_contribution: int
    a_contribution: int
    rotation_sum: int
    parity_ok: bool

    def report(self) -> str:
        rows = [
            ("N", self.N),
            ("tracks", self.track_count),
            ("b_contribution", self.b_contribution),
            ("a_contribution", self.a_contribution),
            ("rotation_sum", self.rotation_sum),
            ("parity_ok", "yes" if self.parity_ok else "no"),
        ]
        return "".join(f"{k}: {v}\n" for k, v in rows)


def gauss_contribution(poly: Polygon) -> int:
    if poly.kind == B:
        return 1
    return poly.sides - 2


def rotation_sum(c: Configuration) -> int:
    total = sum(gauss_contribution(P) for P in c.polygons)
    if total != 2 * c.q:
        raise ValueError(f"rotation sum {total} differs from 2q = {2 * c.q}; is q = N - 2p?")
    return total


def whitney_parity(rotation_number: int) -> int:
    """Parity of the self-intersection count of a generic closed plane curve."""
    return (rotation_number + 1) % 2


def verify_parity_theorem(c: Configuration, track_count: int | None = None) -> ParityReport:
    if track_count is None:
        track_count = len(trace_tracks(build_map(c)))
    b_part = sum(gauss_contribution(P) for P in c.polygons if P.kind == B)
    a_part = sum(gauss_contribution(P) for P in c.polygons if P.kind == A)
    return ParityReport(
        N=c.N,
        track_count=track_count,
        b_contribution=b_part,
        a_contribution=a_part,
        rotation_sum=rotation_sum(c),
        parity_ok=(track_count - c.N) % 2 == 0,
    )
