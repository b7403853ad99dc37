"""DOT and schematic SVG renderings of a configuration."""
from __future__ import annotations

from html import escape

from .cmap import build_map
from .model import Configuration
from .topology import trace_tracks


def to_dot(c: Configuration) -> str:
    m = build_map(c)
    tracks = trace_tracks(m)
    track_of = {}
    for t in tracks:
        for d in t.darts:
            track_of[min(d, m.alpha[d])] = t.id
    lines = ["graph configuration {", "  node [shape=point];"]
    for v in range(m.V):
        lines.append(f"  v{v};")
    for d in range(m.num_darts):
        e = m.alpha[d]
        if d > e:
            continue
        f1, f2 = m.face_name[m.face_of[d]], m.face_name[m.face_of[e]]
        kinds = {m.face_kind[m.face_of[d]], m.face_kind[m.face_of[e]]}
        kind = "glued" if kinds == {"A", "B"} else "capped"
        lines.append(
            f'  v{m.vertex_of[d]} -- v{m.vertex_of[e]} '
            f'[track="{track_of[d]}", kind="{kind}", faces="{f1}|{f2}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_schematic_svg(c: Configuration) -> str:
    """Polygons as labelled boxes, B row above A row, one arc per glue entry.

    A diagram of the data only; positions carry no geometric meaning.
    """
    w, h, gap = 90, 40, 30
    bs, as_ = c.b_polygons, c.a_polygons
    width = max(len(bs), len(as_), 1) * (w + gap) + gap
    height = 260
    pos = {}
    for row, polys, y in ((0, bs, 20), (1, as_, height - 20 - h)):
        for i, P in enumerate(polys):
            pos[P.id] = (gap + i * (w + gap), y)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g font-family="monospace" font-size="12">',
    ]
    for P in c.polygons:
        x, y = pos[P.id]
        fill = "#e8eef8" if P.kind == "B" else "#f8eee8"
        out.append(f'<rect x="{x}" y="{y}" width="{w}" height="{h}" fill="{fill}" stroke="black"/>')
        out.append(f'<text x="{x + 6}" y="{y + 24}">{escape(P.id)} ({P.sides})</text>')

    def anchor(pid, edge, top):
        x, y = pos[pid]
        P = c.by_id[pid]
        return x + w * (edge + 0.5) / P.sides, (y if top else y + h)

    for g in c.glue:
        x1, y1 = anchor(*g.a_side, top=True)
        x2, y2 = anchor(*g.b_side, top=False)
        my = (y1 + y2) / 2
        out.append(
            f'<path d="M {x1:.1f} {y1:.1f} C {x1:.1f} {my:.1f}, {x2:.1f} {my:.1f}, {x2:.1f} {y2:.1f}" '
            f'fill="none" stroke="#555"><title>{escape(g.a_side[0])}.{g.a_side[1]} ~ '
            f'{escape(g.b_side[0])}.{g.b_side[1]}</title></path>'
        )
    out += ["</g>", "</svg>"]
    return "\n".join(out) + "\n"
