"""Reading and writing the line-based ``config v1`` text format.

::

    config v1
    A0 A 3
    B0 B 6
    glue A0.0 B0.0
    glue A0.1 B0.4
    glue A0.2 B0.2
    puncture D0

``#`` starts a comment.  ``;`` may be used in place of a newline.
"""
from __future__ import annotations

import re

from .model import A, B, Configuration, GlueEntry, Polygon, id_key

FORMAT_VERSION = "v1"

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_EDGE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\.(\d+)$")
_DFACE = re.compile(r"D\d+$")


class ConfigSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _statements(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 0
        for part in line.split(";"):
            stripped = part.strip()
            if stripped:
                yield lineno, col + (len(part) - len(part.lstrip())) + 1, stripped
            col += len(part) + 1


def parse_configuration(text: str) -> Configuration:
    polygons: dict[str, Polygon] = {}
    pending_glue = []
    punctures: set[str] = set()
    first = True
    for lineno, col, stmt in _statements(text):
        toks = stmt.split()
        if first:
            first = False
            if toks[0] == "config":
                if len(toks) != 2 or toks[1] != FORMAT_VERSION:
                    raise ConfigSyntaxError(f"unsupported header {stmt!r}", lineno, col)
                continue
        if toks[0] == "glue":
            if len(toks) != 3:
                raise ConfigSyntaxError("glue needs two edge references", lineno, col)
            pending_glue.append((lineno, col, toks[1], toks[2]))
        elif toks[0] == "puncture":
            if len(toks) != 2 or not _DFACE.match(toks[1]):
                raise ConfigSyntaxError("puncture needs a face id D<k>", lineno, col)
            punctures.add(toks[1])
        elif toks[0] == "config":
            raise ConfigSyntaxError("header must be the first statement", lineno, col)
        else:
            if len(toks) != 3 or not _IDENT.match(toks[0]) or toks[1] not in (A, B):
                raise ConfigSyntaxError(f"expected '<id> <A|B> <sides>', got {stmt!r}", lineno, col)
            if toks[0] in polygons:
                raise ConfigSyntaxError(f"duplicate polygon id {toks[0]}", lineno, col)
            try:
                sides = int(toks[2])
            except ValueError:
                raise ConfigSyntaxError(f"bad side count {toks[2]!r}", lineno, col) from None
            if sides < 1:
                raise ConfigSyntaxError("side count must be positive", lineno, col)
            if toks[1] == B and sides % 2:
                raise ConfigSyntaxError(f"B-polygon {toks[0]} has an odd number of sides", lineno, col)
            polygons[toks[0]] = Polygon(toks[0], toks[1], sides)

    glue = []
    seen = set()
    for lineno, col, a_ref, b_ref in pending_glue:
        a_side = _edge_ref(a_ref, polygons, A, lineno, col)
        b_side = _edge_ref(b_ref, polygons, B, lineno, col)
        if b_side[1] % 2:
            raise ConfigSyntaxError(f"B-edge {b_ref} is inactive (odd index)", lineno, col)
        for side in (a_side, b_side):
            if side in seen:
                raise ConfigSyntaxError(f"edge {side[0]}.{side[1]} glued twice", lineno, col)
            seen.add(side)
        glue.append(GlueEntry(a_side, b_side))
    return Configuration(tuple(polygons.values()), tuple(glue), frozenset(punctures))


def _edge_ref(ref, polygons, kind, lineno, col):
    m = _EDGE.match(ref)
    if not m:
        raise ConfigSyntaxError(f"bad edge reference {ref!r}", lineno, col)
    pid, idx = m.group(1), int(m.group(2))
    P = polygons.get(pid)
    if P is None:
        raise ConfigSyntaxError(f"unknown polygon id {pid}", lineno, col)
    if P.kind != kind:
        raise ConfigSyntaxError(f"{pid} has the wrong kind: expected an {kind}-polygon", lineno, col)
    if not 0 <= idx < P.sides:
        raise ConfigSyntaxError(f"edge index {idx} out of range for {pid}", lineno, col)
    return (pid, idx)


def serialize_configuration(c: Configuration) -> str:
    lines = [f"config {FORMAT_VERSION}"]
    lines += [f"{P.id} {P.kind} {P.sides}" for P in c.polygons]
    lines += [f"glue {g.a_side[0]}.{g.a_side[1]} {g.b_side[0]}.{g.b_side[1]}" for g in c.glue]
    lines += [f"puncture {d}" for d in sorted(c.punctures, key=id_key)]
    return "\n".join(lines) + "\n"


def read_configuration(path) -> Configuration:
    with open(path, encoding="utf-8") as fh:
        return parse_configuration(fh.read())


def write_configuration(c: Configuration, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_configuration(c))
