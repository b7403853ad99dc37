"""Command-line interface: ``impconf <command> ...``.

Exit status is 0 on success, 1 when the input fails a domain check
(validation errors, a rejected splice site, an unexpected Inconclusive
with ``--assert-impossible``) and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .cmap import build_map, canonical_form
from .export import to_dot, to_schematic_svg
from .fileformat import FORMAT_VERSION, ConfigSyntaxError, parse_configuration, serialize_configuration
from .generators import (
    EnumerationGuardError, EnumerationOptions, SpliceSiteError, enumerate_configurations, gen_pn,
    gen_small, splice,
)
from .model import validate_definition
from .obstruction import check_obstruction, fraction_str
from .parity import verify_parity_theorem
from .topology import PunctureError, apply_puncture_plan, surface_summary, trace_tracks


class DomainError(Exception):
    pass


def _load(path, plan=True):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise DomainError(str(exc)) from exc
    try:
        c = parse_configuration(text)
    except ConfigSyntaxError as exc:
        raise DomainError(f"{path}: {exc}") from exc
    report = validate_definition(c)
    if not report.ok:
        raise DomainError(f"{path}: invalid configuration\n{report}")
    if plan and not c.punctures:
        try:
            c = apply_puncture_plan(c)
        except PunctureError as exc:
            raise DomainError(str(exc)) from exc
    return c


def cmd_validate(args):
    try:
        c = parse_configuration(open(args.file, encoding="utf-8").read() if args.file != "-" else sys.stdin.read())
    except ConfigSyntaxError as exc:
        print(f"error: syntax: {exc}")
        return 1
    report = validate_definition(c)
    print(report)
    return 0 if report.ok else 1


def cmd_summary(args):
    c = _load(args.file, plan=not args.as_is)
    sys.stdout.write(surface_summary(c).report())
    return 0


def cmd_tracks(args):
    c = _load(args.file)
    m = build_map(c)
    for t in trace_tracks(m):
        edges = " ".join(f"{m.face_name[m.face_of[d]]}.{m.side_of[d]}" for d in t.darts)
        print(f"{t.id}: length {t.length}: {edges}")
    return 0


def cmd_parity(args):
    c = _load(args.file)
    sys.stdout.write(verify_parity_theorem(c).report())
    return 0


def cmd_obstruction(args):
    c = _load(args.file)
    res = check_obstruction(c, include_punctured_faces=args.include_punctured_faces)
    print(f"status: {res.status}")
    print(f"slack: {fraction_str(res.slack)}")
    if res.witness is not None:
        print("witness: " + " ".join(f"x{v}={fraction_str(x)}" for v, x in sorted(res.witness.items())))
    else:
        print("boundary point: " + " ".join(f"x{v}={fraction_str(x)}" for v, x in sorted(res.boundary_point.items())))
    if res.certificate is not None:
        print("certificate: " + " ".join(f"{k}={fraction_str(v)}" for k, v in res.certificate.items()))
        print(res.explanation)
    if args.assert_impossible and not res.impossible:
        return 1
    return 0


def cmd_family(args):
    if args.name == "hass-scott":
        c = apply_puncture_plan(gen_small("sphere3"))
    elif args.name == "n3-torus":
        c = apply_puncture_plan(gen_small("torus1"))
    else:
        if args.genus is None:
            raise DomainError("family pn needs --genus")
        c = gen_pn(args.genus, punctured=args.punctured)
    sys.stdout.write(serialize_configuration(c))
    return 0


def _parse_site(text):
    try:
        bid, j = text.rsplit(".", 1)
        return bid, int(j)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected Bid.j, got {text!r}") from None


def cmd_splice(args):
    c = _load(args.file)
    try:
        out = splice(c, args.kind, args.at)
    except SpliceSiteError as exc:
        raise DomainError(str(exc)) from exc
    sys.stdout.write(serialize_configuration(out))
    return 0


def _classes(args):
    opts = EnumerationOptions(
        args.vertices, max_results=getattr(args, "max", None),
        quotient_reflections=args.reflections,
        max_vertices=max(args.vertices, 9) if args.force else 9,
    )
    try:
        return list(enumerate_configurations(opts))
    except EnumerationGuardError as exc:
        raise DomainError(f"{exc}; pass --force to run anyway") from exc


def cmd_enumerate(args):
    classes = _classes(args)
    blocks = []
    for i, c in enumerate(classes):
        code = canonical_form(build_map(c), args.reflections).hex()
        blocks.append(f"# class {i}: code {code}\n" + serialize_configuration(c))
    sys.stdout.write("\n".join(blocks))
    print(f"# {len(classes)} classes with N = {args.vertices}")
    return 0


def cmd_census(args):
    classes = _classes(args)
    os.makedirs(args.out, exist_ok=True)
    index = [f"# census N = {args.vertices}, {len(classes)} classes"]
    for i, c in enumerate(classes):
        name = f"class_{i:03d}.cfg"
        with open(os.path.join(args.out, name), "w", encoding="utf-8") as fh:
            fh.write(serialize_configuration(c))
        s = surface_summary(c)
        code = canonical_form(build_map(c), args.reflections).hex()
        index.append(
            f"{name} p={s.p} q={s.q} r={s.r} genus={s.genus} punctures={s.punctures} "
            f"tracks={s.tracks} minimal={'yes' if s.minimal else 'no'} code={code}"
        )
    with open(os.path.join(args.out, "index.txt"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(index) + "\n")
    print(f"wrote {len(classes)} classes to {args.out}")
    return 0


def cmd_export(args):
    c = _load(args.file, plan=False)
    if args.format == "dot":
        sys.stdout.write(to_dot(c))
    elif args.format == "schematic-svg":
        sys.stdout.write(to_schematic_svg(c))
    else:
        sys.stdout.write(serialize_configuration(c))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="impconf", description="Polygonal impossible configurations.")
    ap.add_argument("--version", action="version", version=f"impconf {__version__} (config {FORMAT_VERSION})")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a configuration file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("summary", help="Euler characteristic, genus, tracks, ...")
    p.add_argument("file")
    p.add_argument("--as-is", action="store_true", help="do not plan punctures when the file has none")
    p.set_defaults(func=cmd_summary)

    for name, func, text in (("tracks", cmd_tracks, "list the tracks"), ("parity", cmd_parity, "parity report")):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("obstruction", help="exact Gauss-Bonnet angle feasibility")
    p.add_argument("file")
    p.add_argument("--include-punctured-faces", action="store_true",
                   help="also bound punctured discs (angle sum < sides)")
    p.add_argument("--assert-impossible", action="store_true", help="exit 1 unless Impossible")
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("family", help="print a member of a built-in family")
    p.add_argument("name", choices=["hass-scott", "n3-torus", "pn"])
    p.add_argument("--genus", type=int)
    p.add_argument("--punctured", action="store_true", help="puncture the complementary disc of P_n")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("splice", help="splice a partial configuration into an arm")
    p.add_argument("file")
    p.add_argument("--kind", choices=["a", "b", "c"], required=True)
    p.add_argument("--at", type=_parse_site, help="arm Bid.j (j odd); default: first legal arm")
    p.set_defaults(func=cmd_splice)

    for name, func in (("enumerate", cmd_enumerate), ("census", cmd_census)):
        p = sub.add_parser(name, help="all classes with N vertices" if name == "enumerate" else "write a census")
        p.add_argument("--vertices", type=int, required=True)
        p.add_argument("--reflections", action="store_true", help="identify mirror images")
        p.add_argument("--force", action="store_true", help="allow N above the guard")
        if name == "enumerate":
            p.add_argument("--max", type=int)
        else:
            p.add_argument("--out", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("export", help="DOT graph, schematic SVG or canonical text")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot", "schematic-svg", "config"], default="dot")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "vertices", 3) < 3:
        ap.error("--vertices must be at least 3")
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
