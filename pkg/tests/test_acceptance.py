"""One test per acceptance criterion, at the stated tolerances and time limits."""
import time
from fractions import Fraction
from pathlib import Path

from impconf.cli import main
from impconf.cmap import build_map
from impconf.fileformat import parse_configuration, serialize_configuration
from impconf.generators import (
    EnumerationOptions, Frame, SpliceSiteError, enumerate_configurations, fast_invariants, gen_pn,
    legal_sites, splice,
)
from impconf.obstruction import (
    INCONCLUSIVE, build_angle_lp, check_obstruction, half_weight_certificate, solve_slack,
    verify_certificate, verify_witness,
)
from impconf.parity import verify_parity_theorem
from impconf.topology import boundary_curves, genus_from_counts, surface_summary, unpunctured_small_faces

GOLDEN = Path(__file__).parent / "golden"


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def classes(n):
    return list(enumerate_configurations(EnumerationOptions(n)))


def small_census():
    return [c for n in (3, 4, 5, 6) for c in classes(n)]


def families():
    return [gen_pn(n) for n in range(2, 6)]


def test_ac1_n3_census():
    got, dt = timed(classes, 3)
    assert len(got) == 2
    profiles = sorted((s.r, s.genus, s.tracks) for s in map(surface_summary, got))
    assert profiles == [(1, 1, 3), (3, 0, 1)]
    assert dt < 1.0


def test_ac2_degenerate_censuses():
    (four, five), dt = timed(lambda: (classes(4), classes(5)))
    assert four == [] and five == []
    assert dt < 1.0


def test_ac3_euler_and_genus_two_ways():
    for c in small_census() + families():
        m = build_map(c)
        r_curves = len(boundary_curves(c))
        frame = Frame(tuple(P.sides for P in c.a_polygons), tuple(P.sides for P in c.b_polygons))
        slot = {e: k for k, e in enumerate(c.active_b_edges())}
        r_perm, _ = fast_invariants(frame, [slot[c.a_to_b[e]] for e in c.a_edges()])
        assert m.V - m.E + m.F == -c.p + r_curves
        assert r_perm == r_curves
        assert (2 - (m.V - m.E + m.F)) // 2 == genus_from_counts(c.p, r_perm)


def splice_results():
    base = gen_pn(2, True)
    out = []
    for kind in "abc":
        for site in legal_sites(base, kind):
            try:
                out.append(splice(base, kind, site))
            except SpliceSiteError:
                pass
    return out


def test_ac4_parity():
    pool = small_census() + families() + [gen_pn(n, True) for n in range(2, 6)] + splice_results()
    for c in pool:
        rep = verify_parity_theorem(c)
        assert rep.parity_ok and rep.track_count % 2 == c.N % 2
        assert rep.rotation_sum == 2 * c.q


def test_ac5_obstruction():
    t0 = time.perf_counter()
    for c in small_census() + families():
        res = check_obstruction(c)
        assert res.impossible and isinstance(res.slack, Fraction) and res.slack <= 0
        assert verify_certificate(res.lp, res.certificate)
        assert verify_certificate(res.lp, half_weight_certificate(res.lp))
    hs = parse_configuration((GOLDEN / "hass-scott.cfg").read_text())
    res = check_obstruction(hs)
    assert res.slack == 0
    assert set(res.boundary_point.values()) == {Fraction(1, 3)}
    assert time.perf_counter() - t0 < 10.0


def test_ac6_feasible_control():
    m = build_map(parse_configuration((GOLDEN / "hass-scott.cfg").read_text()))
    lp = build_angle_lp(m.with_punctures(m.face_name))
    res = solve_slack(lp)
    assert res.status == INCONCLUSIVE
    assert res.slack == Fraction(1, 2)
    assert set(res.witness.values()) == {Fraction(1, 2)}
    assert verify_witness(lp, res.witness)


def test_ac7_pn_family():
    t0 = time.perf_counter()
    for n in range(2, 6):
        c = gen_pn.__wrapped__(n)
        s = surface_summary(c)
        assert (s.N, s.p, s.q, s.r, s.genus) == (6 * n - 3, 2 * n - 1, 2 * n - 1, 1, n)
        assert s.unicursal and s.minimal
    assert time.perf_counter() - t0 < 60.0


def test_ac8_splice_contracts():
    base = gen_pn(2, True)
    b = surface_summary(base)
    want = {"a": (1, 3, 1), "b": (1, 4, 0), "c": (2, 6, 0)}
    for kind, delta in want.items():
        new = splice(base, kind)
        s = surface_summary(new)
        assert (s.punctures - b.punctures, s.N - b.N, s.tracks - b.tracks) == delta
        assert s.genus == b.genus
        assert not unpunctured_small_faces(build_map(new))
    c = base
    for k in (3, 5, 7):
        c = splice(c, "c")
        s = surface_summary(c)
        assert s.punctures == k and s.minimal and s.unicursal
    for c in splice_results():
        s = surface_summary(c)
        if s.punctures % 2 == 0:
            assert not (s.minimal and s.unicursal)


def test_ac9_round_trip_and_determinism(tmp_path, capsys):
    for path in sorted(GOLDEN.glob("*.cfg")):
        c = parse_configuration(path.read_text())
        assert parse_configuration(serialize_configuration(c)) == c
    runs = []
    for name in ("first", "second"):
        assert main(["census", "--vertices", "7", "--out", str(tmp_path / name)]) == 0
        runs.append({p.name: p.read_bytes() for p in (tmp_path / name).iterdir()})
    capsys.readouterr()
    assert runs[0] == runs[1] and len(runs[0]) == 15
