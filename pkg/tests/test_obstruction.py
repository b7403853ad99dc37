from fractions import Fraction

import pytest

from impconf.cmap import build_map
from impconf.generators import gen_pn
from impconf.lp import InfeasibleLP, UnboundedLP, maximize_margin, solve_standard_form
from impconf.obstruction import (
    INCONCLUSIVE, build_angle_lp, check_obstruction, half_weight_certificate, solve_slack,
    verify_certificate, verify_witness,
)

from conftest import census_upto
from oracles import grid_feasible

F = Fraction


def control_lp(c):
    m = build_map(c)
    return build_angle_lp(m.with_punctures(m.face_name))


def test_hass_scott_lp_shape(hs):
    lp = build_angle_lp(build_map(hs))
    assert lp.num_vertices == 3
    assert [fc.kind for fc in lp.constraints] == ["A", "B"]


def test_pn2_lp_shape():
    lp = build_angle_lp(build_map(gen_pn(2)))
    assert lp.num_vertices == 9
    assert len(lp.constraints) == 7


def test_hass_scott_exact(hs):
    res = check_obstruction(hs)
    assert res.impossible
    assert res.slack == 0
    assert res.boundary_point == {0: F(1, 3), 1: F(1, 3), 2: F(1, 3)}
    assert res.witness is None
    assert verify_certificate(res.lp, res.certificate)
    assert "q = N - 2p" in res.explanation


def test_hass_scott_grid_oracle(hs):
    # Independent of the simplex: no grid point strictly satisfies the system.
    assert grid_feasible(build_angle_lp(build_map(hs)), 24) is None


def test_grid_oracle_finds_control_point(hs):
    assert grid_feasible(control_lp(hs), 4) is not None


def test_scipy_agrees_on_slack():
    linprog = pytest.importorskip("scipy.optimize").linprog
    for c in census_upto(6)[:6] + [gen_pn(2)]:
        lp = build_angle_lp(build_map(c))
        _, M, b, _ = lp.rows()
        n = lp.num_vertices
        A_ub = [[float(v) for v in row] + [1.0] for row in M]
        res = linprog([0.0] * n + [-1.0], A_ub=A_ub, b_ub=[float(v) for v in b],
                      bounds=[(None, None)] * (n + 1), method="highs")
        assert res.status == 0
        assert abs(-res.fun - float(solve_slack(lp).slack)) < 1e-9


def test_control_map_inconclusive(hs):
    res = solve_slack(control_lp(hs))
    assert res.status == INCONCLUSIVE
    assert res.slack == F(1, 2)
    assert set(res.witness.values()) == {F(1, 2)}
    assert verify_witness(res.lp, res.witness)


def test_half_weight_certificate(hs):
    lp = build_angle_lp(build_map(hs))
    cert = half_weight_certificate(lp)
    assert cert == {"face:A0": 1, "face:B0": F(1, 2)}
    assert verify_certificate(lp, cert)


def test_bad_certificates_rejected(hs):
    lp = build_angle_lp(build_map(hs))
    assert not verify_certificate(lp, {"face:A0": 1})
    assert not verify_certificate(lp, {})
    assert not verify_certificate(lp, {"face:A0": -1, "face:B0": F(-1, 2)})


def test_punctured_face_rows(hs):
    lp = build_angle_lp(build_map(hs), include_punctured_faces=True)
    assert len(lp.constraints) == 5
    assert all(fc.bound == 1 for fc in lp.constraints if fc.punctured)
    assert check_obstruction(hs, include_punctured_faces=True).impossible


def test_standard_form_basics():
    # min x0 + x1 with x0 + x1 = 2, x >= 0.
    sol = solve_standard_form([[F(1), F(1)]], [F(2)], [F(1), F(1)])
    assert sol.value == 2
    with pytest.raises(InfeasibleLP):
        solve_standard_form([[F(1)], [F(1)]], [F(1), F(2)], [F(0)])
    with pytest.raises(UnboundedLP):
        solve_standard_form([[F(1), F(-1)]], [F(0)], [F(-1), F(0)])


def test_margin_of_box():
    t, x, _ = maximize_margin([[F(1)], [F(-1)]], [F(1), F(0)], [1, 1])
    assert t == F(1, 2) and x == [F(1, 2)]
