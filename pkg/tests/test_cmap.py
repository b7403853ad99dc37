from hypothesis import given, settings, strategies as st

import pytest

from impconf.cmap import (
    CombinatorialMap, MapError, build_map, canonical_configuration, canonical_form,
    configuration_from_map, has_quadrant_pattern, map_rings_of_squares,
)
from impconf.generators import gen_pn

from conftest import census, census_upto, hass_scott, n3_torus


def relabel(m, perm):
    n = m.num_darts
    alpha = [0] * n
    phi = [0] * n
    for d in range(n):
        alpha[perm[d]] = perm[m.alpha[d]]
        phi[perm[d]] = perm[m.phi[d]]
    inv = {perm[d]: d for d in range(n)}
    probe = CombinatorialMap.from_permutations(alpha, phi, ["A"] * m.F)
    kinds, names, punct = [], [], []
    for f, cyc in enumerate(probe.faces):
        old = m.face_of[inv[cyc[0]]]
        kinds.append(m.face_kind[old])
        names.append(m.face_name[old])
        if old in m.punctured:
            punct.append(f)
    return CombinatorialMap.from_permutations(alpha, phi, kinds, punct, names)


MAPS = [build_map(c) for c in (hass_scott(), n3_torus(), gen_pn(2), gen_pn(3, True))] + \
       [build_map(c) for c in census(6)[:3]]


@pytest.mark.parametrize("m", MAPS, ids=lambda m: f"darts{m.num_darts}")
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_canonical_form_ignores_labels(m, data):
    perm = data.draw(st.permutations(range(m.num_darts)))
    assert canonical_form(relabel(m, perm)) == canonical_form(m)


def test_map_counts(hs):
    m = build_map(hs)
    assert (m.V, m.E, m.F) == (3, 6, 5)
    assert m.euler_characteristic == 2
    assert all(has_quadrant_pattern(p) for p in m.quadrant_patterns())
    assert m.is_connected()
    assert sorted(m.d_faces()) == ["D0", "D1", "D2"]


def test_bad_permutations():
    with pytest.raises(MapError):
        CombinatorialMap.from_permutations([0, 1], [1, 0], ["A"])
    with pytest.raises(MapError):
        CombinatorialMap.from_permutations([1, 0], [0, 1], ["A"])


def test_distinct_classes_distinct_codes():
    codes = [canonical_form(build_map(c)) for c in census_upto(7)]
    assert len(set(codes)) == len(codes)


def test_canonical_configuration_fixed_point():
    # Census members are canonical before their punctures are planned.
    for c in census(6):
        bare = c.with_punctures(())
        assert canonical_configuration(bare) == bare
        assert configuration_from_map(build_map(bare)) == bare
        once = canonical_configuration(c)
        assert canonical_configuration(once) == once
        assert canonical_form(build_map(once)) == canonical_form(build_map(c))


def test_mirror(hs, torus):
    # Both N = 3 classes are mirror-symmetric.
    for c in (hs, torus):
        m = build_map(c)
        assert canonical_form(m.mirror()) == canonical_form(m)
        assert canonical_form(m, reflections=True) == canonical_form(m.mirror(), reflections=True)


def test_rings_through_capping_faces_only_unpunctured():
    m = build_map(gen_pn(2))
    assert map_rings_of_squares(m) == []
