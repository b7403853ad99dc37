import xml.etree.ElementTree as ET

import pytest

from impconf.export import to_dot, to_schematic_svg
from impconf.fileformat import parse_configuration, serialize_configuration

from conftest import census_upto


def test_dot_structure(pn):
    text = to_dot(pn)
    edges = [ln for ln in text.splitlines() if " -- " in ln]
    assert len(edges) == 2 * pn.N
    assert sum('kind="glued"' in ln for ln in edges) == pn.N
    # Every vertex appears in exactly four edge ends.
    ends = {}
    for ln in edges:
        a, b = ln.split("[")[0].replace(";", "").split(" -- ")
        for v in (a.strip(), b.strip()):
            ends[v] = ends.get(v, 0) + 1
    assert set(ends.values()) == {4}


def test_svg_parses(hs):
    root = ET.fromstring(to_schematic_svg(hs))
    assert root.tag.endswith("svg")


@pytest.mark.parametrize("c", census_upto(7), ids=lambda c: f"N{c.N}")
def test_census_round_trip(c):
    assert parse_configuration(serialize_configuration(c)) == c
