import pytest

from impconf.fileformat import parse_configuration
from impconf.model import Configuration, ConfigurationError, Polygon, id_key, validate_definition

from conftest import GOLDEN

HS = "A0 A 3; B0 B 6; glue A0.0 B0.0; glue A0.1 B0.2; glue A0.2 B0.4"


def codes(text):
    return validate_definition(parse_configuration(text)).codes()


def test_hass_scott_no_findings():
    assert validate_definition(parse_configuration(HS)).findings == ()


def test_id_key_natural_order():
    assert sorted(["B10", "B2", "A1", "B1"], key=id_key) == ["A1", "B1", "B2", "B10"]


def test_polygon_checks():
    with pytest.raises(ConfigurationError):
        Polygon("X", "C", 3)
    assert Polygon("B0", "B", 6).is_active(4)
    assert not Polygon("B0", "B", 6).is_active(3)


def test_ring4_rejected():
    c = parse_configuration((GOLDEN / "ring4.cfg").read_text())
    assert "ring-of-squares" in validate_definition(c).codes()


@pytest.mark.parametrize("text, code", [
    ("A0 A 3; B0 B 6; glue A0.0 B0.0; glue A0.1 B0.2", "glue-missing"),
    ("A0 A 3; A1 A 3; B0 B 6; B1 B 6; glue A0.0 B0.0; glue A0.1 B0.2; glue A0.2 B0.4;"
     " glue A1.0 B1.0; glue A1.1 B1.2; glue A1.2 B1.4", "disconnected"),
    ("A0 A 3; B0 B 8", "b-corner-total"),
    ("A0 A 3; B0 B 4; B1 B 2", "b-sides"),
    ("A0 A 4; A1 A 4; B0 B 16", "q-mismatch"),
    ("A0 A 9; B0 B 6; B1 B 6; B2 B 6", "p-below-range"),
    ("A0 A 4; B0 B 4; B1 B 4", "no-triangle"),
    (HS + "; puncture D7", "puncture-unknown"),
])
def test_error_codes(text, code):
    assert code in codes(text)


def test_small_n():
    c = Configuration((Polygon("A0", "A", 2), Polygon("B0", "B", 4)), ())
    found = validate_definition(c).codes()
    assert "n-too-small" in found and "a-sides" in found


def test_p_above_range():
    c = Configuration((Polygon("A0", "A", 3), Polygon("A1", "A", 2), Polygon("B0", "B", 10)), ())
    assert "p-above-range" in validate_definition(c).codes()


def test_report_text_lists_codes():
    report = validate_definition(parse_configuration("A0 A 3; B0 B 8"))
    assert not report.ok
    assert "b-corner-total" in str(report)
