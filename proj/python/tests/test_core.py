import math

import pytest

import sphaera


def test_f16_special_constants():
    p = sphaera.make_pentagon("f16-special", 16)
    assert math.isclose(math.cos(p.angles[3]), 2 ** -0.25, abs_tol=1e-12)
    assert math.isclose(math.cos(p.a), math.sqrt(math.sqrt(2) - 1), abs_tol=1e-12)
    assert max(abs(r) for r in p.residuals()) < 1e-9


def test_earthmap_census_and_verify():
    t = sphaera.generate("earthmap", m=5)
    assert t.census() == {"αδε": 20, "β²γ": 10, "γ⁵": 2}
    p = sphaera.make_pentagon("earthmap", 20, sphaera.parse_angle("0.8pi"))
    report = sphaera.verify(t, p)
    assert report["pass"]
    assert abs(report["area_defect"]) < 1e-8


def test_tiling_json_round_trip():
    t = sphaera.generate("flip", m=5)
    text = t.to_json()
    back = sphaera.Tiling.from_json(text)
    assert back.to_json() == text
    assert sphaera.is_isomorphic(t, back)


def test_obj_triangle_count():
    t = sphaera.generate("earthmap", m=5)
    p = sphaera.make_pentagon("earthmap", 20, math.pi)
    obj = sphaera.to_obj(t, p)
    assert sum(1 for line in obj.splitlines() if line.startswith("f ")) == 100


def test_table3_counts_k2():
    assert sphaera.table3_search_counts(2) == [3, 1, 1, 1, 2, 2, 1, 1]
    assert [sphaera.count_table3(2, r) for r in range(1, 9)] == [3, 1, 1, 1, 2, 2, 1, 1]


def test_avc_f20():
    names = sphaera.enumerate_vertices("table3", 20)
    assert "βδε" in names and "γ⁵" in names


def test_bad_parameter_raises():
    with pytest.raises(ValueError):
        sphaera.make_pentagon("tetra-sub", 12, 0.3 * math.pi)
    with pytest.raises(ValueError):
        sphaera.make_pentagon("no-such-family", 12, 0.0)
