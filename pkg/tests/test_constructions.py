import pytest

from wreathdesign.constructions import (
    OrthogonalArray,
    agl1,
    is_sharply_two_transitive,
    plane_gate,
    product_design,
    rs_orthogonal_array,
    sharp_two_design,
)
from wreathdesign.fields import is_supported
from wreathdesign.scheme import is_design
from wreathdesign.tabloids import make_simple, transitivity_index


def test_agl1():
    assert sorted(agl1(3)) == sorted(
        [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    )
    assert len(set(agl1(4))) == 12
    for q in (3, 4, 5, 7, 8, 9):
        assert is_sharply_two_transitive(agl1(q), q)
    assert not is_sharply_two_transitive(agl1(5)[:-1], 5)


def test_reed_solomon_strength():
    for r in range(2, 10):
        if not is_supported(r):
            continue
        for n in range(1, r + 2):
            for t in range(1, min(n, 3) + 1):
                oa = rs_orthogonal_array(n, r, t)
                assert len(oa.rows) == r**t and oa.index == 1
                assert oa.check_strength()


def test_bad_arrays():
    with pytest.raises(ValueError):
        rs_orthogonal_array(5, 3, 2)
    with pytest.raises(ValueError):
        rs_orthogonal_array(2, 6, 2)
    bad = OrthogonalArray(2, 2, 1, ((0, 0), (0, 1)))
    assert not bad.check_strength()


def test_product_design_index():
    oa = rs_orthogonal_array(3, 3, 1)
    Y = product_design(oa, agl1(3))
    assert (len(Y), transitivity_index(Y, make_simple(((1,), (2,)), 3, 3))) == (18, 2)
    Y = product_design(rs_orthogonal_array(3, 4, 2), agl1(3))
    sig = make_simple(((1, 1), (1,)), 3, 4)
    assert transitivity_index(Y, sig) == 1 and is_design(Y, sig)
    with pytest.raises(ValueError):
        product_design([(0, 1)], agl1(3), r=2)


def test_sharp_two_design():
    assert len(sharp_two_design(3)) == 24
    assert sharp_two_design(7) is None


def test_plane_gate():
    three = plane_gate(3)
    assert three["design"] == {"size": 24, "index": 1, "verified": True}
    five = plane_gate(5)
    assert five["design"] == {"size": 320, "index": 1, "verified": True}
    seven = plane_gate(7)
    assert seven["orthogonal_array"] == "unavailable" and seven["design"] is None
    assert seven["status"] == "construction unavailable"
