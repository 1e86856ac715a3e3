from fractions import Fraction
from math import factorial

from oracles import rotation_subgroup, subset_battery
from wreathdesign.characters import decompose
from wreathdesign.charlier import (
    charlier,
    charlier_class_function,
    charlier_inner,
    charlier_orthogonality_check,
    design_code_bounds,
    distance,
    distance_distribution,
    fixed_point_counts,
    fixed_point_counts_enumerated,
    max_design_strength,
    min_nonzero_distance,
    poisson_moment,
    predicted_distance_vector,
    profile,
    stirling2,
    t_design_test,
    t_design_type,
    theta_moment,
)
from wreathdesign.constructions import agl1, product_design, rs_orthogonal_array
from wreathdesign.partitions import part
from wreathdesign.scheme import is_clique, is_design
from wreathdesign.tabloids import is_clique_direct, make_simple
from wreathdesign.wreath import all_elements, enumerate_classes, group_order, identity, multiply


def ninety_six():
    return product_design(rs_orthogonal_array(3, 4, 2), agl1(3))


def test_low_degree_polynomials():
    for a in [Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(5, 7)]:
        for x in range(-2, 7):
            assert charlier(0, a, x) == 1
            assert charlier(1, a, x) == x / a - 1
            assert charlier(2, a, x) == x * x / a**2 - (2 / a + 1 / a**2) * x + 1


def test_fixed_point_counts():
    assert fixed_point_counts(2, 2) == (5, 2, 1)
    for n in range(0, 5):
        for r in range(1, 4):
            w = fixed_point_counts(n, r)
            assert w == fixed_point_counts_enumerated(n, r)
            assert sum(w) == group_order(n, r) and w[n] == 1


def test_orthogonality():
    for n in range(1, 9):
        for r in (2, 3, 4):
            assert charlier_orthogonality_check(n, r)
            assert charlier_inner(n, r, 0, 1) == 0
            for k in range(n + 1):
                assert charlier_inner(n, r, k, k) > 0
    assert charlier_inner(4, 2, 1, 2) == 0


def test_moments():
    assert stirling2(3, 2) == 3
    assert [stirling2(4, i) for i in range(5)] == [0, 1, 7, 6, 1]
    assert poisson_moment(1, Fraction(2, 3)) == Fraction(2, 3)
    for n in range(1, 5):
        for r in range(1, 4):
            for k in range(n + 1):
                assert theta_moment(k, n, r) == poisson_moment(k, Fraction(1, r))
    # past k = n the identity may fail, and does here
    assert theta_moment(4, 3, 2) != poisson_moment(4, Fraction(1, 2))


def test_metric():
    W = list(all_elements(2, 2))
    for x in W:
        assert distance(x, x) == 0
        for y in W:
            assert distance(x, y) == distance(y, x)
            assert (distance(x, y) == 0) == (x == y)
            for z in W:
                assert distance(x, z) <= distance(x, y) + distance(y, z)
                assert distance(multiply(z, x), multiply(z, y)) == distance(x, y)


def test_distance_distribution_of_identity_and_group():
    for n, r in [(2, 2), (3, 2), (3, 3)]:
        e = distance_distribution([identity(n, r)])
        assert e.A == (1,) + (0,) * n
        assert e.Adual == tuple(charlier(k, Fraction(1, r), n) for k in range(n + 1))
        W = distance_distribution(all_elements(n, r))
        w = fixed_point_counts(n, r)
        assert W.A == tuple(Fraction(w[n - i]) for i in range(n + 1))
        assert W.Adual[0] == group_order(n, r)
        assert all(v == 0 for v in W.Adual[1:])


def test_invariants_on_battery():
    for Y in subset_battery(3, 2, seed=21, count=40):
        dist = distance_distribution(Y)
        assert dist.A[0] == 1 and sum(dist.A) == len(Y) and dist.Adual[0] == len(Y)


def test_design_test_matches_scheme():
    for n, r, count in [(3, 2, 40), (2, 3, 20), (4, 2, 25), (3, 3, 15)]:
        for Y in subset_battery(n, r, seed=7, count=count):
            dist = distance_distribution(Y)
            for t in range(1, n + 1):
                truth = is_design(Y, t_design_type(n, t, r))
                verdict = t_design_test(Y, t, dist)
                assert verdict.is_design == truth
                if truth:
                    assert all(dist.Adual[k] == 0 for k in range(1, t + 1))
                if 2 * t <= n and verdict.dual_zeros:
                    assert truth


def test_ninety_six_profile():
    Y = ninety_six()
    p = profile(Y)
    assert (p["t"], p["d"], p["sharp"], p["size"]) == (2, 2, True, 96)
    assert p["A"] == [1, 0, 21, 74]
    assert p["Adual"][1] == p["Adual"][2] == 0
    assert predicted_distance_vector(3, 4, 2, 96) == p["A"]
    assert t_design_test(Y, 2).method == "scheme"


def test_prediction_for_whole_group():
    for n, r in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        w = fixed_point_counts(n, r)
        A = predicted_distance_vector(n, r, n, group_order(n, r))
        assert [A[n - i] for i in range(n + 1)] == list(w)


def test_prediction_when_hypothesis_holds():
    for n, r in [(3, 2), (2, 3), (4, 2)]:
        for Y in subset_battery(n, r, seed=13, count=25):
            t = max_design_strength(Y)
            if t and min_nonzero_distance(Y) >= n - t:
                assert predicted_distance_vector(n, r, t, len(Y)) == list(distance_distribution(Y).A)


def test_code_three_ways():
    for n, r in [(3, 2), (2, 3)]:
        for Y in subset_battery(n, r, seed=17, count=30):
            m = min_nonzero_distance(Y)
            for d in range(1, n + 1):
                sig = make_simple(((1,) * (n - d + 1), (d - 1,) if d > 1 else ()), n, r)
                assert is_clique(Y, sig) == is_clique_direct(Y, sig) == (m >= d)


def test_edge_cases():
    single = [identity(3, 2)]
    assert min_nonzero_distance(single) == 4 and max_design_strength(single) == 0
    assert profile(single)["singleton"]
    W = list(all_elements(3, 2))
    assert max_design_strength(W) == 3 and min_nonzero_distance(W) == 1
    assert max_design_strength(rotation_subgroup()) == 2


def test_bounds():
    assert design_code_bounds(3, 4, 2, 2) == {"lower": 96, "upper": 96, "equality_case": True}
    assert design_code_bounds(5, 3, 0, 1)["lower"] == 1
    for n in range(1, 6):
        for d in range(1, n + 1):
            assert design_code_bounds(n, 1, 0, d)["upper"] == factorial(n) // factorial(d - 1)


def test_charlier_class_function_multiplicities():
    for n in range(1, 5):
        for r in range(1, 4):
            for k in range(n // 2 + 1):
                mult = decompose(charlier_class_function(k, n, r))
                support = {lam for lam, m in mult.items() if m}
                assert all(m >= 0 for m in mult.values())
                want = {lam for lam in enumerate_classes(n, r) if part(lam[0], 1) == n - k}
                assert support == want
