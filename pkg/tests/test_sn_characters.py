from math import factorial

from oracles import sn_character_det
from wreathdesign.errors import DimensionError
from wreathdesign.partitions import conjugate, enumerate_partitions
from wreathdesign.sn_characters import hook_degree, sn_centralizer, sn_character, sn_sign


def test_small_values():
    assert sn_character((3,), (2, 1)) == 1
    assert sn_character((1, 1, 1), (3,)) == 1
    assert sn_character((2, 1), (1, 1, 1)) == 2
    assert sn_character((2, 1), (3,)) == -1
    assert sn_character((2, 1), (2, 1)) == 0


def test_hook_degrees():
    assert hook_degree((5,)) == 1
    assert hook_degree((2, 1)) == 2
    assert hook_degree((2, 2)) == 2
    assert hook_degree((3, 2)) == 5
    for k in range(1, 9):
        for mu in enumerate_partitions(k):
            assert hook_degree(mu) == sn_character(mu, (1,) * k)


def test_size_mismatch():
    try:
        sn_character((2,), (1,))
    except DimensionError:
        return
    raise AssertionError


def test_matches_determinantal_formula():
    for k in range(1, 8):
        for mu in enumerate_partitions(k):
            for rho in enumerate_partitions(k):
                assert sn_character(mu, rho) == sn_character_det(mu, rho)


def test_orthogonality():
    for k in range(1, 8):
        parts = enumerate_partitions(k)
        for mu in parts:
            for nu in parts:
                row = sum(factorial(k) // sn_centralizer(rho) * sn_character(mu, rho) * sn_character(nu, rho) for rho in parts)
                assert row == (factorial(k) if mu == nu else 0)
                col = sum(sn_character(lam, mu) * sn_character(lam, nu) for lam in parts)
                assert col == (sn_centralizer(mu) if mu == nu else 0)


def test_conjugation_twists_by_sign():
    for k in range(1, 8):
        for mu in enumerate_partitions(k):
            for rho in enumerate_partitions(k):
                assert sn_character(conjugate(mu), rho) == sn_sign(rho) * sn_character(mu, rho)
