from fractions import Fraction

from oracles import all_types, fixed_tabloids_formula, wreath_character_wholegroup
from wreathdesign.arrow import arrow
from wreathdesign.characters import (
    ClassFunction,
    character_table,
    decompose,
    inner_product,
    multiplicity,
    permutation_character,
    theta,
    trivial_character,
    wreath_character_value,
    wreath_degree,
)
from wreathdesign.charlier import charlier_class_function
from wreathdesign.cyclic import Cyclotomic
from wreathdesign.errors import ConsistencyError, ScaleGuardError
from wreathdesign.sn_characters import sn_character
from wreathdesign.tabloids import TransitivityType, make_simple, tabloid_count
from wreathdesign.wreath import (
    class_representative,
    class_size,
    element,
    enumerate_classes,
    group_order,
    identity,
    identity_class,
    make_class_index,
    trivial_label,
)

GROUPS = [(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3), (3, 3), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (2, 4)]


def test_degrees():
    assert wreath_degree(trivial_label(4, 3), 4, 3) == 1
    assert wreath_degree(make_class_index({0: [1], 1: [1]}, 2), 2, 2) == 2
    for n, r in GROUPS:
        labels = enumerate_classes(n, r)
        assert sum(wreath_degree(l, n, r) ** 2 for l in labels) == group_order(n, r)
        for lam in labels:
            assert wreath_character_value(lam, identity_class(n, r)) == Cyclotomic.rational(r, wreath_degree(lam, n, r))


def test_small_tables():
    t = character_table(1, 2)
    assert [[v.rational_part() for v in row] for row in t.rows] == [[1, 1], [1, -1]]
    assert t.labels == (((1,), ()), ((), (1,)))
    # classes are listed with the two-cycle first, so compare by key
    t = character_table(2, 1)
    sign, swap, ident = ((1, 1),), ((2,),), ((1, 1),)
    assert t.value(sign, swap).rational_part() == -1
    assert t.value(sign, ident).rational_part() == 1
    assert t.value(((2,),), swap).rational_part() == 1
    assert sorted(character_table(2, 2).degrees()) == [1, 1, 1, 1, 2]


def test_trivial_row_is_one():
    for n, r in GROUPS:
        lam = trivial_label(n, r)
        assert all(wreath_character_value(lam, mu) == Cyclotomic.one(r) for mu in enumerate_classes(n, r))


def test_r1_matches_symmetric_group():
    for n in range(1, 6):
        for lam in enumerate_classes(n, 1):
            for mu in enumerate_classes(n, 1):
                assert wreath_character_value(lam, mu) == Cyclotomic.rational(1, sn_character(lam[0], mu[0]))


def test_matches_whole_group_induction():
    for n, r in [(2, 2), (3, 2), (2, 3), (1, 4), (2, 4)]:
        for lam in enumerate_classes(n, r):
            for mu in enumerate_classes(n, r):
                assert wreath_character_value(lam, mu) == wreath_character_wholegroup(lam, class_representative(mu))


def test_orthogonality_relations():
    for n, r in GROUPS:
        table = character_table(n, r)
        for i, a in enumerate(table.labels):
            for j, b in enumerate(table.labels):
                assert inner_product(table.row(a), table.row(b)) == Cyclotomic.rational(r, int(i == j))
        for mu in table.classes:
            for nu in table.classes:
                s = Cyclotomic.zero(r)
                for lam in table.labels:
                    s = s + table.value(lam, mu) * table.value(lam, nu).conjugate()
                want = Fraction(group_order(n, r), class_size(mu, n, r)) if mu == nu else 0
                assert s == Cyclotomic.rational(r, want)


def test_parallel_table_is_identical():
    assert character_table(3, 2, jobs=2) == character_table(3, 2)


def test_table_guard():
    try:
        character_table(6, 4)
    except ScaleGuardError:
        return
    raise AssertionError


def test_permutation_character_examples():
    face = make_simple(((1,), (2,)), 3, 2)
    xi = permutation_character(face)
    assert xi[identity_class(3, 2)].rational_part() == 6
    for n in range(2, 6):
        xi = permutation_character(TransitivityType(1, ((n - 1, 1),)))
        for mu in enumerate_classes(n, 1):
            assert xi[mu].rational_part() == mu[0].count(1)


def test_permutation_character_counting_formula():
    for n, r in [(2, 2), (3, 2), (2, 3), (3, 3), (2, 4), (2, 6), (4, 2)]:
        for sig in all_types(n, r):
            xi = permutation_character(sig)
            assert xi[identity_class(n, r)].rational_part() == tabloid_count(sig, n, r)
            for mu in enumerate_classes(n, r):
                assert xi[mu].rational_part() == fixed_tabloids_formula(sig, class_representative(mu))


def test_multiplicities():
    assert multiplicity(trivial_character(3, 2), trivial_label(3, 2)) == 1
    for n, r in [(2, 2), (3, 2), (2, 3)]:
        for sig in all_types(n, r):
            mult = decompose(permutation_character(sig))
            assert mult[trivial_label(n, r)] == 1
            assert sum(m * wreath_degree(l, n, r) for l, m in mult.items()) == tabloid_count(sig, n, r)
            for lam, m in mult.items():
                assert (m > 0) == arrow(sig, lam)


def test_multiplicity_golden_face():
    # the six faces of the cube: 1 + (two-dimensional) + ... frozen from the computation
    face = make_simple(((1,), (2,)), 3, 2)
    mult = {l: m for l, m in decompose(permutation_character(face)).items() if m}
    assert mult == {((3,), ()): 1, ((2, 1), ()): 1, ((2,), (1,)): 1}


def test_non_character_is_rejected():
    half = trivial_character(2, 2).scale(Fraction(1, 2))
    try:
        multiplicity(half, trivial_label(2, 2))
    except ConsistencyError:
        return
    raise AssertionError


def test_theta():
    assert theta(identity(3, 2)) == 3
    assert theta(element((1, 0), (0, 1), 2)) == 1
    assert theta(element((0, 0, 0), (1, 2, 0), 3)) == 0


def test_charlier_class_function():
    n, r = 3, 2
    assert charlier_class_function(0, n, r) == trivial_character(n, r)
    c1 = charlier_class_function(1, n, r)
    for mu in enumerate_classes(n, r):
        assert c1[mu].rational_part() == r * mu[0].count(1) - 1
    assert isinstance(c1, ClassFunction)
