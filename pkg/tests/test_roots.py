import random
from fractions import Fraction as Q

import pytest

from dunkl import linalg
from dunkl.poly import Polynomial
from dunkl.roots import (
    GroupSizeError,
    MultiplicityFunction,
    UnsupportedRootSystem,
    build_root_system,
    discriminant,
    group_data,
    invariant_dimension_bruteforce,
    kappa_scalar,
    molien_series,
)

EXPECTED_ORDERS = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("B", 2): 8, ("B", 3): 48, ("D", 4): 192, ("G", 2): 12}


@pytest.fixture(scope="module")
def a2():
    rs = build_root_system("A", 2)
    return rs, group_data(rs)


@pytest.fixture(scope="module")
def b2():
    rs = build_root_system("B", 2)
    return rs, group_data(rs)


def test_unsupported_labels_rejected():
    with pytest.raises(UnsupportedRootSystem):
        build_root_system("H", 3)
    with pytest.raises(UnsupportedRootSystem):
        build_root_system("E", 6)


@pytest.mark.parametrize("label,rank", sorted(EXPECTED_ORDERS))
def test_group_orders(label, rank):
    rs = build_root_system(label, rank)
    gd = group_data(rs)
    assert gd.order == EXPECTED_ORDERS[(label, rank)]


def test_a1_counts():
    rs = build_root_system("A", 1)
    assert len(rs.positive_roots) == 1
    assert group_data(rs).order == 2


def test_a2_counts(a2):
    rs, gd = a2
    assert len(rs.positive_roots) == 3
    assert len(gd.classes) == 3
    assert sorted(gd.dim(t) for t in range(3)) == [1, 1, 2]


def test_b2_counts(b2):
    rs, gd = b2
    assert len(rs.positive_roots) == 4
    assert [len(o) for o in rs.orbits] == [2, 2]
    assert len(gd.classes) == 5
    assert sorted(gd.dim(t) for t in range(5)) == [1, 1, 1, 1, 2]


def test_size_bound():
    with pytest.raises(GroupSizeError):
        group_data(build_root_system("A", 3), max_order=10)


def test_a1_character_table():
    gd = group_data(build_root_system("A", 1))
    assert sorted(gd.character_table) == [[1, -1], [1, 1]]
    assert gd.character_table[0] == [1, 1]  # trivial row first


def test_reflection_conjugation(a2):
    rs, gd = a2
    for w in gd.elements:
        for i, s in enumerate(rs.reflections):
            j, _sign = rs.root_image(w, i)
            conj = rs.multiply(rs.multiply(w, s), rs.inverse(w))
            assert conj == rs.reflections[j]


def test_molien_a2_trivial(a2):
    rs, gd = a2
    triv = gd.trivial_index()
    # 1/((1-t^2)(1-t^3))
    assert molien_series(rs, gd, triv, 6) == [Q(1), Q(0), Q(1), Q(1), Q(1), Q(1), Q(2)]


def test_molien_a2_sign(a2):
    rs, gd = a2
    sgn = gd.determinant_index()
    coeffs = molien_series(rs, gd, sgn, 5)
    assert coeffs == [Q(0), Q(0), Q(0), Q(1), Q(0), Q(1)]


def test_molien_a1_sign():
    rs = build_root_system("A", 1)
    gd = group_data(rs)
    sgn = gd.determinant_index()
    assert molien_series(rs, gd, sgn, 5) == [Q(0), Q(1), Q(0), Q(1), Q(0), Q(1)]


def test_molien_matches_projector_rank(a2):
    rs, gd = a2
    for tau in range(len(gd.character_table)):
        series = molien_series(rs, gd, tau, 5)
        for d in range(6):
            assert series[d] == invariant_dimension_bruteforce(rs, gd, tau, d)


def test_discriminant_a1():
    rs = build_root_system("A", 1)
    delta = discriminant(rs)
    assert delta == rs.root_polynomial(0)
    assert delta.degree() == 1


def test_discriminant_a2_alternates(a2):
    rs, gd = a2
    delta = discriminant(rs)
    assert delta.degree() == 3
    for s in rs.reflections:
        assert rs.coordinate_ring_action(s, delta) == -delta


def test_discriminant_b2_eps_weighted(b2):
    rs, gd = b2
    # character that is -1 exactly on long-root reflections
    names = rs.orbit_names()
    long_orbit = names.index("long")
    target = None
    for row in gd.linear_characters:
        signs = [row[gd.reflection_class(i)] for i in range(len(rs.positive_roots))]
        if all(
            (signs[i] == -1) == (rs.orbit_of_root(i) == long_orbit)
            for i in range(len(rs.positive_roots))
        ):
            target = signs
    assert target is not None
    d = discriminant(rs, variant="eps-weighted", sign_values=target)
    expected = Polynomial.one(2)
    for i in rs.orbits[long_orbit]:
        expected = expected * rs.root_polynomial(i)
    assert d == expected
    assert d.degree() == 2


def test_c_weighted_discriminant_rejects_fractions(b2):
    rs, _ = b2
    c = MultiplicityFunction(rs, [Q(1, 2), 1])
    with pytest.raises(ValueError):
        discriminant(rs, c, variant="c-weighted")


def test_kappa_values(a2):
    rs, gd = a2
    c = MultiplicityFunction(rs, [1])
    triv = gd.trivial_index()
    assert kappa_scalar(rs, gd, c, triv) == 0
    std = next(t for t in range(3) if gd.dim(t) == 2)
    assert kappa_scalar(rs, gd, c, std) == 3
    sgn = gd.determinant_index()
    assert kappa_scalar(rs, gd, c, sgn) == 6


def test_kappa_a1_sign():
    rs = build_root_system("A", 1)
    gd = group_data(rs)
    c = MultiplicityFunction(rs, [Q(5, 7)])
    assert kappa_scalar(rs, gd, c, gd.determinant_index()) == Q(10, 7)


def test_kappa_scale_invariance(b2):
    # kappa depends only on characters and orbit values, not root lengths;
    # recompute with the same data but a rescaled-root system surrogate
    rs, gd = b2
    c = MultiplicityFunction(rs, [Q(1), Q(2)])
    vals = [kappa_scalar(rs, gd, c, t) for t in range(len(gd.character_table))]
    assert vals == [
        sum(
            c.of_root(i) * (1 - Q(gd.character_table[t][gd.reflection_class(i)], gd.dim(t)))
            for i in range(4)
        )
        for t in range(len(gd.character_table))
    ]


def test_irrep_matrices_a2(a2):
    rs, gd = a2
    std = next(t for t in range(3) if gd.dim(t) == 2)
    reps = gd.irrep_matrices(std)
    index = gd.index_of
    rng = random.Random(1)
    for _ in range(12):
        w1 = gd.elements[rng.randrange(gd.order)]
        w2 = gd.elements[rng.randrange(gd.order)]
        prod = rs.multiply(w1, w2)
        assert linalg.mat_mul(reps[index[w1]], reps[index[w2]]) == reps[index[prod]]


def test_irrep_matrices_b2_all(b2):
    rs, gd = b2
    for tau in range(len(gd.character_table)):
        reps = gd.irrep_matrices(tau)
        for ci, cls in enumerate(gd.classes):
            m = reps[cls[0]]
            assert sum(m[i][i] for i in range(len(m))) == gd.character_table[tau][ci]


def test_character_table_seed_stability(b2):
    rs, gd = b2
    gd2 = group_data(rs, seed=123)
    assert gd.character_table == gd2.character_table
