import random
from fractions import Fraction as Q

import pytest

from dunkl.operators import (
    NonPolynomialOutput,
    ReflDiffOperator,
    RootFraction,
    calogero_moser,
    dual_pairing_polynomial,
    dunkl,
    dunkl_basis,
    euler_element,
    form_laplacian,
    squared_norm_x,
    squared_norm_y_operator,
)
from dunkl.poly import Polynomial, monomials_upto
from dunkl.roots import MultiplicityFunction, build_root_system, group_data


@pytest.fixture(scope="module")
def a1():
    return build_root_system("A", 1)


@pytest.fixture(scope="module")
def a2():
    return build_root_system("A", 2)


def x(rs, i=0):
    return Polynomial.variable(rs.rank, i)


def test_weyl_relation(a1):
    d = ReflDiffOperator.partial(a1, (1,))
    xm = ReflDiffOperator.multiplication(a1, x(a1))
    assert d.commutator(xm) == ReflDiffOperator.identity(a1)


def test_conjugation_by_reflection(a1):
    s = a1.reflections[0]
    sw = ReflDiffOperator.group(a1, s)
    xm = ReflDiffOperator.multiplication(a1, x(a1))
    conj = sw.compose(xm).compose(ReflDiffOperator.group(a1, a1.inverse(s)))
    assert conj == ReflDiffOperator.multiplication(a1, -x(a1))


def test_dunkl_a1_shape(a1):
    c = MultiplicityFunction(a1, [Q(1)])
    t = dunkl(a1, c, [1])
    # d - (c/x)(1 - s): three terms
    assert len(t.terms) == 3
    assert t.order() == 1
    assert t.weight() == -1


def test_dunkl_commutator_with_x_matches_defining_relation(a1):
    for cval in (Q(1), Q(1, 2), Q(3, 2)):
        c = MultiplicityFunction(a1, [cval])
        t = dunkl(a1, c, [1])
        xm = ReflDiffOperator.multiplication(a1, x(a1))
        got = t.commutator(xm)
        want = ReflDiffOperator.identity(a1) - ReflDiffOperator.group(
            a1, a1.reflections[0]
        ).scale(2 * cval)
        assert got == want


def test_dunkl_apply_values(a1):
    c = MultiplicityFunction(a1, [Q(1)])
    t = dunkl(a1, c, [1])
    assert t.apply(x(a1) ** 2) == 2 * x(a1)
    assert t.apply(x(a1)) == Polynomial.constant(1, -1)  # 1 - 2c = -1
    c_half = MultiplicityFunction(a1, [Q(1, 2)])
    t_half = dunkl(a1, c_half, [1])
    assert t_half.apply(x(a1)).is_zero()


def test_dunkl_c_zero_is_derivative(a2):
    c0 = MultiplicityFunction(a2, [0])
    t = dunkl(a2, c0, [1, 0])
    assert t == ReflDiffOperator.partial(a2, (1, 0))


def test_dunkl_linear_in_y(a2):
    c = MultiplicityFunction(a2, [Q(2, 3)])
    t1 = dunkl(a2, c, [1, 0])
    t2 = dunkl(a2, c, [0, 1])
    t12 = dunkl(a2, c, [1, 1])
    assert t1 + t2 == t12


def test_dunkl_commutativity_symbolic(a2):
    for cval in (Q(1), Q(2)):
        c = MultiplicityFunction(a2, [cval])
        t1 = dunkl(a2, c, [1, 0])
        t2 = dunkl(a2, c, [0, 1])
        assert t1.commutator(t2).is_zero()


@pytest.mark.parametrize("label,rank,cvals", [
    ("A", 3, [1]),
    ("B", 2, [1, 2]),
    ("G", 2, [1, 1]),
])
def test_dunkl_commutativity_on_polynomials(label, rank, cvals):
    rs = build_root_system(label, rank)
    c = MultiplicityFunction(rs, cvals)
    ts = dunkl_basis(rs, c)
    rng = random.Random(5)
    for e in monomials_upto(rs.rank, 4):
        f = Polynomial.monomial(e)
        i, j = 0, rs.rank - 1
        a = ts[i].apply(ts[j].apply(f))
        b = ts[j].apply(ts[i].apply(f))
        assert a == b


def test_calogero_moser_a1(a1):
    for cval in (Q(0), Q(1), Q(2)):
        c = MultiplicityFunction(a1, [cval])
        lc = calogero_moser(a1, c)
        want = ReflDiffOperator.partial(a1, (2,))
        if cval:
            want = want + ReflDiffOperator(
                a1,
                {
                    ((1,), a1.identity_element()): RootFraction(
                        a1, Polynomial.constant(1, -2 * cval), ((0, 1),)
                    )
                },
            )
        assert lc == want
    c1 = MultiplicityFunction(a1, [Q(1)])
    assert calogero_moser(a1, c1).apply(x(a1) ** 3).is_zero()


def test_calogero_moser_weight_order(a2):
    c = MultiplicityFunction(a2, [Q(1)])
    lc = calogero_moser(a2, c)
    assert lc.order() == 2
    assert lc.weight() == -2
    assert lc.weight() + lc.order() == 0
    assert lc.flat_degree() == 0


def test_calogero_moser_agrees_with_dunkl_squares_on_invariants(a2):
    gd = group_data(a2)
    c = MultiplicityFunction(a2, [Q(1)])
    lc = calogero_moser(a2, c)
    y2 = squared_norm_y_operator(a2, c)
    # W-invariant polynomials of low degree
    for f in [squared_norm_x(a2), squared_norm_x(a2) ** 2]:
        assert lc.apply(f) == y2.apply(f)


def test_apply_compose_agree(a2):
    c = MultiplicityFunction(a2, [Q(1)])
    t1 = dunkl(a2, c, [1, 0])
    lc = calogero_moser(a2, c)
    rng = random.Random(2)
    for _ in range(6):
        f = Polynomial(
            2, {(rng.randint(0, 3), rng.randint(0, 3)): Q(rng.randint(-3, 3)) for _ in range(3)}
        )
        lhs = lc.compose(t1).apply(f)
        rhs = lc.apply(t1.apply(f))
        if isinstance(lhs, NonPolynomialOutput):
            assert isinstance(rhs, NonPolynomialOutput)
            assert lhs.fraction == rhs.fraction
        else:
            assert lhs == rhs


def test_non_polynomial_output_flagged(a1):
    c = MultiplicityFunction(a1, [Q(1, 3)])
    t = dunkl(a1, c, [1])
    inv_op = ReflDiffOperator(
        a1,
        {((0,), a1.identity_element()): RootFraction(a1, Polynomial.one(1), ((0, 1),))},
    )
    out = inv_op.apply(x(a1))  # x/x = 1 stays polynomial
    assert out == Polynomial.one(1)
    out2 = inv_op.apply(x(a1) + Polynomial.one(1))
    assert isinstance(out2, NonPolynomialOutput)


def test_principal_symbol_multiplicative(a2):
    c = MultiplicityFunction(a2, [Q(1)])
    lc = calogero_moser(a2, c)
    prod = lc.compose(lc)
    assert prod.order() == lc.order() * 2
    assert prod.principal_symbol() == lc.principal_symbol() * lc.principal_symbol()


def test_flat_degree_examples(a1):
    d = ReflDiffOperator.partial(a1, (1,))
    assert d.flat_degree() == 0
    s1 = ReflDiffOperator(
        a1,
        {
            ((1,), a1.identity_element()): RootFraction(a1, x(a1)),
            ((0,), a1.identity_element()): RootFraction(a1, Polynomial.constant(1, -1)),
        },
    )
    assert s1.flat_degree() == 1
    c = MultiplicityFunction(a1, [Q(2)])
    assert calogero_moser(a1, c).flat_degree() == 0


def test_flat_degree_rejects_reflections(a1):
    c = MultiplicityFunction(a1, [Q(1)])
    t = dunkl(a1, c, [1])
    with pytest.raises(ValueError):
        t.flat_degree()


def test_euler_element_is_euler_plus_constant(a2):
    c = MultiplicityFunction(a2, [Q(1)])
    h = euler_element(a2, c)
    # h = eu + dim h/2 - (1/2) sum_{alpha in R} c_alpha, pure differential
    assert not h.has_reflection_terms()
    shift = Q(2, 2) - Q(6, 2)  # rank 2, six roots in R with c=1
    f = x(a2) ** 3
    assert h.apply(f) == f.scale(3 + shift)
    g = Polynomial.one(2)
    assert h.apply(g) == g.scale(shift)


def test_dual_pairing_on_squared_norm(a2):
    # x^2 transported by the invariant form gives the dual squared norm,
    # which must match the symbol of the form Laplacian
    p = dual_pairing_polynomial(a2, squared_norm_x(a2))
    lap = form_laplacian(a2)
    sym = lap.principal_symbol()
    shifted = p.extend_vars(4, offset=2)
    assert sym == shifted
