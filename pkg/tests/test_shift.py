from fractions import Fraction as Q

import pytest

from dunkl.operators import ReflDiffOperator, calogero_moser, squared_norm_x
from dunkl.poly import Polynomial
from dunkl.quasiinv import QuasiInvariantRing, cv_operator
from dunkl.roots import MultiplicityFunction, build_root_system, group_data
from dunkl.shift import (
    baker_akhiezer,
    bispectral_weight_check,
    degree_identity_check,
    double_quasiinvariance_check,
    eigenfunction_check,
    flip,
    flip_symmetry_check,
    kernel_of_operator,
    shift_operator,
    shift_report,
)


@pytest.fixture(scope="module")
def A1():
    return build_root_system("A", 1)


@pytest.fixture(scope="module")
def A2():
    return build_root_system("A", 2)


def test_shift_c0_is_identity(A1):
    rs = A1
    c0 = MultiplicityFunction(rs, [0])
    assert shift_operator(rs, c0) == ReflDiffOperator.identity(rs)


def test_shift_a1_c1_closed_form(A1):
    rs = A1
    c = MultiplicityFunction(rs, [1])
    s = shift_operator(rs, c)
    x = Polynomial.variable(1, 0)
    want = ReflDiffOperator(
        rs,
        {
            ((1,), rs.identity_element()): __import__("dunkl.operators", fromlist=["RootFraction"]).RootFraction(rs, x),
            ((0,), rs.identity_element()): __import__("dunkl.operators", fromlist=["RootFraction"]).RootFraction(rs, Polynomial.constant(1, -1)),
        },
    )
    assert s == want
    out = s.apply(Polynomial.one(1))
    assert out == Polynomial.constant(1, -1)


@pytest.mark.parametrize("label,rank,cvals", [
    ("A", 1, [1]), ("A", 1, [2]), ("A", 1, [3]),
    ("A", 2, [1]),
    ("B", 2, [1, 1]),
])
def test_shift_reports(label, rank, cvals):
    rs = build_root_system(label, rank)
    rep = shift_report(rs, MultiplicityFunction(rs, cvals))
    assert rep.passed, rep.witness


def test_baker_akhiezer_a1(A1):
    rs = A1
    c = MultiplicityFunction(rs, [1])
    kern = baker_akhiezer(rs, c)
    x = Polynomial.variable(2, 0)
    k = Polynomial.variable(2, 1)
    assert kern.phi == k * x - Polynomial.one(2)
    assert kern.phi_at_origin() == -1


def test_baker_akhiezer_c0(A1):
    rs = A1
    kern = baker_akhiezer(rs, MultiplicityFunction(rs, [0]))
    assert kern.phi == Polynomial.one(2)


def test_eigenfunction_a1(A1):
    rs = A1
    c = MultiplicityFunction(rs, [1])
    kern = baker_akhiezer(rs, c)
    x = Polynomial.variable(1, 0)
    rep = eigenfunction_check(rs, c, x**2, kern)
    assert rep.passed, rep.witness
    rep3 = eigenfunction_check(rs, c, x**3, kern)
    assert rep3.passed, rep3.witness


def test_eigenfunction_a2_invariant(A2):
    rs = A2
    c = MultiplicityFunction(rs, [1])
    kern = baker_akhiezer(rs, c)
    rep = eigenfunction_check(rs, c, squared_norm_x(rs), kern)
    assert rep.passed, rep.witness


def test_double_quasiinvariance(A1, A2):
    c1 = MultiplicityFunction(A1, [1])
    assert double_quasiinvariance_check(A1, c1, baker_akhiezer(A1, c1)).passed
    c2 = MultiplicityFunction(A2, [1])
    assert double_quasiinvariance_check(A2, c2, baker_akhiezer(A2, c2)).passed


def test_double_quasiinvariance_a1_c2(A1):
    c = MultiplicityFunction(A1, [2])
    assert double_quasiinvariance_check(A1, c, baker_akhiezer(A1, c)).passed


def test_kernel_map_values_a1(A1):
    rs = A1
    c = MultiplicityFunction(rs, [1])
    kern = baker_akhiezer(rs, c)
    x2 = Polynomial.variable(1, 0) ** 2
    # K(identity) = Phi
    assert kernel_of_operator(rs, ReflDiffOperator.identity(rs), kern) == kern.phi
    # K(mult by x^2) = x^2 Phi
    got = kernel_of_operator(rs, ReflDiffOperator.multiplication(rs, x2), kern)
    assert got == x2.extend_vars(2) * kern.phi
    # K(L_{x^2}) = k^2 Phi
    lp = cv_operator(rs, c, x2)
    got2 = kernel_of_operator(rs, lp, kern)
    k = Polynomial.variable(2, 1)
    assert got2 == k**2 * kern.phi


def test_kernel_module_identity(A1):
    rs = A1
    c = MultiplicityFunction(rs, [1])
    kern = baker_akhiezer(rs, c)
    x = Polynomial.variable(1, 0)
    u = ReflDiffOperator.multiplication(rs, x**2)
    lp = cv_operator(rs, c, x**3)
    k_var = Polynomial.variable(2, 1)
    lhs = kernel_of_operator(rs, u.compose(lp), kern)
    rhs = k_var**3 * kernel_of_operator(rs, u, kern)
    assert lhs == rhs


def test_degree_identity(A1):
    rs = A1
    c = MultiplicityFunction(rs, [1])
    kern = baker_akhiezer(rs, c)
    x = Polynomial.variable(1, 0)
    rep = degree_identity_check(rs, ReflDiffOperator.identity(rs), kern)
    assert rep.passed and rep.details["deg_jump"] == 0
    rep2 = degree_identity_check(rs, ReflDiffOperator.multiplication(rs, x**2), kern)
    assert rep2.passed and rep2.details["deg_jump"] == 2
    rep3 = degree_identity_check(rs, cv_operator(rs, c, x**2), kern)
    assert rep3.passed and rep3.details["deg_jump"] == 0


def test_flip_involution_a2(A2):
    rs = A2
    f = Polynomial.variable(4, 0) * Polynomial.variable(4, 3) ** 2
    assert flip(rs, flip(rs, f)) == f


def test_flip_symmetry(A1):
    rs = A1
    c = MultiplicityFunction(rs, [1])
    gd = group_data(rs)
    kern = baker_akhiezer(rs, c)
    ring = QuasiInvariantRing(rs, gd, c, 3)
    for d in range(4):
        for p in ring.graded[d]:
            rep = flip_symmetry_check(rs, c, kern, p)
            assert rep.passed, (d, rep.witness)


def test_bispectral_weight(A1, A2):
    for rs, cvals in ((A1, [2]), (A2, [1])):
        c = MultiplicityFunction(rs, cvals)
        assert bispectral_weight_check(baker_akhiezer(rs, c)).passed
