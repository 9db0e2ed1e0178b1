from fractions import Fraction as Q

import pytest

from dunkl.flatfilt import flat_filtration_check
from dunkl.operators import ReflDiffOperator, calogero_moser
from dunkl.poly import Polynomial
from dunkl.quasiinv import QuasiInvariantRing, cv_operator
from dunkl.roots import MultiplicityFunction, build_root_system, group_data


@pytest.fixture(scope="module")
def A1():
    rs = build_root_system("A", 1)
    return rs, group_data(rs)


def test_flat_filtration_a1(A1):
    rs, gd = A1
    c = MultiplicityFunction(rs, [1])
    rep = flat_filtration_check(rs, gd, c, n_max=6, degree_cap=3)
    assert rep.passed, [c for c in rep.checks if not c.passed][:3]
    by_name = dict(zip(rep.operator_ids, rep.flat_degrees))
    assert by_name["identity"] == 0
    assert by_name["calogero-moser"] == 0
    assert by_name["mult[2.0]"] == 2
    assert by_name["L_P[2.0]"] == 0


def test_flat_filtration_a2():
    rs = build_root_system("A", 2)
    gd = group_data(rs)
    c = MultiplicityFunction(rs, [1])
    rep = flat_filtration_check(rs, gd, c, n_max=5, degree_cap=2)
    assert rep.passed, [c for c in rep.checks if not c.passed][:3]


def test_ad_nilpotency_mechanism(A1):
    # ad(L_P) applied deg(q)+1 times kills multiplication by q: the
    # mechanism behind the iterated-adjoint construction
    rs, gd = A1
    c = MultiplicityFunction(rs, [1])
    lc = calogero_moser(rs, c)
    x = Polynomial.variable(1, 0)
    u = ReflDiffOperator.multiplication(rs, x**3)
    w = u
    for _ in range(4):
        w = lc.commutator(w)
    assert w.is_zero()
    w3 = u
    for _ in range(3):
        w3 = lc.commutator(w3)
    assert not w3.is_zero()
