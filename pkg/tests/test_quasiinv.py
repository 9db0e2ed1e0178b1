from fractions import Fraction as Q

import pytest

from dunkl.operators import calogero_moser
from dunkl.poly import Polynomial
from dunkl.quasiinv import (
    QuasiInvariantRing,
    adjoint_report,
    bilinear_form,
    bilinear_report,
    closure_and_centralizer_checks,
    cv_operator,
    cv_operator_report,
    dual_symbol,
    felder_veselov_series,
    hilbert_compare,
    is_quasi_invariant,
    qc_basis,
    ring_closure_report,
)
from dunkl.roots import MultiplicityFunction, build_root_system, group_data


@pytest.fixture(scope="module")
def A1():
    rs = build_root_system("A", 1)
    return rs, group_data(rs)


@pytest.fixture(scope="module")
def A2():
    rs = build_root_system("A", 2)
    return rs, group_data(rs)


def x(rs, i=0):
    return Polynomial.variable(rs.rank, i)


def test_qc_dims_a1_c1(A1):
    rs, _ = A1
    c = MultiplicityFunction(rs, [1])
    dims = [len(qc_basis(rs, c, d)) for d in range(7)]
    assert dims == [1, 0, 1, 1, 1, 1, 1]


def test_qc_c0_full_space(A2):
    rs, _ = A2
    c = MultiplicityFunction(rs, [0])
    assert len(qc_basis(rs, c, 4)) == 5


def test_qc_dims_a2_c1(A2):
    rs, _ = A2
    c = MultiplicityFunction(rs, [1])
    dims = [len(qc_basis(rs, c, d)) for d in range(6)]
    assert dims == [1, 0, 1, 1, 3, 3]


def test_qc_rejects_rational_c(A1):
    rs, _ = A1
    with pytest.raises(ValueError):
        qc_basis(rs, MultiplicityFunction(rs, [Q(1, 2)]), 2)


def test_felder_veselov_a1(A1):
    rs, gd = A1
    c = MultiplicityFunction(rs, [1])
    # (1 + t^3)/(1 - t^2) = 1 + t^2 + t^3 + t^4 + t^5 + ...
    assert felder_veselov_series(rs, gd, c, 6) == [1, 0, 1, 1, 1, 1, 1]


def test_felder_veselov_a2_numerator(A2):
    rs, gd = A2
    c = MultiplicityFunction(rs, [1])
    series = felder_veselov_series(rs, gd, c, 10)
    # multiply by (1-t^2)(1-t^3) and compare with 1 + 2t^4 + 2t^5 + t^9
    prod = [Q(0)] * 11
    den = {0: Q(1), 2: Q(-1), 3: Q(-1), 5: Q(1)}
    for d in range(11):
        for k, v in den.items():
            if d - k >= 0:
                prod[d] += v * series[d - k]
    assert prod == [1, 0, 0, 0, 2, 2, 0, 0, 0, 1, 0]


def test_hilbert_compare(A1, A2):
    rs1, gd1 = A1
    for cv in (1, 2, 3):
        assert hilbert_compare(rs1, gd1, MultiplicityFunction(rs1, [cv]), 10).passed
    rs2, gd2 = A2
    assert hilbert_compare(rs2, gd2, MultiplicityFunction(rs2, [1]), 8).passed


def test_hilbert_compare_b2():
    rs = build_root_system("B", 2)
    gd = group_data(rs)
    assert hilbert_compare(rs, gd, MultiplicityFunction(rs, [1, 1]), 8).passed
    assert hilbert_compare(rs, gd, MultiplicityFunction(rs, [1, 2]), 8).passed


def test_lowest_sign_degree_a2(A2):
    rs, gd = A2
    c = MultiplicityFunction(rs, [1])
    # lowest degree where Q_c contains a sign-isotypic element is 9 = deg delta^3
    from dunkl.roots import discriminant

    delta3 = discriminant(rs) ** 3
    ring = QuasiInvariantRing(rs, gd, c, 9)
    assert ring.contains(delta3)
    sgn = gd.determinant_index()
    # no antiinvariant below degree 9: check degrees 3 and 6 explicitly
    for d in (3, 6):
        for f in ring.graded[d]:
            anti = sum(
                (
                    rs.coordinate_ring_action(w, f).scale(gd.char_value(sgn, w))
                    for w in gd.elements
                ),
                Polynomial.zero(2),
            )
            assert anti.is_zero()


def test_cv_operator_a1_x2_is_calogero_moser(A1):
    rs, _ = A1
    c = MultiplicityFunction(rs, [1])
    lp = cv_operator(rs, c, x(rs) ** 2)
    assert lp == calogero_moser(rs, c)


def test_cv_operator_a1_x3(A1):
    rs, _ = A1
    c = MultiplicityFunction(rs, [1])
    lp = cv_operator(rs, c, x(rs) ** 3)
    assert lp.order() == 3
    assert lp.principal_symbol() == dual_symbol(rs, x(rs) ** 3)
    assert lp.weight() + lp.order() == 0


def test_cv_operator_rejects_non_quasi_invariant(A1):
    rs, _ = A1
    c = MultiplicityFunction(rs, [1])
    with pytest.raises(ValueError):
        cv_operator(rs, c, x(rs))  # x is not 1-quasi-invariant


def test_cv_reports_a1(A1):
    rs, gd = A1
    c = MultiplicityFunction(rs, [1])
    ring = QuasiInvariantRing(rs, gd, c, 8)
    for d in range(1, 5):
        for p in ring.graded[d]:
            assert cv_operator_report(rs, ring, c, p).passed


def test_cv_invariant_P_commutes_with_lc(A2):
    rs, gd = A2
    c = MultiplicityFunction(rs, [1])
    from dunkl.operators import squared_norm_x

    lp = cv_operator(rs, c, squared_norm_x(rs))
    lc = calogero_moser(rs, c)
    assert lp.commutator(lc).is_zero()


def test_bilinear_values_a1(A1):
    rs, _ = A1
    c = MultiplicityFunction(rs, [1])
    one = Polynomial.one(1)
    assert bilinear_form(rs, c, one, one) == 1
    assert bilinear_form(rs, c, x(rs) ** 2, x(rs) ** 2) == -2
    assert bilinear_form(rs, c, x(rs) ** 2, x(rs) ** 3) == 0
    assert bilinear_form(rs, c, x(rs) ** 3, x(rs) ** 2) == 0


def test_bilinear_report_a1(A1):
    rs, gd = A1
    for cv in (1, 2):
        c = MultiplicityFunction(rs, [cv])
        ring = QuasiInvariantRing(rs, gd, c, 6)
        assert bilinear_report(rs, ring, c, 6).passed


def test_bilinear_report_a2(A2):
    rs, gd = A2
    c = MultiplicityFunction(rs, [1])
    ring = QuasiInvariantRing(rs, gd, c, 6)
    assert bilinear_report(rs, ring, c, 6).passed


def test_adjoint_a1(A1):
    rs, gd = A1
    c = MultiplicityFunction(rs, [1])
    ring = QuasiInvariantRing(rs, gd, c, 6)
    assert adjoint_report(rs, ring, c).passed


def test_closure_checks_a1(A1):
    rs, gd = A1
    c = MultiplicityFunction(rs, [1])
    rep = closure_and_centralizer_checks(rs, gd, c, 6, order_bound=3)
    assert rep.passed
    assert rep.details["centralizer_dims"] == [1, 0, 1, 1]


def test_closure_checks_a2(A2):
    rs, gd = A2
    c = MultiplicityFunction(rs, [1])
    rep = closure_and_centralizer_checks(rs, gd, c, 6, order_bound=2, commute_degree=3)
    assert rep.passed
    assert rep.details["centralizer_dims"] == [1, 0, 1]


def test_ring_closure(A2):
    rs, gd = A2
    c = MultiplicityFunction(rs, [1])
    ring = QuasiInvariantRing(rs, gd, c, 8)
    assert ring_closure_report(ring).passed


def test_quasi_invariance_predicate(A1):
    rs, _ = A1
    c = MultiplicityFunction(rs, [1])
    assert is_quasi_invariant(rs, c, x(rs) ** 2)
    assert is_quasi_invariant(rs, c, x(rs) ** 3)
    assert not is_quasi_invariant(rs, c, x(rs))
