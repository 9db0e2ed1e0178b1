from fractions import Fraction as Q
from math import factorial

import pytest

from dunkl.traces import (
    TraceValue,
    YoungDiagram,
    character,
    character_table_verified,
    class_size,
    f_polynomial,
    lattice_restriction_character,
    multiplicity_vector,
    partitions,
    s_set_constraints,
    trace_consistency_report,
    trace_of_idempotent,
    trace_of_permutation,
)


def test_young_diagram_data():
    tau = YoungDiagram((2, 1))
    assert sorted(tau.contents()) == [-1, 0, 1]
    assert tau.hook_product() == 3
    assert tau.dimension() == 2
    assert YoungDiagram((3,)).contents() == [0, 1, 2]


def test_dimensions_sum_of_squares():
    for n in range(1, 7):
        assert sum(YoungDiagram(lam).dimension() ** 2 for lam in partitions(n)) == factorial(n)


def test_character_trivial_and_sign():
    for n in range(2, 7):
        for mu in partitions(n):
            assert character(YoungDiagram((n,)), mu) == 1
            sign = (-1) ** (n - len(mu))
            assert character(YoungDiagram((1,) * n), mu) == sign


def test_character_21_on_3cycle():
    assert character(YoungDiagram((2, 1)), (3,)) == -1
    assert character(YoungDiagram((2, 1)), (1, 1, 1)) == 2
    assert character(YoungDiagram((2, 1)), (2, 1)) == 0


def test_mn_orthogonality_up_to_6():
    for n in range(2, 7):
        assert character_table_verified(n).passed


def test_f_polynomial_examples():
    # n=3, (3): (1+z)(1+2z) = 1 + 3z + 2z^2
    assert f_polynomial(YoungDiagram((3,))) == [Q(1), Q(3), Q(2)]
    # n=3, (2,1): 1 - z^2
    assert f_polynomial(YoungDiagram((2, 1))) == [Q(1), Q(0), Q(-1)]
    # n=2, (2): 1 + z
    assert f_polynomial(YoungDiagram((2,))) == [Q(1), Q(1)]


def test_f_polynomial_crosschecks_all_n6():
    for n in range(1, 7):
        for lam in partitions(n):
            f_polynomial(YoungDiagram(lam))  # internal assertions


def test_trace_of_permutation():
    t = trace_of_permutation(2, (2,))
    assert t.at(2, Q(1)) == Q(1, 2)
    t3 = trace_of_permutation(3, (3,))
    assert t3.at(3, Q(1)) == Q(1, 9)
    assert trace_of_permutation(3, (1, 1, 1)).at(3, Q(5)) == 1


def test_trace_of_idempotent_n2():
    # tau = (2): 1/2 (1 + u) Tr(1)
    t = trace_of_idempotent(YoungDiagram((2,)))
    assert t == TraceValue([Q(1, 2), Q(1, 2)])


def test_trace_consistency_symbolic():
    for n in range(2, 6):
        assert trace_consistency_report(n).passed


def test_multiplicity_examples():
    out = multiplicity_vector(2, Q(1, 2), 1)
    assert out["entries"][(2,)]["value"] == 1
    assert out["entries"][(1, 1)]["value"] == 0
    assert out["completeness"]

    out2 = multiplicity_vector(2, Q(3, 2), 3)
    assert out2["entries"][(2,)]["value"] == 2
    assert out2["entries"][(1, 1)]["value"] == 1
    assert out2["completeness"]
    assert out2["minimal_dim_v"] == 3


def test_multiplicity_large_c_regular_direction():
    # as |nc| grows the vector tends to dimV/n! * dim(tau) (regular rep)
    out = multiplicity_vector(3, Q(10**6), 6)
    for lam, e in out["entries"].items():
        assert abs(e["value"] - Q(6 * YoungDiagram(lam).dimension(), 6)) < Q(1, 100)


def test_s_set_constraints():
    v = s_set_constraints(3, Q(1, 3))
    assert v["integer_shape"] and v["claim1_nonnegativity"] and v["coprimality_flag"]
    v2 = s_set_constraints(3, Q(1, 2))
    assert not v2["integer_shape"]
    v3 = s_set_constraints(4, Q(1, 2))
    assert v3["integer_shape"] is True  # nc = 2, not divisible by 4
    assert v3["coprimality_flag"] is False  # gcd(2,4) = 2


def test_lattice_restriction_n2_r3():
    out = lattice_restriction_character(2, 3)
    by_class = dict(zip(out["classes"], out["character"]))
    assert by_class[(1, 1)] == 3 and by_class[(2,)] == 1
    assert out["decomposition"] == {(2,): 2, (1, 1): 1}
    assert out["proportional_to_r_pow_cycles"]


def test_lattice_restriction_n3_r2():
    out = lattice_restriction_character(3, 2)
    # classes in reverse-lex order: (3,), (2,1), (1,1,1)
    by_class = dict(zip(out["classes"], out["character"]))
    assert by_class[(1, 1, 1)] == 4
    assert by_class[(2, 1)] == 2
    assert by_class[(3,)] == 1
    assert out["proportional_to_r_pow_cycles"]


def test_lattice_restriction_r1_trivial():
    out = lattice_restriction_character(2, 1)
    assert out["decomposition"] == {(2,): 1}


def test_lattice_matches_multiplicity_chain():
    # n=2, c=3/2, dimV=3 gives (2,1), matching the decomposition of the
    # sum-zero lattice mod 3
    out = multiplicity_vector(2, Q(3, 2), 3)
    lat = lattice_restriction_character(2, 3)
    assert out["entries"][(2,)]["value"] == lat["decomposition"][(2,)]
    assert out["entries"][(1, 1)]["value"] == lat["decomposition"][(1, 1)]


def test_lattice_proportionality_grid():
    from math import gcd

    for n in (2, 3, 4):
        for r in (1, 2, 3, 4):
            out = lattice_restriction_character(n, r)
            # the (1/r) r^cycl identity is the coprime case of the exact
            # gcd closed form, which must hold everywhere
            assert out["matches_gcd_closed_form"], (n, r)
            assert out["proportional_to_r_pow_cycles"] == (gcd(n, r) == 1), (n, r)


def test_lattice_bound():
    with pytest.raises(ValueError):
        lattice_restriction_character(8, 10)
