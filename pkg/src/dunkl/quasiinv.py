"""The quasi-invariant ring Q_c, its Hilbert series, the iterated-adjoint
operators L_P, and the bilinear pairing (f, g)_c = (L_f g)(0).

Q_c is computed degreewise: the degree-d piece is the joint kernel of
the divisibility constraints  alpha^(2 c_alpha + 1) | s_alpha f - f,
one per positive root, realized as exact linear maps on the monomial
space.  Only nonnegative integer multiplicities are accepted here.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import factorial

from . import linalg
from .cherednik import CheckReport, _invariant_basis
from .operators import ReflDiffOperator, RootFraction, calogero_moser
from .poly import (
    Polynomial,
    divide_by_linear_power,
    graded_nullspace,
    monomials,
    taylor_coefficients_along,
)
from .roots import (
    GroupData,
    MultiplicityFunction,
    RootSystem,
    kappa_scalar,
    molien_series,
)


def _require_integral(c: MultiplicityFunction):
    if not c.is_nonnegative_integer():
        raise ValueError(
            "quasi-invariants are defined for nonnegative integer multiplicities; "
            f"got {c.key()}"
        )


def qc_constraints(rs: RootSystem, c: MultiplicityFunction):
    """One linear map per positive root: f -> the low-order Taylor
    coefficients of s_alpha f - f in the alpha-direction, packed into a
    single polynomial with a tag variable marking the order.  The map is
    linear and vanishes exactly on alpha^(2c+1) | s_alpha f - f."""
    maps = []
    for i in range(len(rs.positive_roots)):
        ca = int(c.of_root(i))
        if ca == 0:
            continue
        root = rs.root_polynomial(i)
        s = rs.reflections[i]
        power = 2 * ca + 1

        def constraint(f, s=s, root=root, power=power):
            diff = rs.coordinate_ring_action(s, f) - f
            coeffs = taylor_coefficients_along(diff, root, power)
            out = Polynomial.zero(rs.rank + 1)
            for order, r in enumerate(coeffs):
                if not r.is_zero():
                    out = out + r.extend_vars(rs.rank + 1) * Polynomial.variable(
                        rs.rank + 1, rs.rank, order
                    )
            return out

        maps.append(constraint)
    return maps


def qc_basis(rs: RootSystem, c: MultiplicityFunction, d: int) -> list[Polynomial]:
    """Exact basis of the degree-d piece of Q_c."""
    _require_integral(c)
    if d < 0:
        return []
    return graded_nullspace(rs.rank, d, qc_constraints(rs, c))


def is_quasi_invariant(rs: RootSystem, c: MultiplicityFunction, f: Polynomial) -> bool:
    _require_integral(c)
    for i in range(len(rs.positive_roots)):
        ca = int(c.of_root(i))
        if ca == 0:
            continue
        diff = rs.coordinate_ring_action(rs.reflections[i], f) - f
        _, w = divide_by_linear_power(diff, rs.root_polynomial(i), 2 * ca + 1)
        if w is not None:
            return False
    return True


class QuasiInvariantRing:
    """Graded basis of Q_c up to a degree bound, with membership tests."""

    def __init__(self, rs: RootSystem, gd: GroupData, c: MultiplicityFunction, n_max: int):
        _require_integral(c)
        self.rs, self.gd, self.c, self.n_max = rs, gd, c, n_max
        self.graded: list[list[Polynomial]] = [qc_basis(rs, c, d) for d in range(n_max + 1)]

    def dims(self) -> list[int]:
        return [len(b) for b in self.graded]

    def contains(self, f: Polynomial) -> bool:
        """Exact membership via the graded spans."""
        if f.is_zero():
            return True
        for d, part in f.graded_parts().items():
            if d > self.n_max:
                raise ValueError(f"degree {d} beyond the computed bound {self.n_max}")
            basis = self.graded[d]
            if not basis:
                return False
            mono = monomials(self.rs.rank, d)
            rows = [[b.terms.get(e, Q(0)) for b in basis] + [part.terms.get(e, Q(0))] for e in mono]
            bare = [r[:-1] for r in rows]
            if linalg.rank(rows) != linalg.rank(bare):
                return False
        return True

    def homogeneous_elements(self, d: int) -> list[Polynomial]:
        return self.graded[d]


def felder_veselov_series(
    rs: RootSystem, gd: GroupData, c: MultiplicityFunction, n_max: int
) -> list[Q]:
    """Closed-form Poincare series of Q_c:
    sum_tau dim(tau) t^{kappa_c(tau)} chi_tau(t), truncated at t^N."""
    _require_integral(c)
    out = [Q(0)] * (n_max + 1)
    for tau in range(len(gd.character_table)):
        kappa = kappa_scalar(rs, gd, c, tau)
        assert kappa.denominator == 1 and kappa >= 0
        shift = int(kappa)
        if shift > n_max:
            continue
        chi = molien_series(rs, gd, tau, n_max - shift)
        dim = gd.dim(tau)
        for d, coeff in enumerate(chi):
            out[d + shift] += dim * coeff
    return out


def hilbert_compare(
    rs: RootSystem, gd: GroupData, c: MultiplicityFunction, n_max: int
) -> CheckReport:
    """Degreewise dim Q_c against the closed form, exact."""
    closed = felder_veselov_series(rs, gd, c, n_max)
    computed = [len(qc_basis(rs, c, d)) for d in range(n_max + 1)]
    ok = all(Q(a) == b for a, b in zip(computed, closed))
    witness = None
    if not ok:
        d = next(i for i in range(n_max + 1) if Q(computed[i]) != closed[i])
        witness = f"degree {d}: computed {computed[d]}, closed form {closed[d]}"
    return CheckReport(
        "hilbert-series",
        ok,
        details={"computed": computed, "closed_form": [str(x) for x in closed]},
        witness=witness,
    )


def cv_operator(rs: RootSystem, c: MultiplicityFunction, p: Polynomial) -> ReflDiffOperator:
    """L_P = (ad L_c)^k (P) / (2^k k!) for homogeneous P in Q_c of degree k.

    The output is a pure differential operator of order k with principal
    symbol P (transported to the dual variables by the invariant form).
    """
    _require_integral(c)
    if not p.is_homogeneous() or p.is_zero():
        raise ValueError("P must be nonzero homogeneous")
    if not is_quasi_invariant(rs, c, p):
        raise ValueError("P is not quasi-invariant for this multiplicity")
    k = p.degree()
    if k == 0:
        return ReflDiffOperator.identity(rs).scale(p.constant_term())
    lc = calogero_moser(rs, c)
    u = ReflDiffOperator.multiplication(rs, p)
    for _ in range(k):
        u = lc.commutator(u)
    u = u.scale(Q(1, 2**k * factorial(k)))
    if u.has_reflection_terms():
        raise RuntimeError("iterated adjoint produced reflection terms")
    return u


def dual_symbol(rs: RootSystem, p: Polynomial) -> Polynomial:
    """P as a polynomial in the symbol variables, P(B^{-1} xi), living in
    the (x, xi) variable space used by principal_symbol."""
    binv = [list(row) for row in rs._form_inv]
    transported = p.compose_linear(binv)
    return transported.extend_vars(2 * rs.rank, offset=rs.rank)


def cv_operator_report(
    rs: RootSystem, ring: QuasiInvariantRing, c: MultiplicityFunction, p: Polynomial
) -> CheckReport:
    """The contract of L_P: order, symbol, weight+order = 0, preservation
    of the computed Q_c basis."""
    lp = cv_operator(rs, c, p)
    k = p.degree()
    details = {"degree": k}
    if lp.order() != k:
        return CheckReport("cv-operator", False, details, witness="wrong order")
    if lp.principal_symbol() != dual_symbol(rs, p):
        return CheckReport("cv-operator", False, details, witness="wrong principal symbol")
    if lp.weight() + lp.order() != 0:
        return CheckReport("cv-operator", False, details, witness="weight+order nonzero")
    for d in range(ring.n_max + 1):
        for f in ring.graded[d]:
            out = lp.apply(f)
            if not isinstance(out, Polynomial):
                return CheckReport("cv-operator", False, details,
                                   witness=f"non-polynomial image in degree {d}")
            if not ring.contains(out):
                return CheckReport("cv-operator", False, details,
                                   witness=f"image leaves Q_c in degree {d}")
    return CheckReport("cv-operator", True, details)


def bilinear_form(
    rs: RootSystem, c: MultiplicityFunction, f: Polynomial, g: Polynomial
) -> Q:
    """(f, g)_c = (L_f g)(0); constants pair by evaluation."""
    _require_integral(c)
    if not f.is_homogeneous():
        raise ValueError("f must be homogeneous")
    if not is_quasi_invariant(rs, c, f) or not is_quasi_invariant(rs, c, g):
        raise ValueError("both arguments must lie in Q_c")
    if f.degree() <= 0:
        return f.constant_term() * g.evaluate([Q(0)] * rs.rank)
    out = cv_operator(rs, c, f).apply(g)
    if not isinstance(out, Polynomial):
        raise RuntimeError("pairing produced a non-polynomial value")
    return out.constant_term()


def gram_matrix(
    rs: RootSystem, ring: QuasiInvariantRing, c: MultiplicityFunction, d: int
) -> list[list[Q]]:
    basis = ring.graded[d]
    ops = [cv_operator(rs, c, f) if d else None for f in basis]
    out = []
    for i, f in enumerate(basis):
        row = []
        for g in basis:
            if d == 0:
                row.append(f.constant_term() * g.constant_term())
            else:
                val = ops[i].apply(g)
                row.append(val.constant_term() if isinstance(val, Polynomial) else None)
        out.append(row)
    return out


def bilinear_report(
    rs: RootSystem, ring: QuasiInvariantRing, c: MultiplicityFunction, n_max: int
) -> CheckReport:
    """Symmetry, grading, and nonsingular degreewise Gram matrices."""
    details: dict = {"gram_ranks": {}}
    for d in range(n_max + 1):
        gram = gram_matrix(rs, ring, c, d)
        n = len(gram)
        if n == 0:
            details["gram_ranks"][d] = 0
            continue
        for i in range(n):
            for j in range(n):
                if gram[i][j] != gram[j][i]:
                    return CheckReport("bilinear-form", False, details,
                                       witness=f"asymmetric at degree {d}")
        r = linalg.rank(gram)
        details["gram_ranks"][d] = r
        if r != n:
            return CheckReport("bilinear-form", False, details,
                               witness=f"singular Gram matrix at degree {d}")
    # cross-degree vanishing
    for d1 in range(1, min(3, n_max) + 1):
        for d2 in range(d1 + 1, min(4, n_max) + 1):
            for f in ring.graded[d1]:
                for g in ring.graded[d2]:
                    if bilinear_form(rs, c, f, g) != 0:
                        return CheckReport("bilinear-form", False, details,
                                           witness=f"grading violated at ({d1},{d2})")
    return CheckReport("bilinear-form", True, details)


def adjoint_report(
    rs: RootSystem,
    ring: QuasiInvariantRing,
    c: MultiplicityFunction,
    p_degree_max: int = 3,
    f_degree_max: int = 6,
) -> CheckReport:
    """(P f, g)_c = (f, L_P g)_c on compatible degrees."""
    for dp in range(1, p_degree_max + 1):
        for p in ring.graded[dp]:
            lp = cv_operator(rs, c, p)
            for df in range(0, f_degree_max - dp + 1):
                dg = df + dp
                if dg > ring.n_max:
                    continue
                for f in ring.graded[df]:
                    for g in ring.graded[dg]:
                        lhs = bilinear_form(rs, c, p * f, g)
                        img = lp.apply(g)
                        assert isinstance(img, Polynomial)
                        rhs = bilinear_form(rs, c, f, img) if df else img.evaluate(
                            [Q(0)] * rs.rank
                        ) * f.constant_term()
                        if lhs != rhs:
                            return CheckReport(
                                "adjoint", False, {},
                                witness=f"P deg {dp}, f deg {df}: {lhs} != {rhs}",
                            )
    return CheckReport("adjoint", True, {})


def closure_and_centralizer_checks(
    rs: RootSystem,
    gd: GroupData,
    c: MultiplicityFunction,
    n_max: int,
    order_bound: int = 3,
    commute_degree: int = 4,
) -> CheckReport:
    """(a) L_c preserves Q_c on the computed basis; (b) the operators L_P
    commute pairwise; (c) bounded centralizer search: homogeneous pure
    differential operators with weight+order <= 0 and bounded order that
    commute with L_c span exactly {L_P}."""
    ring = QuasiInvariantRing(rs, gd, c, n_max)
    lc = calogero_moser(rs, c)
    details: dict = {}
    for d in range(n_max + 1):
        for f in ring.graded[d]:
            out = lc.apply(f)
            if not isinstance(out, Polynomial) or not ring.contains(out):
                return CheckReport("closure", False, details,
                                   witness=f"L_c image leaves Q_c at degree {d}")
    ops = []
    for d in range(1, commute_degree + 1):
        if d > ring.n_max:
            break
        ops.extend(cv_operator(rs, c, p) for p in ring.graded[d])
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            if not ops[i].commutator(ops[j]).is_zero():
                return CheckReport("closure", False, details,
                                   witness=f"[L_P, L_Q] != 0 for pair ({i},{j})")
    dims = centralizer_dimensions(rs, c, order_bound)
    details["centralizer_dims"] = dims
    expected = [len(ring.graded[k]) if k <= ring.n_max else None for k in range(order_bound + 1)]
    details["qc_dims"] = expected
    ok = all(dims[k] == expected[k] for k in range(order_bound + 1) if expected[k] is not None)
    return CheckReport("closure", ok, details,
                       witness=None if ok else "centralizer dimension mismatch")


def centralizer_dimensions(
    rs: RootSystem, c: MultiplicityFunction, order_bound: int
) -> list[int]:
    """For k = 0..order_bound, the dimension of the space of homogeneous
    pure differential operators of weight -k, order <= order_bound, with
    coefficients p_beta / delta^s (s = max(2 c_alpha)), commuting with L_c.

    By the centralizer theorem these dimensions must match dim (Q_c)_k;
    the ansatz denominator is generous enough for the operators L_P.
    """
    _require_integral(c)
    lc = calogero_moser(rs, c)
    smax = max((2 * int(c.of_root(i)) for i in range(len(rs.positive_roots))), default=0)
    den = tuple((i, smax) for i in range(len(rs.positive_roots))) if smax else ()
    den_degree = smax * len(rs.positive_roots)
    dims = []
    e = rs.identity_element()
    for k in range(order_bound + 1):
        # unknowns: numerator coefficients of p_beta, deg p = |beta| - k + den_degree;
        # flat degree <= 0 at weight -k caps the order at k
        unknowns = []
        for order in range(min(k, order_bound) + 1):
            for beta in monomials(rs.rank, order):
                num_deg = order - k + den_degree
                if num_deg < 0:
                    continue
                for eexp in monomials(rs.rank, num_deg):
                    unknowns.append((beta, eexp))
        if not unknowns:
            dims.append(0)
            continue
        rows_index: dict = {}
        rows: list[dict[int, Q]] = []
        # expand every commutator coefficient over one common denominator so
        # that cancellations across ansatz columns are keyed consistently
        common_power = smax + 3
        root_polys = [rs.root_polynomial(i) for i in range(len(rs.positive_roots))]

        def add_entries(col: int, op: ReflDiffOperator):
            for (beta, w), coeff in op.terms.items():
                assert w == e
                num = coeff.num
                have = dict(coeff.den)
                for i, root in enumerate(root_polys):
                    missing = common_power - have.get(i, 0)
                    assert missing >= 0
                    if missing:
                        num = num * root**missing
                for eexp, cval in num.terms.items():
                    key = (beta, eexp)
                    if key not in rows_index:
                        rows_index[key] = len(rows)
                        rows.append({})
                    rows[rows_index[key]][col] = rows[rows_index[key]].get(col, Q(0)) + cval

        for col, (beta, eexp) in enumerate(unknowns):
            term = ReflDiffOperator(
                rs,
                {(beta, e): RootFraction(rs, Polynomial.monomial(eexp), den)},
            )
            add_entries(col, lc.commutator(term))
        matrix = [[row.get(col, Q(0)) for col in range(len(unknowns))] for row in rows]
        if not matrix:
            dims.append(len(unknowns))
            continue
        kernel = linalg.nullspace(matrix)
        dims.append(len(kernel))
    return dims


def ring_closure_report(ring: QuasiInvariantRing) -> CheckReport:
    """Spot-check that Q_c is closed under products."""
    rs = ring.rs
    for d1 in range(1, ring.n_max):
        for d2 in range(d1, ring.n_max + 1 - d1):
            for f in ring.graded[d1][:2]:
                for g in ring.graded[d2][:2]:
                    if not ring.contains(f * g):
                        return CheckReport("ring-closure", False, {},
                                           witness=f"product {d1}x{d2} escapes")
    return CheckReport("ring-closure", True, {})
