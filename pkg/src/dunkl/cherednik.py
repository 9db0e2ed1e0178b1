"""The rational Cherednik algebra through its Dunkl representation.

verify_relations checks the defining commutation relations as exact
operator identities; standard modules M(tau) are built degreewise with
the lowering action defined by the relation-driven recursion (and
cross-checked against Dunkl matrices for the trivial tau).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q

from . import linalg
from .operators import (
    ReflDiffOperator,
    dunkl,
    dunkl_basis,
    euler_element,
    squared_norm_x,
    squared_norm_y_operator,
)
from .poly import Polynomial, divide_by_linear_power, monomials
from .roots import GroupData, MultiplicityFunction, RootSystem, discriminant, kappa_scalar


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    witness: str | None = None

    def __bool__(self):
        return self.passed


def _relation_rhs(rs: RootSystem, c: MultiplicityFunction, y, xi: int) -> ReflDiffOperator:
    """<y, x_i> - sum_{alpha > 0} c_alpha <y,alpha><alpha_vee,x_i> s_alpha."""
    out = ReflDiffOperator.multiplication(
        rs, Polynomial.constant(rs.rank, y[xi])
    )
    for i in range(len(rs.positive_roots)):
        ca = c.of_root(i)
        if not ca:
            continue
        coeff = ca * rs.pair(rs.positive_roots[i], tuple(y)) * rs.coroots[i][xi]
        if coeff:
            out = out - ReflDiffOperator.group(rs, rs.reflections[i]).scale(coeff)
    return out


def verify_relations(rs: RootSystem, c: MultiplicityFunction, n_max: int = 5) -> CheckReport:
    """All three families of the defining relations, checked symbolically
    in D(h_reg)#W, plus the grading relation h x = x (h + 1); the matrix
    consequences on C^{<=N}[h] follow."""
    ts = dunkl_basis(rs, c)
    details: dict = {"degree_bound": n_max}
    e = rs.identity_element()

    # [T_y, x] family
    for i in range(rs.rank):
        y = [1 if k == i else 0 for k in range(rs.rank)]
        for j in range(rs.rank):
            xm = ReflDiffOperator.multiplication(rs, Polynomial.variable(rs.rank, j))
            got = ts[i].commutator(xm)
            want = _relation_rhs(rs, c, y, j)
            if got != want:
                return CheckReport(
                    "relations", False,
                    details, witness=f"[T_{i}, x_{j}] mismatch: {(got - want).text()}",
                )
    # commutativity families
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            if not ts[i].commutator(ts[j]).is_zero():
                return CheckReport("relations", False, details, witness=f"[T_{i}, T_{j}] != 0")
    # W-equivariance: w T_y w^{-1} = T_{w(y)} and w x w^{-1} = w(x)
    for s in rs.reflections:
        sw = ReflDiffOperator.group(rs, s)
        swi = ReflDiffOperator.group(rs, rs.inverse(s))
        for i in range(rs.rank):
            y = tuple(Q(1) if k == i else Q(0) for k in range(rs.rank))
            lhs = sw.compose(ts[i]).compose(swi)
            rhs = dunkl(rs, c, rs.act_vector(s, y))
            if lhs != rhs:
                return CheckReport("relations", False, details, witness="w T w^-1 != T_w(y)")
        for i in range(rs.rank):
            xi = Polynomial.variable(rs.rank, i)
            xm = ReflDiffOperator.multiplication(rs, xi)
            lhs = sw.compose(xm).compose(swi)
            rhs = ReflDiffOperator.multiplication(rs, rs.coordinate_ring_action(s, xi))
            if lhs != rhs:
                return CheckReport("relations", False, details, witness="w x w^-1 != w(x)")
    # grading relation h x = x (h+1) on each coordinate
    h = euler_element(rs, c)
    for j in range(rs.rank):
        xm = ReflDiffOperator.multiplication(rs, Polynomial.variable(rs.rank, j))
        lhs = h.compose(xm)
        rhs = xm.compose(h) + xm
        if lhs != rhs:
            return CheckReport("relations", False, details, witness=f"h x_{j} != x_{j}(h+1)")
    # spot application on all monomials below the bound
    for e_ in monomials(rs.rank, n_max):
        f = Polynomial.monomial(e_)
        for i in range(rs.rank):
            xj = Polynomial.variable(rs.rank, 0)
            lhs = ts[i].apply(xj * f) - xj * ts[i].apply(f)
            rhs = _relation_rhs(rs, c, [1 if k == i else 0 for k in range(rs.rank)], 0).apply(f)
            if lhs != rhs:
                return CheckReport("relations", False, details, witness=f"matrix check at {e_}")
    return CheckReport("relations", True, details)


def sl2_data(rs: RootSystem, c: MultiplicityFunction) -> CheckReport:
    """Verify [h, x^2] = 2 x^2 and [h, y^2] = -2 y^2 symbolically, and
    measure the bracket [x^2, y^2] = gamma*h + mu; the normalization
    gamma is reported, not assumed."""
    e_op = ReflDiffOperator.multiplication(rs, squared_norm_x(rs))
    f_op = squared_norm_y_operator(rs, c)
    h_op = euler_element(rs, c)
    ok1 = h_op.commutator(e_op) == e_op.scale(2)
    ok2 = h_op.commutator(f_op) == f_op.scale(-2)
    bracket = e_op.commutator(f_op)
    # solve bracket = gamma*h + mu*id exactly
    gamma = mu = None
    probe = bracket - h_op.scale(-4)
    const = probe.apply(Polynomial.one(rs.rank))
    ok3 = False
    if isinstance(const, Polynomial) and const.degree() <= 0:
        mu_candidate = const.constant_term()
        resid = probe - ReflDiffOperator.identity(rs).scale(mu_candidate)
        if resid.is_zero():
            gamma, mu = Q(-4), mu_candidate
            ok3 = True
    if not ok3:
        # generic fallback: match the gradient part
        for g in range(-8, 9):
            if g == 0:
                continue
            resid = bracket - h_op.scale(g)
            cst = resid.apply(Polynomial.one(rs.rank))
            if isinstance(cst, Polynomial) and cst.degree() <= 0:
                if (resid - ReflDiffOperator.identity(rs).scale(cst.constant_term())).is_zero():
                    gamma, mu = Q(g), cst.constant_term()
                    ok3 = True
                    break
    passed = ok1 and ok2 and ok3
    return CheckReport(
        "sl2-triple",
        passed,
        details={"gamma": str(gamma), "mu": str(mu)},
        witness=None if passed else "bracket relations failed",
    )


class TruncatedModule:
    """The standard module M(tau) = C[h] (x) tau truncated at degree N.

    Basis of the degree-d piece: monomials of degree d (graded-lex
    descending) tensor the extracted basis of tau.  x_i raises degree,
    lowering operators y_i are defined by y . (degree 0) = 0 and the
    defining commutation relation; w acts diagonally.
    """

    def __init__(self, rs: RootSystem, gd: GroupData, c: MultiplicityFunction, tau: int, n_max: int):
        if n_max < 1:
            raise ValueError("degree bound must be >= 1")
        self.rs, self.gd, self.c, self.tau, self.n_max = rs, gd, c, tau, n_max
        self.dim_tau = gd.dim(tau)
        self.rho = gd.irrep_matrices(tau)
        self.kappa = kappa_scalar(rs, gd, c, tau)
        r = rs.rank
        self.mono: list[tuple] = [monomials(r, d) for d in range(n_max + 1)]
        # x_i matrices: degree d -> d+1
        self.x_mats: list[list[linalg.Mat]] = []
        for d in range(n_max):
            row = []
            src, dst = self.mono[d], self.mono[d + 1]
            dst_index = {e: k for k, e in enumerate(dst)}
            for i in range(r):
                m = [[Q(0)] * (len(src) * self.dim_tau) for _ in range(len(dst) * self.dim_tau)]
                for a, e in enumerate(src):
                    ne = list(e)
                    ne[i] += 1
                    b = dst_index[tuple(ne)]
                    for t in range(self.dim_tau):
                        m[b * self.dim_tau + t][a * self.dim_tau + t] = Q(1)
                row.append(m)
            self.x_mats.append(row)
        # y_i matrices: degree d -> d-1, built by recursion in d
        self.y_mats: list[list[linalg.Mat]] = [
            [[[Q(0)] * self.dim_tau for _ in range(0)] for _ in range(r)]
        ]
        for d in range(1, n_max + 1):
            self.y_mats.append(self._build_y(d))

    def _w_matrix(self, w, d: int) -> linalg.Mat:
        """Action of w on the degree-d piece of C[h] (x) tau."""
        rs = self.rs
        src = self.mono[d]
        nm = len(src)
        rho_w = self.rho[self.gd.index_of[w]]
        m = [[Q(0)] * (nm * self.dim_tau) for _ in range(nm * self.dim_tau)]
        for a, e in enumerate(src):
            img = rs.coordinate_ring_action(w, Polynomial.monomial(e))
            for ee, coeff in img.terms.items():
                b = src.index(ee)
                for t1 in range(self.dim_tau):
                    for t2 in range(self.dim_tau):
                        if rho_w[t1][t2]:
                            m[b * self.dim_tau + t1][a * self.dim_tau + t2] += coeff * rho_w[t1][t2]
        return m

    def _build_y(self, d: int):
        """y_i on degree d via y x_j = x_j y + <y,x_j> - sum c <y,a><a_vee,x_j> s_a."""
        rs, gd, c = self.rs, self.gd, self.c
        r = rs.rank
        src = self.mono[d]
        prev = self.mono[d - 1]
        prev_index = {e: k for k, e in enumerate(prev)}
        dt = self.dim_tau
        n_src = len(src) * dt
        n_dst = len(prev) * dt
        s_prev = {}
        mats = []
        refl_mats = [self._w_matrix(rs.reflections[k], d - 1) for k in range(len(rs.positive_roots))]
        for i in range(r):
            m = [[Q(0)] * n_src for _ in range(n_dst)]
            for a, e in enumerate(src):
                j = next(k for k, v in enumerate(e) if v)
                ge = list(e)
                ge[j] -= 1
                g_idx = prev_index[tuple(ge)]
                # x_j * (y_i . (g tensor v)) when d-1 > 0
                if d >= 2:
                    y_prev = self.y_mats[d - 1][i]
                    x_prev = self.x_mats[d - 2][j]
                    col_base = g_idx * dt
                    for t in range(dt):
                        col = [Q(0)] * (len(self.mono[d - 1]) * dt)
                        # y_i applied to (g tensor e_t)
                        yv = [y_prev[rr][col_base + t] for rr in range(len(self.mono[d - 2]) * dt)]
                        xv = linalg.mat_vec(x_prev, yv)
                        for rr, val in enumerate(xv):
                            if val:
                                m[rr][a * dt + t] += val
                # + delta_ij (g tensor v)
                if i == j:
                    for t in range(dt):
                        m[g_idx * dt + t][a * dt + t] += Q(1)
                # - sum_alpha c <alpha, e_i> <alpha_vee, x_j> s_alpha (g tensor v)
                for k in range(len(rs.positive_roots)):
                    ca = c.of_root(k)
                    if not ca:
                        continue
                    coeff = ca * rs.positive_roots[k][i] * rs.coroots[k][j]
                    if not coeff:
                        continue
                    sm = refl_mats[k]
                    col_base = g_idx * dt
                    for t in range(dt):
                        for rr in range(n_dst):
                            v = sm[rr][col_base + t]
                            if v:
                                m[rr][a * dt + t] -= coeff * v
            mats.append(m)
        return mats

    def lowest_h_eigenvalue(self) -> Q:
        total_c = sum((2 * self.c.of_root(i) for i in range(len(self.rs.positive_roots))), Q(0))
        return Q(self.rs.rank, 2) - total_c / 2 + self.kappa

    def h_eigenvalue(self, d: int) -> Q:
        return d + self.lowest_h_eigenvalue()

    def graded_dimension(self, d: int) -> int:
        return len(self.mono[d]) * self.dim_tau

    def spherical_dimension(self, d: int) -> int:
        """dim of the W-invariants of the degree-d piece."""
        nm = len(self.mono[d]) * self.dim_tau
        if nm == 0:
            return 0
        acc = [[Q(0)] * nm for _ in range(nm)]
        for w in self.gd.elements:
            mw = self._w_matrix(w, d)
            for rr in range(nm):
                row = mw[rr]
                arow = acc[rr]
                for cc in range(nm):
                    if row[cc]:
                        arow[cc] += row[cc]
        return linalg.rank(acc)


def standard_module(
    rs: RootSystem, gd: GroupData, c: MultiplicityFunction, tau: int, n_max: int
) -> TruncatedModule:
    mod = TruncatedModule(rs, gd, c, tau, n_max)
    if tau == gd.trivial_index():
        # independent construction: y-action must equal the Dunkl matrices
        ts = dunkl_basis(rs, c)
        for d in range(1, n_max + 1):
            for i in range(rs.rank):
                for a, e in enumerate(mod.mono[d]):
                    img = ts[i].apply(Polynomial.monomial(e))
                    vec = [img.terms.get(ee, Q(0)) for ee in mod.mono[d - 1]]
                    got = [mod.y_mats[d][i][rr][a] for rr in range(len(mod.mono[d - 1]))]
                    assert vec == got, "recursive y-action disagrees with Dunkl operators"
    return mod


def singular_vectors(mod: TruncatedModule, d: int) -> list[list[Q]]:
    """Basis of the joint kernel of all lowering operators in degree d."""
    if not 1 <= d <= mod.n_max:
        raise ValueError(f"degree {d} out of range 1..{mod.n_max}")
    rows = []
    for i in range(mod.rs.rank):
        rows.extend(mod.y_mats[d][i])
    if not rows:
        return []
    return linalg.nullspace(rows)


def module_character(mod: TruncatedModule) -> dict:
    """Graded character data of M(tau) against both closed forms."""
    offset = mod.lowest_h_eigenvalue()
    dims = [mod.graded_dimension(d) for d in range(mod.n_max + 1)]
    spherical = [mod.spherical_dimension(d) for d in range(mod.n_max + 1)]
    return {"offset": offset, "dims": dims, "spherical_dims": spherical}


def verify_module_character(
    rs: RootSystem, gd: GroupData, mod: TruncatedModule, molien_coeffs: list[Q]
) -> CheckReport:
    """Full character must equal t^{offset} dim(tau) Hilbert(C[h]);
    the spherical character must equal t^{offset} times the Molien series."""
    from math import comb

    data = module_character(mod)
    ok = True
    witness = None
    for d in range(mod.n_max + 1):
        full_expected = mod.dim_tau * comb(rs.rank - 1 + d, d)
        if data["dims"][d] != full_expected:
            ok, witness = False, f"full character mismatch at degree {d}"
            break
        if data["spherical_dims"][d] != molien_coeffs[d]:
            ok, witness = False, f"spherical character mismatch at degree {d}"
            break
    return CheckReport(
        "module-character",
        ok,
        details={"offset": str(data["offset"]), "dims": data["dims"], "spherical": data["spherical_dims"]},
        witness=witness,
    )


def isotypic_conjugation_check(
    rs: RootSystem,
    gd: GroupData,
    c: MultiplicityFunction,
    eps: int,
    n_max: int,
) -> CheckReport:
    """delta_eps^{-1} o Theta_c(y^2 e_eps) o delta_eps = Theta_{c-1_eps}(y^2 e)
    verified on W-invariant polynomials of degree <= N."""
    if gd.dim(eps) != 1:
        raise ValueError("epsilon must be a linear character")
    signs = gd.linear_character_signs(eps)
    delta_eps = discriminant(rs, variant="eps-weighted", sign_values=signs)
    c_shift = c.shifted_by_sign_set(lambda i: signs[i] == -1)
    y2_c = squared_norm_y_operator(rs, c)
    y2_shift = squared_norm_y_operator(rs, c_shift)
    details = {"epsilon_signs": signs, "shifted_c": c_shift.key()}
    for d in range(0, n_max + 1):
        for f in _invariant_basis(rs, gd, d):
            lhs_raw = y2_c.apply(delta_eps * f)
            if not isinstance(lhs_raw, Polynomial):
                return CheckReport("isotypic-conjugation", False, details,
                                   witness=f"non-polynomial value at degree {d}")
            quotient = lhs_raw
            ok = True
            for i in range(len(rs.positive_roots)):
                if signs[i] == -1:
                    quotient, w = divide_by_linear_power(quotient, rs.root_polynomial(i), 1)
                    if w is not None:
                        ok = False
                        break
            if not ok:
                return CheckReport("isotypic-conjugation", False, details,
                                   witness=f"delta_eps does not divide at degree {d}")
            rhs = y2_shift.apply(f)
            if quotient != rhs:
                return CheckReport("isotypic-conjugation", False, details,
                                   witness=f"mismatch on invariant of degree {d}")
    return CheckReport("isotypic-conjugation", True, details)


def _invariant_basis(rs: RootSystem, gd: GroupData, d: int) -> list[Polynomial]:
    basis = monomials(rs.rank, d)
    if not basis:
        return []
    cols = []
    for e in basis:
        f = Polynomial.monomial(e)
        img = Polynomial.zero(rs.rank)
        for w in gd.elements:
            img = img + rs.coordinate_ring_action(w, f)
        cols.append(img)
    seen: list[Polynomial] = []
    rows: list[list[Q]] = []
    for col in cols:
        if col.is_zero():
            continue
        cand = rows + [[col.terms.get(e, Q(0)) for e in basis]]
        if linalg.rank(cand) > len(rows):
            rows = cand
            seen.append(col)
    return seen


def lefschetz_check(
    rs: RootSystem, gd: GroupData, c: MultiplicityFunction, k: int, n_max: int = 6
) -> CheckReport:
    """(ad y^2)^k maps degree-k multiplication operators onto degree-k
    polynomials in the Dunkl operators; the induced map C^k[h] -> C^k[h*]
    must have full rank.  The image membership is certified by commuting
    with every Dunkl operator and killing constants."""
    y2 = squared_norm_y_operator(rs, c)
    ts = dunkl_basis(rs, c)
    basis = monomials(rs.rank, k)
    details: dict = {"k": k}
    if k == 0:
        return CheckReport("lefschetz", True, details)
    sym_rows = []
    for e in basis:
        u = ReflDiffOperator.multiplication(rs, Polynomial.monomial(e))
        for _ in range(k):
            u = y2.commutator(u)
        for t in ts:
            if not u.commutator(t).is_zero():
                return CheckReport("lefschetz", False, details,
                                   witness=f"image of {e} does not commute with Dunkl operators")
        out = u.apply(Polynomial.one(rs.rank))
        if not (isinstance(out, Polynomial) and out.is_zero()):
            return CheckReport("lefschetz", False, details,
                               witness=f"image of {e} does not kill constants")
        sym = u.principal_symbol()
        if u.order() != k:
            return CheckReport("lefschetz", False, details, witness=f"image of {e} has wrong order")
        xi_basis = monomials(rs.rank, k)
        row = []
        for xe in xi_basis:
            full = tuple([0] * rs.rank + list(xe))
            row.append(sym.terms.get(full, Q(0)))
        # symbol must be constant-coefficient: no x-dependence allowed
        for ee in sym.terms:
            if any(ee[:rs.rank]):
                return CheckReport("lefschetz", False, details,
                                   witness=f"image of {e} has non-constant top coefficients")
        sym_rows.append(row)
    rank = linalg.rank(sym_rows)
    details["rank"] = rank
    details["expected"] = len(basis)
    ok = rank == len(basis)
    return CheckReport("lefschetz", ok, details,
                       witness=None if ok else "induced map not full rank")
