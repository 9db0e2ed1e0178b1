"""Shift operators and the Baker-Akhiezer kernel.

The shift operator is the d-fold mixed adjoint of the squared weighted
discriminant (d = sum of the multiplicities over positive roots):

    S_c = ad(L_c, L_0)^d [delta_c(x)^2] / (2^d d!),

acting on exponential kernels R(x,k) e^{(x,k)} through the rule
d_{x_i}(R e) = (dR/dx_i + k_i R) e.  Polynomials on h x h* use 2*rank
variables: x1..xr then k1..kr, with e^{(x,k)} the canonical pairing.
All identities here are exact; a non-polynomial kernel is a hard
convention failure, not a tolerance issue.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import factorial

from .cherednik import CheckReport
from .operators import (
    NonPolynomialOutput,
    ReflDiffOperator,
    RootFraction,
    calogero_moser,
)
from .poly import Polynomial, divide_by_linear_power
from .quasiinv import cv_operator, dual_symbol, is_quasi_invariant
from .roots import MultiplicityFunction, RootSystem, discriminant


def shift_operator(rs: RootSystem, c: MultiplicityFunction) -> ReflDiffOperator:
    if not c.is_nonnegative_integer():
        raise ValueError("shift operators need nonnegative integer multiplicities")
    d = int(c.total())
    u = ReflDiffOperator.multiplication(rs, discriminant(rs, c, variant="c-weighted") ** 2)
    if d == 0:
        return u
    lc = calogero_moser(rs, c)
    l0 = calogero_moser(rs, MultiplicityFunction(rs, [0] * len(rs.orbits)))
    for _ in range(d):
        u = lc.compose(u) - u.compose(l0)
    return u.scale(Q(1, 2**d * factorial(d)))


def shift_report(rs: RootSystem, c: MultiplicityFunction) -> CheckReport:
    """Order, principal symbol delta_c(x) delta_c(k), intertwining
    L_c S_c = S_c L_0, and S_c[1] != 0."""
    s = shift_operator(rs, c)
    d = int(c.total())
    details: dict = {"order": s.order(), "expected_order": d}
    if s.order() != d:
        return CheckReport("shift-operator", False, details, witness="wrong order")
    delta_c = discriminant(rs, c, variant="c-weighted")
    want_symbol = delta_c.extend_vars(2 * rs.rank) * dual_symbol(rs, delta_c)
    if s.principal_symbol() != want_symbol:
        return CheckReport("shift-operator", False, details, witness="wrong principal symbol")
    lc = calogero_moser(rs, c)
    l0 = calogero_moser(rs, MultiplicityFunction(rs, [0] * len(rs.orbits)))
    if not (lc.compose(s) - s.compose(l0)).is_zero():
        return CheckReport("shift-operator", False, details, witness="intertwining fails")
    value = s.apply(Polynomial.one(rs.rank))
    if not isinstance(value, Polynomial) or value.degree() > 0 or value.is_zero():
        return CheckReport("shift-operator", False, details, witness="S_c[1] not a nonzero constant")
    details["s_of_one"] = str(value.constant_term())
    details["text"] = s.text()
    return CheckReport("shift-operator", True, details)


# ---------------------------------------------------------------------
# exponential kernels
# ---------------------------------------------------------------------


class ExpKernelElement:
    """R(x,k) e^{(x,k)} with R a root fraction in the 2*rank variables."""

    __slots__ = ("rs", "fraction")

    def __init__(self, rs: RootSystem, fraction: RootFraction):
        self.rs = rs
        self.fraction = fraction

    @classmethod
    def exponential(cls, rs: RootSystem) -> "ExpKernelElement":
        return cls(rs, RootFraction(rs, Polynomial.one(2 * rs.rank)))

    def x_derivative(self, i: int) -> "ExpKernelElement":
        r = self.rs.rank
        ki = Polynomial.variable(2 * r, r + i)
        return ExpKernelElement(
            self.rs, self.fraction.derivative(i) + self.fraction * ki
        )

    def scale_by(self, frac_or_poly) -> "ExpKernelElement":
        return ExpKernelElement(self.rs, self.fraction * frac_or_poly)

    def __add__(self, other: "ExpKernelElement") -> "ExpKernelElement":
        return ExpKernelElement(self.rs, self.fraction + other.fraction)

    def __sub__(self, other: "ExpKernelElement") -> "ExpKernelElement":
        return ExpKernelElement(self.rs, self.fraction - other.fraction)

    def is_zero(self) -> bool:
        return self.fraction.is_zero()


def apply_in_x(u: ReflDiffOperator, kernel: ExpKernelElement) -> ExpKernelElement:
    """Apply a pure differential operator in the x-variables."""
    if u.has_reflection_terms():
        raise ValueError("exponential kernels take pure differential operators")
    rs = u.rs
    total = ExpKernelElement(rs, RootFraction.zero(rs, 2 * rs.rank))
    for (beta, _w), coeff in u.terms.items():
        piece = kernel
        for i, k in enumerate(beta):
            for _ in range(k):
                piece = piece.x_derivative(i)
        ext = RootFraction(rs, coeff.num.extend_vars(2 * rs.rank), coeff.den)
        total = total + piece.scale_by(ext)
    return total


class BispectralKernel:
    """Phi with psi_c(x,k) = Phi(x,k) e^{(x,k)}; Phi is exactly polynomial."""

    def __init__(self, rs: RootSystem, c: MultiplicityFunction, phi: Polynomial):
        self.rs, self.c, self.phi = rs, c, phi

    def phi_at_origin(self) -> Q:
        return self.phi.constant_term()

    def x_degree(self) -> int:
        r = self.rs.rank
        return max((sum(e[:r]) for e in self.phi.terms), default=-1)

    def normalization_header(self) -> list[str]:
        rs = self.rs
        return [
            f"label={rs.cartan_label}{rs.rank}",
            f"c={self.c.key()}",
            "roots=" + ";".join(p.text() for p in map(rs.root_polynomial, range(len(rs.positive_roots)))),
        ]


def baker_akhiezer(rs: RootSystem, c: MultiplicityFunction) -> BispectralKernel:
    """Phi = e^{-(x,k)} S_c[e^{(x,k)}]; non-polynomial output is a hard error."""
    s = shift_operator(rs, c)
    out = apply_in_x(s, ExpKernelElement.exponential(rs))
    if not out.fraction.is_polynomial():
        raise RuntimeError(
            "Baker-Akhiezer kernel failed to clear denominators: " + out.fraction.text()
        )
    kern = BispectralKernel(rs, c, out.fraction.polynomial())
    if kern.phi_at_origin() == 0:
        raise RuntimeError("Baker-Akhiezer kernel vanishes at the origin")
    return kern


def eigenfunction_check(
    rs: RootSystem, c: MultiplicityFunction, p: Polynomial, kern: BispectralKernel
) -> CheckReport:
    """L_P^(x) (Phi e) = P(k) Phi e, exactly."""
    details = {"P": p.text()}
    if p.degree() == 0:
        return CheckReport("eigenfunction", True, details)
    lp = cv_operator(rs, c, p)
    lhs = apply_in_x(lp, ExpKernelElement(rs, RootFraction(rs, kern.phi)))
    eigen = dual_symbol(rs, p)  # P in the k-variables
    rhs = RootFraction(rs, kern.phi) * eigen
    ok = lhs.fraction == rhs
    return CheckReport("eigenfunction", ok, details,
                       witness=None if ok else (lhs.fraction - rhs).text())


def _x_side_reflection_substitution(rs: RootSystem, i: int) -> list[Polynomial]:
    """Substitution realizing Phi(s_alpha x, k)."""
    n = 2 * rs.rank
    alpha, coroot = rs.positive_roots[i], rs.coroots[i]
    alpha_x = Polynomial.linear_form(alpha).extend_vars(n)
    values = []
    for j in range(rs.rank):
        values.append(Polynomial.variable(n, j) - alpha_x.scale(coroot[j]))
    for j in range(rs.rank):
        values.append(Polynomial.variable(n, rs.rank + j))
    return values


def _k_side_reflection_substitution(rs: RootSystem, i: int) -> list[Polynomial]:
    """Substitution realizing Phi(x, s_alpha k) for the dual action."""
    n = 2 * rs.rank
    alpha, coroot = rs.positive_roots[i], rs.coroots[i]
    covee_k = Polynomial.linear_form([Q(0)] * rs.rank + list(coroot))
    values = [Polynomial.variable(n, j) for j in range(rs.rank)]
    for j in range(rs.rank):
        values.append(Polynomial.variable(n, rs.rank + j) - covee_k.scale(alpha[j]))
    return values


def _truncated_exponential(t: Polynomial, order: int) -> Polynomial:
    out = Polynomial.one(t.nvars)
    power = Polynomial.one(t.nvars)
    for j in range(1, order + 1):
        power = power * t
        out = out + power.scale(Q((-1) ** j, factorial(j)))
    return out


def double_quasiinvariance_check(
    rs: RootSystem, c: MultiplicityFunction, kern: BispectralKernel
) -> CheckReport:
    """Quasi-invariance of Phi e^{(x,k)} in x and in k separately, reduced
    to exact congruences with the exponential factor truncated at order
    2 c_alpha (higher terms are already multiples of the modulus)."""
    n = 2 * rs.rank
    phi = kern.phi
    for i in range(len(rs.positive_roots)):
        ca = int(c.of_root(i))
        if ca == 0:
            continue
        alpha_x = Polynomial.linear_form(rs.positive_roots[i]).extend_vars(n)
        covee_k = Polynomial.linear_form([Q(0)] * rs.rank + list(rs.coroots[i]))
        t = alpha_x * covee_k
        efactor = _truncated_exponential(t, 2 * ca)
        for slot, subst, modulus in (
            ("x", _x_side_reflection_substitution(rs, i), alpha_x),
            ("k", _k_side_reflection_substitution(rs, i), covee_k),
        ):
            reflected = phi.substitute(subst)
            diff = phi - reflected * efactor
            _, w = divide_by_linear_power(diff, modulus, 2 * ca + 1)
            if w is not None:
                return CheckReport(
                    "double-quasi-invariance", False,
                    {"root": i, "slot": slot},
                    witness=f"congruence fails at order {w.order}",
                )
    return CheckReport("double-quasi-invariance", True, {"roots": len(rs.positive_roots)})


def kernel_of_operator(
    rs: RootSystem, u: ReflDiffOperator, kern: BispectralKernel
):
    """K(u) = e^{-(x,k)} (u^{(x)} psi_c); polynomial exactly when u
    preserves Q_c (non-polynomial output is returned as a diagnostic)."""
    out = apply_in_x(u, ExpKernelElement(rs, RootFraction(rs, kern.phi)))
    if out.fraction.is_polynomial():
        return out.fraction.polynomial()
    return NonPolynomialOutput(out.fraction)


def degree_identity_check(
    rs: RootSystem, u: ReflDiffOperator, kern: BispectralKernel
) -> CheckReport:
    """deg^x K(u) - deg^x Phi = weight(u) + order(u), and >= 0."""
    ku = kernel_of_operator(rs, u, kern)
    details: dict = {}
    if not isinstance(ku, Polynomial):
        return CheckReport("degree-identity", False, details, witness="non-polynomial kernel")
    r = rs.rank
    deg_x = max((sum(e[:r]) for e in ku.terms), default=-1)
    lhs = deg_x - kern.x_degree()
    rhs = u.weight() + u.order()
    details.update({"deg_jump": lhs, "weight_plus_order": rhs})
    ok = lhs == rhs and lhs >= 0
    return CheckReport("degree-identity", ok, details,
                       witness=None if ok else "identity fails")


def flip(rs: RootSystem, f: Polynomial) -> Polynomial:
    """The (x <-> k)-flip through the invariant form:
    F(x,k) -> F(B^{-1}k, Bx)."""
    n = 2 * rs.rank
    values = []
    binv = rs._form_inv
    b = rs.invariant_form
    for i in range(rs.rank):
        values.append(Polynomial.linear_form([Q(0)] * rs.rank + [binv[i][j] for j in range(rs.rank)]))
    for i in range(rs.rank):
        values.append(Polynomial.linear_form([b[i][j] for j in range(rs.rank)] + [Q(0)] * rs.rank))
    return f.substitute(values)


def flip_symmetry_check(
    rs: RootSystem, c: MultiplicityFunction, kern: BispectralKernel, p: Polynomial
) -> CheckReport:
    """flip(K(mult by P)) = K(L_P): multiplication and L_P are adjoint
    through the kernel map."""
    if not is_quasi_invariant(rs, c, p):
        raise ValueError("P must be quasi-invariant")
    mult = ReflDiffOperator.multiplication(rs, p)
    k_mult = kernel_of_operator(rs, mult, kern)
    lp = cv_operator(rs, c, p) if p.degree() >= 1 else mult
    k_lp = kernel_of_operator(rs, lp, kern)
    details = {"P": p.text()}
    if not isinstance(k_mult, Polynomial) or not isinstance(k_lp, Polynomial):
        return CheckReport("kernel-flip", False, details, witness="non-polynomial kernel")
    ok = flip(rs, k_mult) == k_lp
    return CheckReport("kernel-flip", ok, details, witness=None if ok else "flip mismatch")


def bispectral_weight_check(kern: BispectralKernel) -> CheckReport:
    """Every monomial of Phi has equal x- and k-degree, so Phi is fixed by
    the simultaneous rescaling x -> t x, k -> k/t."""
    r = kern.rs.rank
    ok = all(sum(e[:r]) == sum(e[r:]) for e in kern.phi.terms)
    return CheckReport("bispectral-weight", ok, {},
                       witness=None if ok else "mixed bidegrees present")
