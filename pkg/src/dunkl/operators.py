"""The algebra D(h_reg)#W in computational form.

An operator is a finite sum of terms

    (root-fraction coefficient) * (partial-derivative multi-index) * (group element)

kept in W-on-the-right normal form.  Coefficients are quotients of a
polynomial by a product of positive-root linear forms, normalized by
exact division.  Composition commutes group elements past coefficients
and derivatives and applies the Leibniz rule; reflection-term
denominators are never forced to divide out during composition, only
at application time.
"""

from __future__ import annotations

from fractions import Fraction as Q
from itertools import product as iter_product
from math import comb

from .poly import Polynomial, divide_by_linear_power
from .roots import Mat, MultiplicityFunction, RootSystem

Expo = tuple[int, ...]


def _root_poly(rs: RootSystem, i: int, nvars: int) -> Polynomial:
    cache = rs.__dict__.setdefault("_root_poly_cache", {})
    key = (i, nvars)
    if key not in cache:
        p = Polynomial.linear_form(rs.positive_roots[i])
        if nvars != rs.rank:
            p = p.extend_vars(nvars)
        cache[key] = p
    return cache[key]


class RootFraction:
    """numerator / prod_of_positive_root_powers, fully cancelled."""

    __slots__ = ("rs", "nvars", "num", "den")

    def __init__(self, rs: RootSystem, num: Polynomial, den=()):
        self.rs = rs
        self.nvars = num.nvars
        self.num = num
        self.den: tuple[tuple[int, int], ...] = tuple(sorted((i, m) for i, m in den if m))
        self._normalize()

    def _normalize(self):
        if self.num.is_zero():
            self.den = ()
            return
        new_den = []
        for i, m in self.den:
            root = _root_poly(self.rs, i, self.nvars)
            while m > 0:
                q, w = divide_by_linear_power(self.num, root, 1)
                if w is None:
                    self.num = q
                    m -= 1
                else:
                    break
            if m:
                new_den.append((i, m))
        self.den = tuple(new_den)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, rs: RootSystem, nvars: int | None = None) -> "RootFraction":
        return cls(rs, Polynomial.zero(nvars or rs.rank))

    @classmethod
    def from_scalar(cls, rs: RootSystem, c, nvars: int | None = None) -> "RootFraction":
        return cls(rs, Polynomial.constant(nvars or rs.rank, c))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def polynomial(self) -> Polynomial:
        if self.den:
            raise ValueError(f"non-polynomial value: {self.text()}")
        return self.num

    def is_homogeneous(self) -> bool:
        return self.num.is_homogeneous()

    def degree(self) -> int:
        """Total degree, counting the denominator negatively."""
        if self.is_zero():
            raise ValueError("degree of zero fraction")
        return self.num.degree() - sum(m for _, m in self.den)

    # -- arithmetic -------------------------------------------------------

    def _merged_den(self, other: "RootFraction"):
        d1, d2 = dict(self.den), dict(other.den)
        union = {i: max(d1.get(i, 0), d2.get(i, 0)) for i in set(d1) | set(d2)}
        f1 = Polynomial.one(self.nvars)
        f2 = Polynomial.one(self.nvars)
        for i, m in union.items():
            root = _root_poly(self.rs, i, self.nvars)
            if m - d1.get(i, 0):
                f1 = f1 * root ** (m - d1.get(i, 0))
            if m - d2.get(i, 0):
                f2 = f2 * root ** (m - d2.get(i, 0))
        return union, f1, f2

    def __add__(self, other: "RootFraction") -> "RootFraction":
        union, f1, f2 = self._merged_den(other)
        return RootFraction(self.rs, self.num * f1 + other.num * f2, union.items())

    def __neg__(self) -> "RootFraction":
        return RootFraction(self.rs, -self.num, self.den)

    def __sub__(self, other: "RootFraction") -> "RootFraction":
        return self + (-other)

    def __mul__(self, other) -> "RootFraction":
        if isinstance(other, RootFraction):
            den = dict(self.den)
            for i, m in other.den:
                den[i] = den.get(i, 0) + m
            return RootFraction(self.rs, self.num * other.num, den.items())
        if isinstance(other, Polynomial):
            return RootFraction(self.rs, self.num * other, self.den)
        return RootFraction(self.rs, self.num.scale(other), self.den)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RootFraction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self, i: int) -> "RootFraction":
        """Exact quotient-rule derivative."""
        if not self.den:
            return RootFraction(self.rs, self.num.derivative(i))
        dist = Polynomial.one(self.nvars)  # product of distinct denominator roots
        roots = [(j, m, _root_poly(self.rs, j, self.nvars)) for j, m in self.den]
        for _, _, r in roots:
            dist = dist * r
        numerator = self.num.derivative(i) * dist
        for j, m, r in roots:
            partial = Polynomial.one(self.nvars)
            for j2, _, r2 in roots:
                if j2 != j:
                    partial = partial * r2
            a_i = r.coefficient(tuple(1 if k == i else 0 for k in range(self.nvars)))
            if a_i:
                numerator = numerator - self.num.scale(m * a_i) * partial
        den = {j: m + 1 for j, m in self.den}
        return RootFraction(self.rs, numerator, den.items())

    def act(self, w: Mat) -> "RootFraction":
        """w . (p / prod alpha^m); group elements permute roots up to sign."""
        if self.nvars == self.rs.rank:
            num = self.rs.coordinate_ring_action(w, self.num)
        else:
            # x-part action on an (x,k)-fraction: block action on the x slots
            r = self.rs.rank
            wi = self.rs.inverse(w)
            m = [[Q(0)] * self.nvars for _ in range(self.nvars)]
            for a in range(r):
                for b in range(r):
                    m[a][b] = wi[a][b]
            for a in range(r, self.nvars):
                m[a][a] = Q(1)
            num = self.num.compose_linear(m)
        sign = 1
        den = {}
        for i, mm in self.den:
            # w.(1/alpha_i) = 1/(alpha_i o w^{-1}) = 1/(s * alpha_j)
            j, s = self.rs.root_image(w, i)
            den[j] = den.get(j, 0) + mm
            if s < 0 and mm % 2:
                sign = -sign
        if sign < 0:
            num = -num
        return RootFraction(self.rs, num, den.items())

    def text(self) -> str:
        if not self.den:
            return self.num.text()
        den = "*".join(
            f"({_root_poly(self.rs, i, self.nvars).text()})" + (f"^{m}" if m > 1 else "")
            for i, m in self.den
        )
        return f"({self.num.text()})/{den}"

    def __repr__(self):
        return f"RootFraction({self.text()})"


class NonPolynomialOutput:
    """Flagged result of applying an operator whose denominators do not clear."""

    __slots__ = ("fraction",)

    def __init__(self, fraction: RootFraction):
        self.fraction = fraction

    def __repr__(self):
        return f"NonPolynomialOutput({self.fraction.text()})"


class ReflDiffOperator:
    """Finite sum of (RootFraction) * d^beta * w, merged on (beta, w)."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms: dict | None = None):
        self.rs = rs
        self.terms: dict[tuple[Expo, Mat], RootFraction] = {}
        if terms:
            for key, c in terms.items():
                if not c.is_zero():
                    self.terms[key] = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, rs: RootSystem) -> "ReflDiffOperator":
        return cls(rs)

    @classmethod
    def identity(cls, rs: RootSystem) -> "ReflDiffOperator":
        return cls.multiplication(rs, Polynomial.one(rs.rank))

    @classmethod
    def multiplication(cls, rs: RootSystem, f) -> "ReflDiffOperator":
        if isinstance(f, Polynomial):
            f = RootFraction(rs, f)
        key = ((0,) * rs.rank, rs.identity_element())
        return cls(rs, {key: f})

    @classmethod
    def partial(cls, rs: RootSystem, beta: Expo, coeff=1) -> "ReflDiffOperator":
        key = (tuple(beta), rs.identity_element())
        return cls(rs, {key: RootFraction.from_scalar(rs, coeff)})

    @classmethod
    def directional(cls, rs: RootSystem, y) -> "ReflDiffOperator":
        """The derivative along the vector y."""
        terms = {}
        for i, c in enumerate(y):
            if c:
                beta = tuple(1 if k == i else 0 for k in range(rs.rank))
                terms[(beta, rs.identity_element())] = RootFraction.from_scalar(rs, c)
        return cls(rs, terms)

    @classmethod
    def group(cls, rs: RootSystem, w: Mat) -> "ReflDiffOperator":
        key = ((0,) * rs.rank, w)
        return cls(rs, {key: RootFraction.from_scalar(rs, 1)})

    # -- linear structure -------------------------------------------------

    def __add__(self, other: "ReflDiffOperator") -> "ReflDiffOperator":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms[key] + c if key in terms else c
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return ReflDiffOperator(self.rs, terms)

    def __neg__(self) -> "ReflDiffOperator":
        return ReflDiffOperator(self.rs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ReflDiffOperator") -> "ReflDiffOperator":
        return self + (-other)

    def scale(self, c) -> "ReflDiffOperator":
        return ReflDiffOperator(self.rs, {k: v * c for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReflDiffOperator)
            and self.rs is other.rs
            and self.terms == other.terms
        )

    # -- composition ------------------------------------------------------

    def _conjugated_partial(self, w: Mat, beta: Expo) -> dict[Expo, Q]:
        """w d^beta w^{-1} as a constant-coefficient operator."""
        cache = self.rs.__dict__.setdefault("_conj_partial_cache", {})
        key = (w, beta)
        if key in cache:
            return cache[key]
        n = self.rs.rank
        result: dict[Expo, Q] = {(0,) * n: Q(1)}
        for i, k in enumerate(beta):
            for _ in range(k):
                nxt: dict[Expo, Q] = {}
                for e, c in result.items():
                    for j in range(n):
                        wj = w[j][i]  # w d_{e_i} w^{-1} = d_{w(e_i)}
                        if wj:
                            ne = list(e)
                            ne[j] += 1
                            ne = tuple(ne)
                            nxt[ne] = nxt.get(ne, Q(0)) + c * wj
                result = {e: c for e, c in nxt.items() if c}
        cache[key] = result
        return result

    def compose(self, other: "ReflDiffOperator") -> "ReflDiffOperator":
        rs = self.rs
        out: dict[tuple[Expo, Mat], RootFraction] = {}
        for (b1, w1), c1 in self.terms.items():
            for (b2, w2), c2 in other.terms.items():
                c2w = c2.act(w1)
                conj = self._conjugated_partial(w1, b2)
                w12 = rs.multiply(w1, w2)
                for gamma, leib_coeff, dcoeff in _leibniz(b1, c2w):
                    base = (c1 * dcoeff) * leib_coeff
                    if base.is_zero():
                        continue
                    for g2, cc in conj.items():
                        total = tuple(a + b for a, b in zip(gamma, g2))
                        key = (total, w12)
                        val = base * cc
                        if key in out:
                            s = out[key] + val
                            if s.is_zero():
                                out.pop(key)
                            else:
                                out[key] = s
                        else:
                            out[key] = val
        return ReflDiffOperator(rs, out)

    def commutator(self, other: "ReflDiffOperator") -> "ReflDiffOperator":
        return self.compose(other) - other.compose(self)

    # -- application ------------------------------------------------------

    def apply(self, f: Polynomial):
        """Apply to a polynomial; returns a Polynomial, or a flagged
        NonPolynomialOutput when a denominator fails to divide out."""
        rs = self.rs
        total = RootFraction.zero(rs, f.nvars)
        for (beta, w), c in self.terms.items():
            g = rs.coordinate_ring_action(w, f)
            for i, k in enumerate(beta):
                for _ in range(k):
                    g = g.derivative(i)
            if g.is_zero():
                continue
            total = total + c * g
        if total.is_polynomial():
            return total.polynomial()
        return NonPolynomialOutput(total)

    # -- invariants of the operator ----------------------------------------

    def order(self) -> int:
        return max((sum(b) for b, _ in self.terms), default=0)

    def has_reflection_terms(self) -> bool:
        e = self.rs.identity_element()
        return any(w != e for _, w in self.terms)

    def weight(self) -> int:
        """C*-weight; requires homogeneity (raises otherwise)."""
        weights = set()
        for (b, _w), c in self.terms.items():
            if not c.is_homogeneous():
                raise ValueError("coefficient not homogeneous under dilations")
            weights.add(c.degree() - sum(b))
        if not weights:
            return 0
        if len(weights) > 1:
            raise ValueError(f"operator not homogeneous: weights {sorted(weights)}")
        return weights.pop()

    def flat_degree(self) -> int:
        """Termwise flat-filtration degree: max over terms of deg(coefficient),
        with constant-coefficient operators in degree 0."""
        if self.has_reflection_terms():
            raise ValueError("flat degree is defined for operators without reflection terms")
        if self.is_zero():
            raise ValueError("flat degree of the zero operator")
        return max(c.degree() for c in self.terms.values())

    def principal_symbol(self) -> Polynomial:
        """Top-order part as a polynomial in (x, xi); xi variables follow x."""
        r = self.order()
        n = self.rs.rank
        out = Polynomial.zero(2 * n)
        e = self.rs.identity_element()
        for (b, w), c in self.terms.items():
            if sum(b) != r:
                continue
            if w != e:
                raise ValueError("principal symbol undefined: reflection at top order")
            coeff = c.polynomial()  # raises when the symbol is not polynomial
            xi = Polynomial.monomial(tuple([0] * n + list(b)))
            out = out + coeff.extend_vars(2 * n) * xi
        return out

    def symbol_is_polynomial(self) -> bool:
        r = self.order()
        return all(
            c.is_polynomial() for (b, _w), c in self.terms.items() if sum(b) == r
        )

    # -- text ----------------------------------------------------------------

    def text(self) -> str:
        if not self.terms:
            return "0"
        e = self.rs.identity_element()
        elems = sorted({w for _, w in self.terms})
        names = {w: f"w{elems.index(w)}" for w in elems}
        pieces = []
        for (b, w) in sorted(self.terms, key=lambda k: (-sum(k[0]), tuple(-x for x in k[0]), k[1])):
            c = self.terms[(b, w)]
            part = c.text()
            ds = "*".join(
                f"d{i + 1}" if k == 1 else f"d{i + 1}^{k}" for i, k in enumerate(b) if k
            )
            if ds:
                part = f"({part})*{ds}" if ("+" in part or "- " in part or "/" in part) else (
                    ds if part == "1" else (f"-{ds}" if part == "-1" else f"{part}*{ds}")
                )
            if w != e:
                part = f"{part}*[{names[w]}]"
            pieces.append(part)
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"ReflDiffOperator({self.text()})"


def _leibniz(beta: Expo, coeff: RootFraction):
    """Yield (gamma, binomial product, d^{beta-gamma} coeff) over gamma <= beta."""
    ranges = [range(k + 1) for k in beta]
    deriv_cache: dict[Expo, RootFraction] = {(0,) * len(beta): coeff}

    def get_deriv(e: Expo) -> RootFraction:
        if e in deriv_cache:
            return deriv_cache[e]
        i = next(k for k, v in enumerate(e) if v)
        prev = list(e)
        prev[i] -= 1
        base = get_deriv(tuple(prev))
        out = base.derivative(i)
        deriv_cache[e] = out
        return out

    for gamma in iter_product(*ranges):
        delta = tuple(b - g for b, g in zip(beta, gamma))
        d = get_deriv(delta)
        if d.is_zero():
            continue
        yield tuple(gamma), _multi_comb(beta, gamma), d


def _multi_comb(beta: Expo, gamma: Expo) -> int:
    out = 1
    for b, g in zip(beta, gamma):
        out *= comb(b, g)
    return out


# ---------------------------------------------------------------------
# the named operators
# ---------------------------------------------------------------------


def dunkl(rs: RootSystem, c: MultiplicityFunction, y) -> ReflDiffOperator:
    """Dunkl operator T_y = d_y - sum_{alpha>0} c_alpha <alpha,y>/alpha (1 - s_alpha).

    The sign convention is pinned by requiring [T_y, x] to reproduce the
    defining commutation relation, which is verified in the test suite.
    """
    y = tuple(Q(v) for v in y)
    op = ReflDiffOperator.directional(rs, y)
    e_key = ((0,) * rs.rank, rs.identity_element())
    terms: dict[tuple[Expo, Mat], RootFraction] = dict(op.terms)
    for i in range(len(rs.positive_roots)):
        ca = c.of_root(i)
        pairing = rs.pair(rs.positive_roots[i], y)
        if not ca or not pairing:
            continue
        frac = RootFraction(
            rs, Polynomial.constant(rs.rank, ca * pairing), ((i, 1),)
        )
        for key, val in ((e_key, -frac), (((0,) * rs.rank, rs.reflections[i]), frac)):
            if key in terms:
                s = terms[key] + val
                if s.is_zero():
                    terms.pop(key)
                else:
                    terms[key] = s
            else:
                terms[key] = val
    return ReflDiffOperator(rs, terms)


def dunkl_basis(rs: RootSystem, c: MultiplicityFunction) -> list[ReflDiffOperator]:
    """Dunkl operators along the coordinate basis vectors of h."""
    return [
        dunkl(rs, c, [1 if j == i else 0 for j in range(rs.rank)]) for i in range(rs.rank)
    ]


def form_laplacian(rs: RootSystem) -> ReflDiffOperator:
    n = rs.rank
    binv = rs._form_inv
    terms: dict[tuple[Expo, Mat], RootFraction] = {}
    e = rs.identity_element()
    for i in range(n):
        for j in range(n):
            if binv[i][j]:
                beta = tuple((2 if k == i else 0) if i == j else (1 if k in (i, j) else 0) for k in range(n))
                key = (beta, e)
                val = RootFraction.from_scalar(rs, binv[i][j])
                terms[key] = terms[key] + val if key in terms else val
    return ReflDiffOperator(rs, {k: v for k, v in terms.items() if not v.is_zero()})


def calogero_moser(rs: RootSystem, c: MultiplicityFunction) -> ReflDiffOperator:
    """L_c = Laplacian - sum_{alpha>0} (2 c_alpha / alpha) d_alpha.

    d_alpha differentiates along the vector metric-dual to alpha, so each
    summand is invariant under rescaling of the root.
    """
    op = form_laplacian(rs)
    for i in range(len(rs.positive_roots)):
        ca = c.of_root(i)
        if not ca:
            continue
        v = rs.metric_dual(rs.positive_roots[i])
        terms = {}
        for k, vk in enumerate(v):
            if vk:
                beta = tuple(1 if a == k else 0 for a in range(rs.rank))
                terms[(beta, rs.identity_element())] = RootFraction(
                    rs, Polynomial.constant(rs.rank, -2 * ca * vk), ((i, 1),)
                )
        op = op + ReflDiffOperator(rs, terms)
    return op


def squared_norm_x(rs: RootSystem) -> Polynomial:
    """The squared norm function x -> (x,x) as a polynomial on h."""
    n = rs.rank
    out = Polynomial.zero(n)
    for i in range(n):
        for j in range(n):
            if rs.invariant_form[i][j]:
                e = [0] * n
                e[i] += 1
                e[j] += 1
                out = out + Polynomial.monomial(tuple(e), rs.invariant_form[i][j])
    return out


def squared_norm_y_operator(rs: RootSystem, c: MultiplicityFunction) -> ReflDiffOperator:
    """The dual squared norm realized through Dunkl operators:
    sum_{ij} (B^{-1})_{ij} T_i T_j."""
    ts = dunkl_basis(rs, c)
    out = ReflDiffOperator.zero(rs)
    binv = rs._form_inv
    for i in range(rs.rank):
        for j in range(rs.rank):
            if binv[i][j]:
                out = out + ts[i].compose(ts[j]).scale(binv[i][j])
    return out


def euler_element(rs: RootSystem, c: MultiplicityFunction) -> ReflDiffOperator:
    """h = (1/2) sum_i (x_i T_i + T_i x_i) in the Dunkl representation."""
    ts = dunkl_basis(rs, c)
    out = ReflDiffOperator.zero(rs)
    for i in range(rs.rank):
        xi = ReflDiffOperator.multiplication(rs, Polynomial.variable(rs.rank, i))
        out = out + xi.compose(ts[i]) + ts[i].compose(xi)
    return out.scale(Q(1, 2))


def dual_pairing_polynomial(rs: RootSystem, f: Polynomial) -> Polynomial:
    """Transport f in C[h] to C[h*] via the invariant form: f(B^{-1} k)."""
    binv = [list(row) for row in rs._form_inv]
    return f.compose_linear(binv)
