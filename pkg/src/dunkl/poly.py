"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero Fractions.  All
operations are pure; instances are never mutated after construction.

Canonical text form (used by the CLI and cache files): terms sorted by
total degree, then lexicographically on the exponent tuple, both
descending; coefficients printed as ``p`` or ``p/q``; variables are
``x1, x2, ...`` (callers may rename, e.g. ``k1..`` for dual variables).
"""

from __future__ import annotations

from fractions import Fraction as Q
from functools import lru_cache
from itertools import combinations_with_replacement

from . import linalg

Expo = tuple[int, ...]


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Expo, Q] | None = None):
        self.nvars = nvars
        self.terms: dict[Expo, Q] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[e] = Q(c)

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Q(c)})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "Polynomial":
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): Q(1)})

    @classmethod
    def linear_form(cls, coeffs) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = Q(c)
        return cls(n, terms)

    @classmethod
    def monomial(cls, expo: Expo, coeff=1) -> "Polynomial":
        return cls(len(expo), {tuple(expo): Q(coeff)})

    # -- ring operations ----------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Q(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = Polynomial(self.nvars)
        out.terms = terms
        return out

    def __neg__(self) -> "Polynomial":
        out = Polynomial(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict[Expo, Q] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Q(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = Polynomial(self.nvars)
        p.terms = out
        return p

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        c = Q(c)
        out = Polynomial(self.nvars)
        if c:
            out.terms = {e: c * v for e, v in self.terms.items()}
        return out

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        out = Polynomial(self.nvars)
        out.terms = {e: c for e, c in self.terms.items() if sum(e) == d}
        return out

    def graded_parts(self) -> dict[int, "Polynomial"]:
        parts: dict[int, Polynomial] = {}
        for e, c in self.terms.items():
            d = sum(e)
            parts.setdefault(d, Polynomial(self.nvars)).terms[e] = c
        return parts

    def constant_term(self) -> Q:
        return self.terms.get((0,) * self.nvars, Q(0))

    def coefficient(self, expo: Expo) -> Q:
        return self.terms.get(tuple(expo), Q(0))

    # -- calculus / substitution ---------------------------------------

    def derivative(self, i: int) -> "Polynomial":
        out = Polynomial(self.nvars)
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out.terms[tuple(ne)] = c * e[i]
        return out

    def compose_linear(self, m: linalg.Mat) -> "Polynomial":
        """Substitute x_i -> sum_j m[i][j] x_j, i.e. f(M x)."""
        forms = [Polynomial.linear_form(row) for row in m]
        out = Polynomial.zero(self.nvars)
        cache: dict[tuple[int, int], Polynomial] = {}

        def var_pow(i: int, k: int) -> Polynomial:
            key = (i, k)
            if key not in cache:
                cache[key] = forms[i] ** k
            return cache[key]

        for e, c in self.terms.items():
            term = Polynomial.constant(self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * var_pow(i, k)
            out = out + term
        return out

    def substitute(self, values: list["Polynomial"]) -> "Polynomial":
        """General substitution x_i -> values[i] (polynomials in any nvars)."""
        nv = values[0].nvars
        out = Polynomial.zero(nv)
        for e, c in self.terms.items():
            term = Polynomial.constant(nv, c)
            for i, k in enumerate(e):
                if k:
                    term = term * (values[i] ** k)
            out = out + term
        return out

    def evaluate(self, point: list[Q]) -> Q:
        total = Q(0)
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v *= Q(point[i]) ** k
            total += v
        return total

    def extend_vars(self, nvars: int, offset: int = 0) -> "Polynomial":
        """Re-embed into a larger variable set, shifting indices by offset."""
        out = Polynomial(nvars)
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                ne[offset + i] = k
            out.terms[tuple(ne)] = c
        return out

    # -- text form -----------------------------------------------------

    def text(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        pieces = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("- " if c < 0 else "+ ") + body)
        head = pieces[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([head] + pieces[1:])

    @classmethod
    def parse(cls, s: str, nvars: int, names: list[str] | None = None) -> "Polynomial":
        """Inverse of text() for the canonical form."""
        if names is None:
            names = [f"x{i + 1}" for i in range(nvars)]
        index = {n: i for i, n in enumerate(names)}
        s = s.strip()
        if s == "0":
            return cls.zero(nvars)
        s = s.replace("- ", "+ -").replace("+ ", "\x00")
        chunks = [c.strip() for c in s.split("\x00") if c.strip()]
        out = cls.zero(nvars)
        for chunk in chunks:
            sign = 1
            if chunk.startswith("-"):
                sign = -1
                chunk = chunk[1:]
            coeff = Q(1)
            expo = [0] * nvars
            for factor in chunk.split("*"):
                factor = factor.strip()
                if not factor:
                    continue
                if factor[0].isdigit():
                    coeff *= Q(factor)
                else:
                    if "^" in factor:
                        name, p = factor.split("^")
                        expo[index[name]] += int(p)
                    else:
                        expo[index[factor]] += 1
            out = out + cls.monomial(tuple(expo), sign * coeff)
        return out

    def __repr__(self):
        return f"Polynomial({self.text()})"


# ---------------------------------------------------------------------
# monomial bases and graded linear algebra
# ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[Expo, ...]:
    """Degree-d exponent tuples in descending lexicographic order."""
    if degree < 0:
        return ()
    combos = combinations_with_replacement(range(nvars), degree)
    expos = set()
    for combo in combos:
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        expos.add(tuple(e))
    return tuple(sorted(expos, reverse=True))


def monomials_upto(nvars: int, degree: int) -> list[Expo]:
    out: list[Expo] = []
    for d in range(degree + 1):
        out.extend(monomials(nvars, d))
    return out


def act(w: linalg.Mat, f: Polynomial, w_inv: linalg.Mat | None = None) -> Polynomial:
    """Group action (w.f)(x) = f(w^{-1} x); a ring homomorphism."""
    if len(w) != f.nvars:
        raise ValueError("dimension mismatch between group element and polynomial")
    if w_inv is None:
        w_inv = linalg.mat_inv(w)
    return f.compose_linear(w_inv)


class DivisionWitness:
    """First failing Taylor coefficient in the direction of a linear form.

    ``order`` is the power at which division failed; ``coefficient`` is
    the nonzero remainder living on the hyperplane chart.
    """

    __slots__ = ("order", "coefficient")

    def __init__(self, order: int, coefficient: Polynomial):
        self.order = order
        self.coefficient = coefficient

    def __repr__(self):
        return f"DivisionWitness(order={self.order}, coefficient={self.coefficient.text()})"


def divide_by_linear_power(
    f: Polynomial, alpha: Polynomial, m: int
) -> tuple[Polynomial | None, DivisionWitness | None]:
    """Exact division f / alpha^m for a linear form alpha.

    Returns (quotient, None) on success and (None, witness) otherwise.
    Division is long division in a pivot variable of alpha, which is
    exact because the pivot coefficient is a unit.
    """
    if m < 0:
        raise ValueError("negative power")
    if alpha.is_zero() or alpha.degree() != 1 or not alpha.is_homogeneous():
        raise ValueError("divisor must be a nonzero homogeneous linear form")
    g = f
    for step in range(m):
        q, r = _divide_once(g, alpha)
        if not r.is_zero():
            return None, DivisionWitness(step, r)
        g = q
    return g, None


def _divide_once(f: Polynomial, alpha: Polynomial) -> tuple[Polynomial, Polynomial]:
    """f = alpha*q + r with r free of the pivot variable of alpha."""
    coeffs = [Q(0)] * f.nvars
    for e, c in alpha.terms.items():
        coeffs[e.index(1)] = c
    j = next(i for i, c in enumerate(coeffs) if c)
    a_j = coeffs[j]
    quotient = Polynomial.zero(f.nvars)
    rem = f
    while True:
        top = max((e[j] for e in rem.terms), default=0)
        if top == 0:
            return quotient, rem
        # peel the highest x_j-degree layer
        layer = Polynomial(f.nvars)
        for e, c in rem.terms.items():
            if e[j] == top:
                ne = list(e)
                ne[j] = top - 1
                layer.terms[tuple(ne)] = c / a_j
        quotient = quotient + layer
        rem = rem - alpha * layer


def taylor_coefficients_along(
    f: Polynomial, alpha: Polynomial, m: int
) -> list[Polynomial]:
    """The first m Taylor coefficients of f in the alpha-direction:
    f = sum_s r_s alpha^s + alpha^m * (...), each r_s free of the pivot
    variable of alpha.  This map is linear in f, unlike the
    first-failure witness of divide_by_linear_power."""
    out = []
    g = f
    for _ in range(m):
        g, r = _divide_once(g, alpha)
        out.append(r)
    return out


def graded_nullspace(
    nvars: int, degree: int, constraints: list
) -> list[Polynomial]:
    """Joint kernel of linear maps on the degree-d monomial space.

    Each constraint is a callable Polynomial -> Polynomial (in any
    output variable space).  The returned basis is exact, integer with
    content 1, pivoted in graded-lexicographic monomial order.
    """
    basis = monomials(nvars, degree)
    if not basis:
        return []
    columns = [Polynomial.monomial(e) for e in basis]
    rows: list[list[Q]] = []
    for constraint in constraints:
        images = [constraint(p) for p in columns]
        out_expos = sorted({e for img in images for e in img.terms}, reverse=True)
        for oe in out_expos:
            rows.append([img.terms.get(oe, Q(0)) for img in images])
    if not rows:
        vecs = [[Q(1) if i == k else Q(0) for i in range(len(basis))] for k in range(len(basis))]
    else:
        vecs = linalg.nullspace(rows)
    out = []
    for v in vecs:
        p = Polynomial(nvars)
        for e, c in zip(basis, v):
            if c:
                p.terms[e] = c
        out.append(p)
    return out
