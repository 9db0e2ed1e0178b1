"""Rationally realized root systems and their Coxeter groups.

Supported labels: A_n (n>=1), B_n (n>=2), D_n (n>=4), G_2.  Type A is
realized on the sum-zero hyperplane of the ambient permutation space
(rank 1 uses the unit-length convention alpha = x so that the rank-one
Calogero-Moser operator is exactly d^2 - (2c/x) d).  G_2 lives in the
sum-zero plane of a 3-space.  All data (roots, coroots, reflections,
invariant form, group elements, character table) is exact rational.

Character tables are computed from scratch by splitting the central
characters with random integer combinations of class-sum structure
matrices, then verified against both orthogonality relations; nothing
is hardcoded.
"""

from __future__ import annotations

import random
from fractions import Fraction as Q
from functools import lru_cache

from . import linalg
from .poly import Polynomial, act, monomials

Mat = tuple[tuple[Q, ...], ...]
Vec = tuple[Q, ...]

SUPPORTED = ("A", "B", "D", "G")


class UnsupportedRootSystem(ValueError):
    pass


class GroupSizeError(ValueError):
    pass


def _freeze(m: list[list[Q]]) -> Mat:
    return tuple(tuple(Q(x) for x in row) for row in m)


def _thaw(m: Mat) -> list[list[Q]]:
    return [list(row) for row in m]


class RootSystem:
    """Root data on a rational model of the reflection representation h.

    positive_roots are covectors on h (coefficient tuples in the chosen
    basis), coroots are vectors, normalized so <alpha, alpha_vee> = 2.
    """

    def __init__(self, label: str, rank: int):
        label = label.upper()
        if label not in SUPPORTED:
            raise UnsupportedRootSystem(
                f"irrational realization unsupported for label {label!r} "
                "(supported: A, B, D, G_2)"
            )
        self.cartan_label = label
        self.rank = rank
        self._inv_cache: dict[Mat, Mat] = {}
        pos, amb_basis, amb_dim = _ambient_positive_roots(label, rank)
        # basis of h inside the ambient space; roots/coroots in h-coordinates
        gram = [
            [sum(amb_basis[i][k] * amb_basis[j][k] for k in range(amb_dim)) for j in range(rank)]
            for i in range(rank)
        ]
        self.invariant_form: Mat = _freeze(gram)
        self._form_inv: Mat = _freeze(linalg.mat_inv(_thaw(self.invariant_form)))
        self.positive_roots: list[Vec] = []
        self.coroots: list[Vec] = []
        for av in pos:  # ambient covector -> h covector alpha(b_i)
            alpha = tuple(
                sum(Q(av[k]) * amb_basis[i][k] for k in range(amb_dim)) for i in range(rank)
            )
            # metric dual and coroot: alpha_vee = 2 B^{-1} alpha / (alpha, alpha)_*
            dual = linalg.mat_vec(_thaw(self._form_inv), list(alpha))
            norm = sum(a * d for a, d in zip(alpha, dual))
            coroot = tuple(2 * d / norm for d in dual)
            self.positive_roots.append(alpha)
            self.coroots.append(coroot)
        self._root_lookup: dict[Vec, tuple[int, int]] = {}
        for i, a in enumerate(self.positive_roots):
            self._root_lookup[a] = (i, 1)
            self._root_lookup[tuple(-x for x in a)] = (i, -1)
        self.reflections: list[Mat] = [
            self._reflection_matrix(i) for i in range(len(self.positive_roots))
        ]
        self.orbits: list[list[int]] = self._root_orbits()

    # -- elementary geometry -------------------------------------------

    def _reflection_matrix(self, i: int) -> Mat:
        alpha, coroot = self.positive_roots[i], self.coroots[i]
        n = self.rank
        m = [[Q(1) if r == c else Q(0) for c in range(n)] for r in range(n)]
        for r in range(n):
            for c in range(n):
                m[r][c] -= coroot[r] * alpha[c]
        return _freeze(m)

    def pair(self, alpha: Vec, v: Vec) -> Q:
        """Canonical pairing <alpha, v> of a covector with a vector."""
        return sum((a * x for a, x in zip(alpha, v)), Q(0))

    def form(self, u: Vec, v: Vec) -> Q:
        return sum(
            (self.invariant_form[i][j] * u[i] * v[j] for i in range(self.rank) for j in range(self.rank)),
            Q(0),
        )

    def metric_dual(self, alpha: Vec) -> Vec:
        """Vector in h metric-dual to the covector alpha."""
        return tuple(linalg.mat_vec(_thaw(self._form_inv), list(alpha)))

    def act_vector(self, w: Mat, v: Vec) -> Vec:
        return tuple(linalg.mat_vec(_thaw(w), list(v)))

    def act_covector(self, w: Mat, alpha: Vec) -> Vec:
        """w . alpha = alpha o w^{-1}."""
        wi = self.inverse(w)
        return tuple(
            sum(alpha[r] * wi[r][c] for r in range(self.rank)) for c in range(self.rank)
        )

    def inverse(self, w: Mat) -> Mat:
        if w not in self._inv_cache:
            self._inv_cache[w] = _freeze(linalg.mat_inv(_thaw(w)))
        return self._inv_cache[w]

    def multiply(self, w1: Mat, w2: Mat) -> Mat:
        return _freeze(linalg.mat_mul(_thaw(w1), _thaw(w2)))

    def identity_element(self) -> Mat:
        return _freeze(linalg.identity(self.rank))

    def root_image(self, w: Mat, i: int) -> tuple[int, int]:
        """Index and sign of w . alpha_i in the positive root list."""
        img = self.act_covector(w, self.positive_roots[i])
        return self._root_lookup[img]

    def _root_orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        orbits: list[list[int]] = []
        for i in range(len(self.positive_roots)):
            if i in seen:
                continue
            orbit = {i}
            frontier = [i]
            while frontier:
                j = frontier.pop()
                for s in self.reflections:
                    k, _ = self._root_lookup[self.act_covector(s, self.positive_roots[j])]
                    if k not in orbit:
                        orbit.add(k)
                        frontier.append(k)
            orbits.append(sorted(orbit))
            seen |= orbit
        orbits.sort(key=lambda o: o[0])
        return orbits

    def orbit_of_root(self, i: int) -> int:
        for k, orbit in enumerate(self.orbits):
            if i in orbit:
                return k
        raise ValueError(f"root index {i} out of range")

    def orbit_names(self) -> list[str]:
        if len(self.orbits) == 1:
            return ["all"]
        # shorter roots first by squared length (B/G convention: short, long)
        def sq(orbit):
            a = self.positive_roots[orbit[0]]
            d = self.metric_dual(a)
            return self.pair(a, d)

        return ["short" if sq(o) == min(sq(p) for p in self.orbits) else "long" for o in self.orbits]

    # -- polynomials on h ------------------------------------------------

    def root_polynomial(self, i: int) -> Polynomial:
        return Polynomial.linear_form(self.positive_roots[i])

    def coordinate_ring_action(self, w: Mat, f: Polynomial) -> Polynomial:
        return act(_thaw(w), f, w_inv=_thaw(self.inverse(w)))

    def __repr__(self):
        return f"RootSystem({self.cartan_label}{self.rank}, {len(self.positive_roots)} positive roots)"


def _ambient_positive_roots(label: str, rank: int):
    """Positive roots as ambient covectors plus a rational basis of h."""
    if label == "A":
        if rank < 1:
            raise UnsupportedRootSystem("A_n needs n >= 1")
        n = rank + 1
        if rank == 1:
            # unit normalization: single root alpha = x on h = Q
            return [(Q(1),)], [(Q(1),)], 1
        basis = []
        for i in range(rank):
            v = [Q(0)] * n
            v[i], v[i + 1] = Q(1), Q(-1)
            basis.append(tuple(v))
        pos = []
        for i in range(n):
            for j in range(i + 1, n):
                a = [Q(0)] * n
                a[i], a[j] = Q(1), Q(-1)
                pos.append(tuple(a))
        return pos, basis, n
    if label == "B":
        if rank < 2:
            raise UnsupportedRootSystem("B_n needs n >= 2")
        basis = [tuple(Q(1) if j == i else Q(0) for j in range(rank)) for i in range(rank)]
        pos = [tuple(Q(1) if j == i else Q(0) for j in range(rank)) for i in range(rank)]
        for i in range(rank):
            for j in range(i + 1, rank):
                for sj in (Q(-1), Q(1)):
                    a = [Q(0)] * rank
                    a[i], a[j] = Q(1), sj
                    pos.append(tuple(a))
        return pos, basis, rank
    if label == "D":
        if rank < 4:
            raise UnsupportedRootSystem("D_n needs n >= 4")
        basis = [tuple(Q(1) if j == i else Q(0) for j in range(rank)) for i in range(rank)]
        pos = []
        for i in range(rank):
            for j in range(i + 1, rank):
                for sj in (Q(-1), Q(1)):
                    a = [Q(0)] * rank
                    a[i], a[j] = Q(1), sj
                    pos.append(tuple(a))
        return pos, basis, rank
    if label == "G":
        if rank != 2:
            raise UnsupportedRootSystem("G_2 has rank 2")
        basis = [(Q(1), Q(-1), Q(0)), (Q(0), Q(1), Q(-1))]
        short = [(1, -1, 0), (0, 1, -1), (1, 0, -1)]
        long = [(2, -1, -1), (-1, 2, -1), (1, 1, -2)]
        pos = [tuple(Q(x) for x in a) for a in short + long]
        return pos, basis, 3
    raise UnsupportedRootSystem(label)


def build_root_system(label: str, rank: int) -> RootSystem:
    rs = RootSystem(label, rank)
    _sanity_check(rs)
    return rs


def _sanity_check(rs: RootSystem):
    for i, alpha in enumerate(rs.positive_roots):
        coroot = rs.coroots[i]
        assert rs.pair(alpha, coroot) == 2
        s = rs.reflections[i]
        assert rs.act_vector(s, coroot) == tuple(-x for x in coroot)
        # the invariant form is W-invariant
        m = _thaw(s)
        b = _thaw(rs.invariant_form)
        assert linalg.mat_mul(linalg.mat_mul(linalg.transpose(m), b), m) == b


class MultiplicityFunction:
    """W-invariant multiplicity c: one rational per root orbit."""

    def __init__(self, rs: RootSystem, values):
        self.rs = rs
        if not isinstance(values, (list, tuple)):
            values = [values] * len(rs.orbits)
        if len(values) != len(rs.orbits):
            raise ValueError(
                f"{rs.cartan_label}{rs.rank} has {len(rs.orbits)} root orbit(s), got {len(values)} value(s)"
            )
        self.orbit_values: tuple[Q, ...] = tuple(Q(v) for v in values)

    def of_root(self, i: int) -> Q:
        return self.orbit_values[self.rs.orbit_of_root(i)]

    def is_nonnegative_integer(self) -> bool:
        return all(v.denominator == 1 and v >= 0 for v in self.orbit_values)

    def total(self) -> Q:
        """Sum over positive roots (the shift-operator order d)."""
        return sum((self.of_root(i) for i in range(len(self.rs.positive_roots))), Q(0))

    def shifted_by_sign_set(self, root_in_set) -> "MultiplicityFunction":
        """c - 1_eps for an orbitwise indicator function on roots."""
        vals = []
        for k, orbit in enumerate(self.rs.orbits):
            flag = root_in_set(orbit[0])
            assert all(root_in_set(i) == flag for i in orbit), "indicator not W-invariant"
            vals.append(self.orbit_values[k] - (1 if flag else 0))
        return MultiplicityFunction(self.rs, vals)

    def key(self) -> str:
        return ",".join(str(v) for v in self.orbit_values)

    def __repr__(self):
        return f"MultiplicityFunction({self.key()})"


# ---------------------------------------------------------------------
# group data: elements, classes, character table
# ---------------------------------------------------------------------


class GroupData:
    def __init__(self, rs: RootSystem, elements, classes, character_table, class_of):
        self.rs = rs
        self.elements: list[Mat] = elements
        self.classes: list[list[int]] = classes
        self.character_table: list[list[int]] = character_table
        self.class_of: dict[Mat, int] = class_of
        self.index_of: dict[Mat, int] = {w: i for i, w in enumerate(elements)}
        self.class_sizes = [len(c) for c in classes]
        self.linear_characters = [
            row for row in character_table if row[self.class_of[rs.identity_element()]] == 1
        ]
        self._irrep_cache: dict[int, list[linalg.Mat]] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def dim(self, tau: int) -> int:
        return self.character_table[tau][self.class_of[self.rs.identity_element()]]

    def char_value(self, tau: int, w: Mat) -> int:
        return self.character_table[tau][self.class_of[w]]

    def reflection_class(self, root_index: int) -> int:
        return self.class_of[self.rs.reflections[root_index]]

    def trivial_index(self) -> int:
        for t, row in enumerate(self.character_table):
            if all(v == 1 for v in row):
                return t
        raise RuntimeError("trivial character missing")

    def determinant_index(self) -> int:
        """The sign character w -> det(w|h)."""
        want = []
        for cls in self.classes:
            w = self.elements[cls[0]]
            d = _det(_thaw(w))
            want.append(int(d))
        for t, row in enumerate(self.character_table):
            if row == want:
                return t
        raise RuntimeError("determinant character missing")

    def linear_character_signs(self, tau: int) -> list[int]:
        """epsilon(s_alpha) per positive root, for a linear character."""
        if self.dim(tau) != 1:
            raise ValueError("not a linear character")
        return [
            self.character_table[tau][self.reflection_class(i)]
            for i in range(len(self.rs.positive_roots))
        ]

    def irrep_matrices(self, tau: int) -> list[linalg.Mat]:
        """Exact rational matrices of the irreducible tau, one per element.

        Extracted from the first degree of C[h] where tau occurs with
        multiplicity one; verified against the character table.
        """
        if tau not in self._irrep_cache:
            self._irrep_cache[tau] = _extract_irrep(self, tau)
        return self._irrep_cache[tau]


def _det(m: list[list[Q]]) -> Q:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Q(0)
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * m[0][j] * _det(minor)
    return total


def group_data(rs: RootSystem, max_order: int = 10_000, seed: int = 0) -> GroupData:
    elements = _enumerate_group(rs, max_order)
    classes, class_of = _conjugacy_classes(rs, elements)
    table = _character_table(rs, elements, classes, class_of, seed)
    gd = GroupData(rs, elements, classes, table, class_of)
    _verify_orthogonality(gd)
    return gd


def _enumerate_group(rs: RootSystem, max_order: int) -> list[Mat]:
    gens = rs.reflections
    seen = {rs.identity_element()}
    frontier = [rs.identity_element()]
    while frontier:
        w = frontier.pop()
        for g in gens:
            wg = rs.multiply(g, w)
            if wg not in seen:
                if len(seen) >= max_order:
                    raise GroupSizeError(f"group order exceeds bound {max_order}")
                seen.add(wg)
                frontier.append(wg)
    ident = rs.identity_element()
    return [ident] + sorted(seen - {ident})


def _conjugacy_classes(rs: RootSystem, elements: list[Mat]):
    index = {w: i for i, w in enumerate(elements)}
    unassigned = set(range(len(elements)))
    classes: list[list[int]] = []
    class_of: dict[Mat, int] = {}
    while unassigned:
        start = min(unassigned)
        orbit = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            w = elements[i]
            for g in rs.reflections:
                c = index[rs.multiply(rs.multiply(g, w), rs.inverse(g))]
                if c not in orbit:
                    orbit.add(c)
                    frontier.append(c)
        cls = sorted(orbit)
        for i in cls:
            class_of[elements[i]] = len(classes)
        classes.append(cls)
        unassigned -= orbit
    order = sorted(range(len(classes)), key=lambda k: classes[k][0])
    classes = [classes[k] for k in order]
    renumber = {old: new for new, old in enumerate(order)}
    class_of = {w: renumber[c] for w, c in class_of.items()}
    return classes, class_of


def _class_structure_matrices(rs, elements, classes, class_of):
    """a[i][j][k] = #{(x,y) in C_i x C_j : x y = z_k} for fixed z_k."""
    index = {w: i for i, w in enumerate(elements)}
    k = len(classes)
    mats = []
    for i in range(k):
        a = [[0] * k for _ in range(k)]
        for kk in range(k):
            z = elements[classes[kk][0]]
            for xi in classes[i]:
                x = elements[xi]
                y = rs.multiply(rs.inverse(x), z)
                a[class_of[y]][kk] += 1
        mats.append(a)
    return mats


def _character_table(rs, elements, classes, class_of, seed: int) -> list[list[int]]:
    """Dixon-style splitting with exact integer eigenvalues."""
    k = len(classes)
    order = len(elements)
    struct = _class_structure_matrices(rs, elements, classes, class_of)
    ident_class = class_of[rs.identity_element()]
    rng = random.Random(seed)
    for _attempt in range(64):
        coeffs = [rng.randrange(0, 10) for _ in range(k)]
        m = [[Q(sum(coeffs[i] * struct[i][r][c] for i in range(k))) for c in range(k)] for r in range(k)]
        cp = linalg.charpoly(m)
        # eigenvalues sum_i coeffs_i * omega_tau(C_i) are integers bounded
        # by max(coeffs) * |W| since |chi(g)| <= chi(1)
        bound = max(coeffs, default=0) * order + 1
        roots = linalg.integer_roots(cp, bound)
        if len(roots) < k:
            continue
        eigvecs = []
        ok = True
        for lam in roots:
            shifted = [[m[r][c] - (Q(lam) if r == c else Q(0)) for c in range(k)] for r in range(k)]
            space = linalg.nullspace(shifted)
            if len(space) != 1:
                ok = False
                break
            eigvecs.append(space[0])
        if not ok or len(eigvecs) != k:
            continue
        rows = []
        for v in eigvecs:
            if v[ident_class] == 0:
                ok = False
                break
            omega = [x / v[ident_class] for x in v]
            denom = sum(w * w / len(classes[i]) for i, w in enumerate(omega))
            sq = Q(order) / denom
            assert sq.denominator == 1
            dim = linalg.exact_isqrt(int(sq))
            if dim is None:
                ok = False
                break
            row = []
            for i, w in enumerate(omega):
                chi = dim * w / len(classes[i])
                assert chi.denominator == 1, "non-integer character value"
                row.append(int(chi))
            rows.append(row)
        if not ok:
            continue
        rows.sort(key=lambda r: (r[ident_class], [-x for x in r]))
        return rows
    raise RuntimeError("character-table splitting failed to converge; try another seed")


def _verify_orthogonality(gd: GroupData):
    k = len(gd.classes)
    order = gd.order
    inv_class = []
    for cls in gd.classes:
        w = gd.elements[cls[0]]
        inv_class.append(gd.class_of[gd.rs.inverse(w)])
    for a in range(k):
        for b in range(k):
            s = sum(
                gd.class_sizes[i] * gd.character_table[a][i] * gd.character_table[b][inv_class[i]]
                for i in range(k)
            )
            assert s == (order if a == b else 0), "row orthogonality failed"
    for i in range(k):
        for j in range(k):
            s = sum(gd.character_table[a][i] * gd.character_table[a][inv_class[j]] for a in range(k))
            want = order // gd.class_sizes[i] if i == j else 0
            assert s == want, "column orthogonality failed"
    assert len(gd.character_table) == k


# ---------------------------------------------------------------------
# invariant theory series, discriminants, kappa
# ---------------------------------------------------------------------


def _det_one_minus_tw(rs: RootSystem, w: Mat) -> Polynomial:
    """det(1 - t w|_h) as a polynomial in one variable t."""
    n = rs.rank
    entries = [
        [
            Polynomial(1, {(0,): Q(1) if i == j else Q(0), (1,): -w[i][j]})
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(entries)


def _poly_det(m: list[list[Polynomial]]) -> Polynomial:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Polynomial.zero(m[0][0].nvars)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _series_inverse(p: Polynomial, n_terms: int) -> list[Q]:
    """Power-series inverse of a univariate polynomial with p(0) != 0."""
    c0 = p.constant_term()
    assert c0 != 0
    coeffs = [p.coefficient((d,)) for d in range(n_terms + 1)]
    inv = [Q(0)] * (n_terms + 1)
    inv[0] = 1 / c0
    for d in range(1, n_terms + 1):
        s = sum(coeffs[j] * inv[d - j] for j in range(1, d + 1))
        inv[d] = -s / c0
    return inv


def molien_series(rs: RootSystem, gd: GroupData, tau: int, n_terms: int) -> list[Q]:
    """Coefficients of the Poincare series of (tau (x) C[h])^W up to t^N."""
    if not 0 <= tau < len(gd.character_table):
        raise ValueError(f"invalid irreducible index {tau}")
    total = [Q(0)] * (n_terms + 1)
    for ci, cls in enumerate(gd.classes):
        w = gd.elements[cls[0]]
        inv = _series_inverse(_det_one_minus_tw(rs, w), n_terms)
        chi = gd.character_table[tau][ci]
        for d in range(n_terms + 1):
            total[d] += len(cls) * chi * inv[d]
    return [x / gd.order for x in total]


def discriminant(
    rs: RootSystem,
    c: MultiplicityFunction | None = None,
    variant: str = "plain",
    sign_values: list[int] | None = None,
) -> Polynomial:
    """delta = prod alpha (plain), prod alpha^{c_alpha} (c-weighted) or
    prod over the roots with eps(s_alpha) = -1 (eps-weighted)."""
    out = Polynomial.one(rs.rank)
    if variant == "plain":
        for i in range(len(rs.positive_roots)):
            out = out * rs.root_polynomial(i)
        return out
    if variant == "c-weighted":
        if c is None or not c.is_nonnegative_integer():
            raise ValueError("c-weighted discriminant needs nonnegative integer multiplicities")
        for i in range(len(rs.positive_roots)):
            out = out * rs.root_polynomial(i) ** int(c.of_root(i))
        return out
    if variant == "eps-weighted":
        if sign_values is None:
            raise ValueError("eps-weighted discriminant needs epsilon signs per root")
        for i in range(len(rs.positive_roots)):
            if sign_values[i] == -1:
                out = out * rs.root_polynomial(i)
        return out
    raise ValueError(f"unknown discriminant variant {variant!r}")


def kappa_scalar(rs: RootSystem, gd: GroupData, c: MultiplicityFunction, tau: int) -> Q:
    """Scalar action of (1/2) sum_{alpha in R} c_alpha (1 - s_alpha) on tau."""
    dim = gd.dim(tau)
    total = Q(0)
    for i in range(len(rs.positive_roots)):
        chi = gd.character_table[tau][gd.reflection_class(i)]
        total += c.of_root(i) * (1 - Q(chi, dim))
    return total


def invariant_dimension_bruteforce(rs: RootSystem, gd: GroupData, tau: int, d: int) -> int:
    """Independent oracle for the Molien coefficients: the rank of the
    tau-isotypic averaging projector on C^d[h] divided by dim tau.
    """
    basis = monomials(rs.rank, d)
    if not basis:
        return 0
    dim_tau = gd.dim(tau)
    cols = []
    for e in basis:
        f = Polynomial.monomial(e)
        img = Polynomial.zero(rs.rank)
        for w in gd.elements:
            chi = gd.char_value(tau, rs.inverse(w))
            if chi:
                img = img + rs.coordinate_ring_action(w, f).scale(chi)
        cols.append(img)
    rows = []
    for e in basis:
        rows.append([col.terms.get(e, Q(0)) for col in cols])
    r = linalg.rank(rows)
    assert r % dim_tau == 0
    return r // dim_tau


# ---------------------------------------------------------------------
# irreducible representation matrices
# ---------------------------------------------------------------------


def _action_matrix_on_degree(rs: RootSystem, w: Mat, d: int) -> linalg.Mat:
    basis = monomials(rs.rank, d)
    cols = []
    for e in basis:
        img = rs.coordinate_ring_action(w, Polynomial.monomial(e))
        cols.append([img.terms.get(b, Q(0)) for b in basis])
    return linalg.transpose(cols)


def _extract_irrep(gd: GroupData, tau: int, max_degree: int = 12) -> list[linalg.Mat]:
    rs = gd.rs
    dim = gd.dim(tau)
    if dim == 1:
        return [[[Q(gd.char_value(tau, w))]] for w in gd.elements]
    for d in range(1, max_degree + 1):
        # multiplicity of tau in C^d[h] from traces
        mult = Q(0)
        for ci, cls in enumerate(gd.classes):
            w = gd.elements[cls[0]]
            inv = _series_inverse(_det_one_minus_tw(rs, w), d)
            mult += len(cls) * gd.character_table[tau][ci] * inv[d]
        mult = mult / gd.order
        assert mult.denominator == 1
        if mult == 0:
            continue
        if mult > 1:
            continue  # wait for a multiplicity-one degree
        basis_mats = [_action_matrix_on_degree(rs, w, d) for w in gd.elements]
        nmon = len(monomials(rs.rank, d))
        proj = [[Q(0)] * nmon for _ in range(nmon)]
        for w, m in zip(gd.elements, basis_mats):
            chi = gd.char_value(tau, rs.inverse(w))
            if chi:
                for r in range(nmon):
                    row = m[r]
                    prow = proj[r]
                    for cidx in range(nmon):
                        if row[cidx]:
                            prow[cidx] += chi * row[cidx]
        scale = Q(dim, gd.order)
        proj = [[x * scale for x in row] for row in proj]
        red, pivots = linalg.rref(linalg.transpose(proj))
        span = [list(red[r]) for r in range(len(pivots))]
        if len(span) != dim:
            continue
        # matrices of each element in this basis
        reps: list[linalg.Mat] = []
        span_t = linalg.transpose(span)
        for w, m in zip(gd.elements, basis_mats):
            images = [linalg.mat_vec(m, v) for v in span]
            cols = []
            for img in images:
                x = linalg.solve(span_t, img)
                assert x is not None, "isotypic component is not W-stable"
                cols.append(x)
            reps.append(linalg.transpose(cols))
        for ci, cls in enumerate(gd.classes):
            w_idx = cls[0]
            tr = sum(reps[w_idx][i][i] for i in range(dim))
            assert tr == gd.character_table[tau][ci], "extracted irrep has wrong character"
        return reps
    raise RuntimeError(
        f"no multiplicity-one polynomial realization of irreducible {tau} below degree {max_degree}"
    )
