"""Type-A combinatorics: Young diagrams, Murnaghan-Nakayama characters,
content polynomials, and the trace/multiplicity formulas of the
symmetric-group Cherednik algebra.

Trace values live in the one-dimensional span of Tr(1) and are stored
as exact polynomials in u = 1/(n c).
"""

from __future__ import annotations

from fractions import Fraction as Q
from functools import lru_cache
from itertools import product as iter_product
from math import factorial, gcd

from .cherednik import CheckReport

Partition = tuple[int, ...]


def partitions(n: int) -> list[Partition]:
    """All partitions of n, descending parts, reverse-lex order."""
    out: list[Partition] = []

    def rec(rest: int, cap: int, acc: list[int]):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, cap), 0, -1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


class YoungDiagram:
    def __init__(self, partition):
        parts = tuple(int(p) for p in partition)
        if any(p <= 0 for p in parts) or any(
            parts[i] < parts[i + 1] for i in range(len(parts) - 1)
        ):
            raise ValueError(f"not a partition: {partition}")
        self.partition: Partition = parts
        self.n = sum(parts)

    def cells(self):
        for i, row in enumerate(self.partition):
            for j in range(row):
                yield (i, j)

    def contents(self) -> list[int]:
        return [j - i for i, j in self.cells()]

    def hook_lengths(self) -> list[int]:
        cols = [0] * (self.partition[0] if self.partition else 0)
        for row in self.partition:
            for j in range(row):
                cols[j] += 1
        out = []
        for i, j in self.cells():
            out.append(self.partition[i] - j + cols[j] - i - 1)
        return out

    def hook_product(self) -> int:
        out = 1
        for h in self.hook_lengths():
            out *= h
        return out

    def dimension(self) -> int:
        d, rem = divmod(factorial(self.n), self.hook_product())
        assert rem == 0
        return d

    def conjugate(self) -> "YoungDiagram":
        cols = [0] * (self.partition[0] if self.partition else 0)
        for row in self.partition:
            for j in range(row):
                cols[j] += 1
        return YoungDiagram(tuple(cols))

    def __repr__(self):
        return f"YoungDiagram{self.partition}"


@lru_cache(maxsize=None)
def _mn_character(shape: Partition, cycle_type: Partition) -> int:
    """Murnaghan-Nakayama rule, recursing on the largest cycle."""
    if not shape:
        return 1 if not cycle_type else 0
    if not cycle_type:
        return 1 if not shape else 0
    k = cycle_type[0]
    rest = cycle_type[1:]
    total = 0
    rows = len(shape)
    # border strips of size k: remove from each possible starting row
    for start in range(rows):
        # a border strip removal ending condition: build the new shape by
        # walking the rim; use the classical first-column hook encoding
        new_shape, height = _remove_border_strip(shape, start, k)
        if new_shape is None:
            continue
        total += (-1) ** height * _mn_character(new_shape, rest)
    return total


def _remove_border_strip(shape: Partition, start: int, k: int):
    """Remove a k-rim hook whose head is in row `start`; returns
    (new shape, leg height) or (None, 0)."""
    shape_l = list(shape)
    rows = len(shape_l)
    # beta-numbers trick: first-column hook lengths
    beta = [shape_l[i] + (rows - 1 - i) for i in range(rows)]
    b = beta[start] - k
    if b < 0 or b in beta:
        return None, 0
    height_crossings = sum(1 for x in beta if b < x < beta[start])
    new_beta = sorted((x if i != start else b for i, x in enumerate(beta)), reverse=True)
    new_shape = [new_beta[i] - (rows - 1 - i) for i in range(rows)]
    if any(x < 0 for x in new_shape):
        return None, 0
    new_shape = tuple(x for x in new_shape if x > 0)
    if any(new_shape[i] < new_shape[i + 1] for i in range(len(new_shape) - 1)):
        return None, 0
    return new_shape, height_crossings


def character(tau: YoungDiagram, cycle_type) -> int:
    ct = tuple(sorted((int(x) for x in cycle_type), reverse=True))
    if sum(ct) != tau.n:
        raise ValueError(f"cycle type {cycle_type} is not a partition of {tau.n}")
    return _mn_character(tau.partition, ct)


def class_size(n: int, cycle_type: Partition) -> int:
    z = 1
    counts: dict[int, int] = {}
    for part in cycle_type:
        counts[part] = counts.get(part, 0) + 1
    for length, mult in counts.items():
        z *= length**mult * factorial(mult)
    return factorial(n) // z


def character_table_verified(n: int) -> CheckReport:
    """Column orthogonality of the MN table (build-time self-check)."""
    parts = partitions(n)
    table = {
        lam: [character(YoungDiagram(lam), mu) for mu in parts] for lam in parts
    }
    for a, mu in enumerate(parts):
        for b, nu in enumerate(parts):
            s = sum(table[lam][a] * table[lam][b] for lam in parts)
            want = factorial(n) // class_size(n, mu) if mu == nu else 0
            if s != want:
                return CheckReport("mn-orthogonality", False, {"n": n},
                                   witness=f"columns {mu}, {nu}")
    return CheckReport("mn-orthogonality", True, {"n": n})


# ---------------------------------------------------------------------
# content polynomials and traces
# ---------------------------------------------------------------------


def _poly_mul(a: list[Q], b: list[Q]) -> list[Q]:
    out = [Q(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def f_polynomial(tau: YoungDiagram, crosscheck: bool = True) -> list[Q]:
    """F_tau(z) = prod over cells (1 + content z), as coefficient list.

    Computed two independent ways (content product, and the hook-product
    times the power-sum specialization of the Schur function) with exact
    equality asserted; the Stanley class-sum identity is also verified.
    """
    out = [Q(1)]
    for cont in tau.contents():
        out = _poly_mul(out, [Q(1), Q(cont)])
    if crosscheck:
        n = tau.n
        via_schur = [Q(0)] * (n + 1)
        for mu in partitions(n):
            chi = character(tau, mu)
            if not chi:
                continue
            # p_j -> z^{j-1} turns p_mu into z^{n - length(mu)}
            zmu = factorial(n) // class_size(n, mu)
            power = n - len(mu)
            via_schur[power] += Q(chi, zmu)
        via_schur = [x * tau.hook_product() for x in via_schur]
        while len(via_schur) > 1 and via_schur[-1] == 0:
            via_schur.pop()
        assert via_schur == out, "content product vs Schur specialization mismatch"
        stanley = [Q(0)] * (n + 1)
        for mu in partitions(n):
            stanley[n - len(mu)] += class_size(n, mu) * character(tau, mu)
        while len(stanley) > 1 and stanley[-1] == 0:
            stanley.pop()
        dim = tau.dimension()
        assert stanley == [dim * x for x in out], "Stanley character identity fails"
    return out


class TraceValue:
    """A multiple of Tr(1): exact polynomial in u = 1/(n c)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)
        while len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            self.coeffs.pop()

    def at(self, n: int, c: Q) -> Q:
        if c == 0:
            raise ValueError("trace formulas need c != 0")
        u = Q(1, n) / Q(c)
        total = Q(0)
        for coeff in reversed(self.coeffs):
            total = total * u + coeff
        return total

    def __eq__(self, other):
        return isinstance(other, TraceValue) and self.coeffs == other.coeffs

    def text(self) -> str:
        pieces = []
        for p, coeff in enumerate(self.coeffs):
            if not coeff:
                continue
            if p == 0:
                pieces.append(f"{coeff}")
            elif p == 1:
                pieces.append(f"{coeff}*(1/(n*c))")
            else:
                pieces.append(f"{coeff}*(1/(n*c))^{p}")
        return (" + ".join(pieces) if pieces else "0") + " * Tr(1)"

    def __repr__(self):
        return f"TraceValue({self.text()})"


def trace_of_permutation(n: int, cycle_type) -> TraceValue:
    """Tr(g) = u^{n - cycl(g)} Tr(1) with u = 1/(nc)."""
    ct = tuple(sorted((int(x) for x in cycle_type), reverse=True))
    if sum(ct) != n:
        raise ValueError("cycle type must be a partition of n")
    power = n - len(ct)
    return TraceValue([Q(0)] * power + [Q(1)])


def trace_of_idempotent(tau: YoungDiagram) -> TraceValue:
    """Tr(e_tau) = (dim tau)^2/n! F_tau(u) Tr(1)."""
    dim = tau.dimension()
    scale = Q(dim * dim, factorial(tau.n))
    return TraceValue([scale * x for x in f_polynomial(tau)])


def trace_consistency_report(n: int) -> CheckReport:
    """Expanding e_tau = (dim/n!) sum chi(g^{-1}) g through the
    permutation-trace formula must reproduce the idempotent trace,
    symbolically in c."""
    for lam in partitions(n):
        tau = YoungDiagram(lam)
        via_classes = [Q(0)] * (n + 1)
        for mu in partitions(n):
            chi = character(tau, mu)
            if not chi:
                continue
            via_classes[n - len(mu)] += Q(tau.dimension(), factorial(n)) * class_size(n, mu) * chi
        expected = trace_of_idempotent(tau)
        got = TraceValue(via_classes)
        if got != expected:
            return CheckReport("trace-consistency", False, {"n": n}, witness=str(lam))
    return CheckReport("trace-consistency", True, {"n": n})


def multiplicity_vector(n: int, c: Q, dim_v: int) -> dict:
    """[tau : V] = dimV dim(tau)/n! prod(1 + cont/nc), with flags and the
    minimal dimV making every entry a nonnegative integer."""
    c = Q(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    if dim_v < 1:
        raise ValueError("dimV must be >= 1")
    entries = {}
    per_unit = {}
    for lam in partitions(n):
        tau = YoungDiagram(lam)
        f_at = TraceValue(f_polynomial(tau)).at(n, c)
        unit = Q(tau.dimension(), factorial(n)) * f_at
        per_unit[lam] = unit
        val = dim_v * unit
        entries[lam] = {
            "value": val,
            "nonnegative": val >= 0,
            "integral": val.denominator == 1,
        }
    minimal = None
    if all(u >= 0 for u in per_unit.values()):
        lcm = 1
        for u in per_unit.values():
            lcm = lcm * u.denominator // gcd(lcm, u.denominator)
        minimal = lcm
    total = sum(YoungDiagram(lam).dimension() * entries[lam]["value"] for lam in entries)
    return {
        "entries": entries,
        "completeness": total == dim_v,
        "minimal_dim_v": minimal,
    }


def s_set_constraints(n: int, c: Q) -> dict:
    """Necessary-condition verdicts for membership of c in the set of
    parameters with a finite-dimensional module; nothing is asserted
    beyond the proved necessary shapes."""
    c = Q(c)
    nc = n * c
    shape_ok = c != 0 and nc.denominator == 1 and int(nc) % n != 0
    nonneg_ok = None
    coprime = None
    if c != 0:
        nonneg_ok = all(
            TraceValue(f_polynomial(YoungDiagram(lam), crosscheck=False)).at(n, c) >= 0
            for lam in partitions(n)
        )
    if shape_ok:
        coprime = gcd(abs(int(nc)), n) == 1
    return {
        "n": n,
        "c": str(c),
        "integer_shape": shape_ok,
        "claim1_nonnegativity": nonneg_ok,
        "coprimality_flag": coprime,
    }


# ---------------------------------------------------------------------
# lattice restriction characters
# ---------------------------------------------------------------------


def _sum_zero_tuples(n: int, r: int):
    for head in iter_product(range(r), repeat=n - 1):
        last = (-sum(head)) % r
        yield head + (last,)


def _cycles_of(perm: tuple[int, ...]) -> list[list[int]]:
    seen = [False] * len(perm)
    cycles = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        cycles.append(cyc)
    return cycles


def _representative_permutation(cycle_type: Partition) -> tuple[int, ...]:
    perm = []
    base = 0
    for length in cycle_type:
        perm.extend(list(range(base + 1, base + length)) + [base])
        base += length
    return tuple(perm)


def lattice_restriction_character(n: int, r: int, max_points: int = 10**6) -> dict:
    """Permutation character of S_n on sum-zero tuples mod r, with its
    decomposition into irreducibles and the proportionality check
    against r^{cycl(g)} with factor 1/r."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if r**n > max_points:
        raise ValueError(f"r^n = {r**n} exceeds the enumeration bound {max_points}")
    points = list(_sum_zero_tuples(n, r))
    parts = partitions(n)
    char = []
    for mu in parts:
        perm = _representative_permutation(mu)
        fixed = 0
        for pt in points:
            if all(pt[perm[i]] == pt[i] for i in range(n)):
                fixed += 1
        char.append(fixed)
    proportional = all(
        Q(char[i]) == Q(r ** len(parts[i]), r) for i in range(len(parts))
    )
    # exact closed form valid for every (n, r): the fixed count of g is
    # r^{cycl(g)-1} * gcd(cycle lengths of g, r); proportionality to
    # r^{cycl}/r is its gcd(n, r) = 1 specialization
    closed_form = True
    for i, mu in enumerate(parts):
        d = r
        for length in mu:
            d = gcd(d, length)
        if char[i] != r ** (len(mu) - 1) * d:
            closed_form = False
    decomposition = {}
    for lam in parts:
        tau = YoungDiagram(lam)
        mult = sum(
            class_size(n, parts[i]) * char[i] * character(tau, parts[i])
            for i in range(len(parts))
        )
        mult_q = Q(mult, factorial(n))
        assert mult_q.denominator == 1 and mult_q >= 0, "non-integral decomposition"
        if mult_q:
            decomposition[lam] = int(mult_q)
    return {
        "classes": parts,
        "character": char,
        "proportional_to_r_pow_cycles": proportional,
        "coprime": gcd(n, r) == 1,
        "matches_gcd_closed_form": closed_form,
        "factor": f"1/{r}",
        "decomposition": decomposition,
        "points": len(points),
    }
