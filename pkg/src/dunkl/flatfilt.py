"""The flat filtration on operators preserving Q_c.

The filtration degree of a homogeneous operator is weight + order
(termwise: the coefficient degree, with constant-coefficient operators
in degree zero).  Operators preserving Q_c sit in nonnegative degrees;
the degree-0 part is commutative and acts (locally) ad-nilpotently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cherednik import CheckReport
from .operators import ReflDiffOperator, calogero_moser
from .poly import Polynomial
from .quasiinv import QuasiInvariantRing, cv_operator
from .roots import GroupData, MultiplicityFunction, RootSystem


@dataclass
class FlatFiltrationReport:
    operator_ids: list[str]
    flat_degrees: list[int]
    checks: list[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _preserves_ring(u: ReflDiffOperator, ring: QuasiInvariantRing) -> bool:
    for d in range(ring.n_max + 1):
        for f in ring.graded[d]:
            out = u.apply(f)
            if not isinstance(out, Polynomial):
                return False
            if out.degree() > ring.n_max:
                continue  # beyond the computed window, skip membership
            if not ring.contains(out):
                return False
    return True


def default_samples(
    rs: RootSystem, ring: QuasiInvariantRing, c: MultiplicityFunction, degree_cap: int = 3
) -> list[tuple[str, ReflDiffOperator]]:
    """identity, L_c, multiplications by Q_c elements, and the L_P family."""
    samples: list[tuple[str, ReflDiffOperator]] = [
        ("identity", ReflDiffOperator.identity(rs)),
        ("calogero-moser", calogero_moser(rs, c)),
    ]
    for d in range(1, degree_cap + 1):
        for idx, p in enumerate(ring.graded[d]):
            samples.append((f"mult[{d}.{idx}]", ReflDiffOperator.multiplication(rs, p)))
            samples.append((f"L_P[{d}.{idx}]", cv_operator(rs, c, p)))
    return samples


def flat_filtration_check(
    rs: RootSystem,
    gd: GroupData,
    c: MultiplicityFunction,
    n_max: int = 6,
    degree_cap: int = 3,
) -> FlatFiltrationReport:
    """(a) sampled Q_c-preserving operators have weight + order >= 0;
    (b) iterated commutators with degree-0 operators strictly lower the
    flat degree and vanish within flat_degree + 1 steps; (c) degree-0
    sampled operators commute pairwise; plus symbol polynomiality and
    subadditivity of the flat degree under composition."""
    ring = QuasiInvariantRing(rs, gd, c, n_max)
    samples = default_samples(rs, ring, c, degree_cap)
    ids = [name for name, _ in samples]
    checks: list[CheckReport] = []
    degrees: list[int] = []
    zero_degree_ops: list[tuple[str, ReflDiffOperator]] = []
    for name, u in samples:
        if not _preserves_ring(u, ring):
            checks.append(CheckReport("preserves-ring", False, {"op": name},
                                      witness=f"{name} does not preserve Q_c"))
            degrees.append(-(10**9))
            continue
        fd = u.flat_degree()
        degrees.append(fd)
        wo = u.weight() + u.order()
        checks.append(CheckReport(
            "nonnegative-flat-degree", wo >= 0 and fd == wo, {"op": name, "degree": fd},
            witness=None if wo >= 0 and fd == wo else f"{name}: weight+order={wo}, termwise={fd}",
        ))
        if fd == 0:
            zero_degree_ops.append((name, u))
    # (c) commutativity of the degree-0 part
    for i in range(len(zero_degree_ops)):
        for j in range(i + 1, len(zero_degree_ops)):
            ni, ui = zero_degree_ops[i]
            nj, uj = zero_degree_ops[j]
            ok = ui.commutator(uj).is_zero()
            checks.append(CheckReport("degree-zero-commute", ok, {"ops": [ni, nj]},
                                      witness=None if ok else f"[{ni}, {nj}] != 0"))
    # (b) ad-nilpotency with the exact step bound flat_degree(v) + 1
    for name_u, u in zero_degree_ops:
        if u.order() == 0:
            continue  # identity brackets trivially
        for (name_v, v), fd in zip(samples, degrees):
            if fd < 0 or v.is_zero():
                continue
            w = v
            steps = 0
            prev_deg = fd
            ok = True
            while not w.is_zero():
                w = u.commutator(w)
                steps += 1
                if w.is_zero():
                    break
                wd = w.flat_degree()
                if wd >= prev_deg:
                    ok = False
                    break
                prev_deg = wd
                if steps > fd + 1:
                    ok = False
                    break
            ok = ok and steps <= fd + 1
            checks.append(CheckReport(
                "ad-nilpotency", ok, {"u": name_u, "v": name_v, "steps": steps, "bound": fd + 1},
                witness=None if ok else f"ad {name_u} on {name_v} used {steps} steps (bound {fd + 1})",
            ))
    # flat-degree subadditivity and symbol polynomiality on sample pairs
    for (ni, ui), di in list(zip(samples, degrees))[:6]:
        if di < 0:
            continue
        if not ui.symbol_is_polynomial():
            checks.append(CheckReport("symbol-polynomial", False, {"op": ni},
                                      witness=f"{ni} has a non-polynomial symbol"))
        for (nj, uj), dj in list(zip(samples, degrees))[:6]:
            if dj < 0:
                continue
            comp = ui.compose(uj)
            if comp.is_zero():
                continue
            ok = comp.flat_degree() <= di + dj
            if not ok:
                checks.append(CheckReport("subadditivity", False, {"ops": [ni, nj]},
                                          witness="flat degree superadditive"))
    return FlatFiltrationReport(ids, degrees, checks)
