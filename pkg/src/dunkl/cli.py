"""Command-line surface.

Every check and computation is exposed as a subcommand with structured
output: JSON is the machine format ({config, results, timing}); CSV is
available for flat tables only; text is a readable summary.  Exit code
0 iff every reported check passed.  qc-basis and baker results are
cached as canonical text files keyed by a content hash of the run
header (label, rank, c, degree bound, root normalization); a warm
rerun is byte-identical to the cold one apart from the timing block.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import os
import sys
import tempfile
import time
from fractions import Fraction as Q

from . import acceptance, cherednik, flatfilt, quasiinv, shift, traces
from .operators import calogero_moser
from .poly import Polynomial
from .roots import MultiplicityFunction, build_root_system, group_data, molien_series

CACHE_ENV = "DUNKL_CACHE_DIR"


class CliError(Exception):
    pass


class CacheCorruption(CliError):
    pass


def _parse_c(rs, text: str) -> MultiplicityFunction:
    try:
        values = [Q(part) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"invalid multiplicity list {text!r}: {exc}") from None
    return MultiplicityFunction(rs, values if len(values) > 1 else values[0])


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(sorted((int(p) for p in text.split(",")), reverse=True))
    except ValueError:
        raise CliError(f"invalid partition {text!r}") from None
    return parts


def _parse_permutation(text: str, n: int) -> tuple[int, ...]:
    """Cycle notation like '(123)(45)' (single digits) or '(1 2)(3 4)';
    returns the cycle type as a partition of n."""
    text = text.strip()
    if text in ("id", "e", "()"):
        return (1,) * n
    if "(" not in text:
        ct = _parse_partition(text)
        if sum(ct) > n:
            raise CliError(f"cycle type {ct} exceeds n={n}")
        return tuple(sorted(ct + (1,) * (n - sum(ct)), reverse=True))
    lengths = []
    used: set[int] = set()
    for chunk in text.replace(")", ")\x00").split("\x00"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise CliError(f"bad cycle {chunk!r}")
        body = chunk[1:-1].replace(",", " ")
        entries = body.split() if " " in body else list(body)
        pts = [int(x) for x in entries]
        if any(p < 1 or p > n for p in pts) or len(set(pts)) != len(pts):
            raise CliError(f"bad cycle {chunk!r} for n={n}")
        if used & set(pts):
            raise CliError("cycles are not disjoint")
        used |= set(pts)
        lengths.append(len(pts))
    lengths += [1] * (n - len(used))
    return tuple(sorted(lengths, reverse=True))


def _tau_index(gd, text: str) -> int:
    names = {"triv": gd.trivial_index(), "sign": gd.determinant_index()}
    if text in names:
        return names[text]
    if text == "std":
        dims = [gd.dim(t) for t in range(len(gd.character_table))]
        candidates = [t for t, d in enumerate(dims) if d == gd.rs.rank and d > 1]
        if len(candidates) == 1:
            return candidates[0]
        raise CliError("'std' is ambiguous here; pass a numeric index")
    try:
        tau = int(text)
    except ValueError:
        raise CliError(f"unknown irreducible {text!r}") from None
    if not 0 <= tau < len(gd.character_table):
        raise CliError(f"irreducible index {tau} out of range")
    return tau


# ---------------------------------------------------------------------
# caching
# ---------------------------------------------------------------------


def _normalization_header(kind: str, rs, c, deg) -> list[str]:
    return [
        "dunkl-cache v1",
        f"kind={kind}",
        f"label={rs.cartan_label}{rs.rank}",
        f"c={c.key()}",
        f"deg={deg}",
        "roots=" + ";".join(rs.root_polynomial(i).text() for i in range(len(rs.positive_roots))),
        "form=" + ";".join(",".join(str(x) for x in row) for row in rs.invariant_form),
    ]


def _cache_path(cache_dir: str, header: list[str]) -> str:
    digest = hashlib.sha256("\n".join(header).encode()).hexdigest()[:24]
    return os.path.join(cache_dir, f"dunkl-{digest}.txt")


def _cache_read(path: str, header: list[str]) -> list[str] | None:
    if not os.path.exists(path):
        return None
    lines = open(path, encoding="utf-8").read().splitlines()
    head = [ln[2:] for ln in lines if ln.startswith("# ")]
    if head != header:
        raise CacheCorruption(f"cache header mismatch in {path}")
    return [ln for ln in lines if not ln.startswith("# ")]


def _cache_write(path: str, header: list[str], body: list[str]):
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".part")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        for ln in header:
            fh.write(f"# {ln}\n")
        for ln in body:
            fh.write(ln + "\n")
    os.replace(tmp, path)  # single-writer atomic rename


# ---------------------------------------------------------------------
# subcommand handlers: each returns a list of result dicts
# ---------------------------------------------------------------------


def _report_result(rep) -> dict:
    return {
        "name": rep.name,
        "status": "pass" if rep.passed else "fail",
        "data": rep.details,
        "witnesses": [rep.witness] if rep.witness else [],
    }


def cmd_verify_relations(args, ctx) -> list[dict]:
    rs, _ = _build(args, ctx)
    rep = cherednik.verify_relations(rs, _parse_c(rs, args.c), args.deg)
    return [_report_result(rep)]


def cmd_qc_basis(args, ctx) -> list[dict]:
    rs, _ = _build(args, ctx)
    c = _parse_c(rs, args.c)
    header = _normalization_header("qc-basis", rs, c, args.deg)
    cache_state = "off"
    body = None
    path = None
    if ctx["cache_dir"]:
        path = _cache_path(ctx["cache_dir"], header)
        body = _cache_read(path, header)
        cache_state = "warm" if body is not None else "cold"
    if body is None:
        rows = []
        for d in range(args.deg + 1):
            for p in quasiinv.qc_basis(rs, c, d):
                rows.append(f"{d}\t{p.text()}")
        body = rows
        if path:
            _cache_write(path, header, body)
    dims = [0] * (args.deg + 1)
    for ln in body:
        dims[int(ln.split("\t")[0])] += 1
    return [
        {
            "name": "qc-basis",
            "status": "pass",
            "data": {"dims": dims, "cache": cache_state},
            "witnesses": [],
            "table": [
                {"degree": int(ln.split("\t")[0]), "polynomial": ln.split("\t")[1]}
                for ln in body
            ],
        }
    ]


def cmd_hilbert(args, ctx) -> list[dict]:
    rs, gd = _build(args, ctx)
    c = _parse_c(rs, args.c)
    rep = quasiinv.hilbert_compare(rs, gd, c, args.deg)
    out = _report_result(rep)
    out["table"] = [
        {"degree": d, "dim": rep.details["computed"][d], "closed_form": rep.details["closed_form"][d]}
        for d in range(args.deg + 1)
    ]
    return [out]


def cmd_cv_op(args, ctx) -> list[dict]:
    rs, gd = _build(args, ctx)
    c = _parse_c(rs, args.c)
    ring = quasiinv.QuasiInvariantRing(rs, gd, c, max(args.deg * 2, args.deg + 2))
    results = []
    for d in range(1, args.deg + 1):
        for i, p in enumerate(ring.graded[d]):
            rep = quasiinv.cv_operator_report(rs, ring, c, p)
            entry = _report_result(rep)
            entry["name"] = f"cv-op[{d}.{i}]"
            entry["data"]["P"] = p.text()
            entry["data"]["operator"] = quasiinv.cv_operator(rs, c, p).text()
            results.append(entry)
    return results


def cmd_bilinear_gram(args, ctx) -> list[dict]:
    rs, gd = _build(args, ctx)
    c = _parse_c(rs, args.c)
    ring = quasiinv.QuasiInvariantRing(rs, gd, c, args.deg)
    rep = quasiinv.bilinear_report(rs, ring, c, args.deg)
    out = _report_result(rep)
    out["data"]["gram_ranks"] = {str(k): v for k, v in rep.details["gram_ranks"].items()}
    grams = {}
    for d in range(args.deg + 1):
        gram = quasiinv.gram_matrix(rs, ring, c, d)
        grams[str(d)] = [[str(x) for x in row] for row in gram]
    out["data"]["gram"] = grams
    return [out]


def cmd_shift_op(args, ctx) -> list[dict]:
    rs, _ = _build(args, ctx)
    c = _parse_c(rs, args.c)
    rep = shift.shift_report(rs, c)
    return [_report_result(rep)]


def cmd_baker(args, ctx) -> list[dict]:
    rs, _ = _build(args, ctx)
    c = _parse_c(rs, args.c)
    header = _normalization_header("baker", rs, c, int(c.total()))
    cache_state = "off"
    body = None
    path = None
    if ctx["cache_dir"]:
        path = _cache_path(ctx["cache_dir"], header)
        body = _cache_read(path, header)
        cache_state = "warm" if body is not None else "cold"
    if body is None:
        kern = shift.baker_akhiezer(rs, c)
        names = [f"x{i+1}" for i in range(rs.rank)] + [f"k{i+1}" for i in range(rs.rank)]
        body = [kern.phi.text(names)]
        if path:
            _cache_write(path, header, body)
    phi_text = body[0]
    names = [f"x{i+1}" for i in range(rs.rank)] + [f"k{i+1}" for i in range(rs.rank)]
    phi = Polynomial.parse(phi_text, 2 * rs.rank, names)
    kern = shift.BispectralKernel(rs, c, phi)
    dq = shift.double_quasiinvariance_check(rs, c, kern)
    bw = shift.bispectral_weight_check(kern)
    ok = kern.phi_at_origin() != 0 and dq.passed and bw.passed
    return [
        {
            "name": "baker-akhiezer",
            "status": "pass" if ok else "fail",
            "data": {
                "phi": phi_text,
                "phi_at_origin": str(kern.phi_at_origin()),
                "cache": cache_state,
                "doubly_quasi_invariant": dq.passed,
            },
            "witnesses": [] if ok else [dq.witness or bw.witness or "phi vanishes at origin"],
        }
    ]


def cmd_eigencheck(args, ctx) -> list[dict]:
    rs, gd = _build(args, ctx)
    c = _parse_c(rs, args.c)
    kern = shift.baker_akhiezer(rs, c)
    results = []
    for d in range(1, args.deg + 1):
        for i, p in enumerate(cherednik._invariant_basis(rs, gd, d)):
            if not quasiinv.is_quasi_invariant(rs, c, p):
                continue
            rep = shift.eigenfunction_check(rs, c, p, kern)
            entry = _report_result(rep)
            entry["name"] = f"eigencheck[{d}.{i}]"
            results.append(entry)
    return results


def cmd_module_char(args, ctx) -> list[dict]:
    rs, gd = _build(args, ctx)
    c = _parse_c(rs, args.c)
    tau = _tau_index(gd, args.tau)
    mod = cherednik.standard_module(rs, gd, c, tau, args.deg)
    mol = molien_series(rs, gd, tau, args.deg)
    rep = cherednik.verify_module_character(rs, gd, mod, mol)
    out = _report_result(rep)
    out["data"]["tau"] = args.tau
    return [out]


def cmd_singular(args, ctx) -> list[dict]:
    rs, gd = _build(args, ctx)
    c = _parse_c(rs, args.c)
    tau = _tau_index(gd, args.tau)
    mod = cherednik.standard_module(rs, gd, c, tau, args.deg)
    found = {}
    for d in range(1, args.deg + 1):
        vecs = cherednik.singular_vectors(mod, d)
        if vecs:
            found[str(d)] = len(vecs)
    return [
        {
            "name": "singular-vectors",
            "status": "pass",
            "data": {"tau": args.tau, "degrees": found, "bound": args.deg},
            "witnesses": [],
        }
    ]


def cmd_isotypic_shift(args, ctx) -> list[dict]:
    rs, gd = _build(args, ctx)
    c = _parse_c(rs, args.c)
    results = []
    for eps in range(len(gd.character_table)):
        if gd.dim(eps) != 1 or eps == gd.trivial_index():
            continue
        if args.eps not in (None, "all") and _tau_index(gd, args.eps) != eps:
            continue
        rep = cherednik.isotypic_conjugation_check(rs, gd, c, eps, args.deg)
        entry = _report_result(rep)
        entry["name"] = f"isotypic-shift[eps={eps}]"
        results.append(entry)
    if not results:
        raise CliError("no matching linear character")
    return results


def cmd_lefschetz(args, ctx) -> list[dict]:
    rs, gd = _build(args, ctx)
    c = _parse_c(rs, args.c)
    results = []
    for k in range(args.k + 1):
        rep = cherednik.lefschetz_check(rs, gd, c, k)
        entry = _report_result(rep)
        entry["name"] = f"lefschetz[k={k}]"
        results.append(entry)
    return results


def cmd_trace(args, ctx) -> list[dict]:
    n = args.n
    c = Q(args.c)
    if c == 0:
        raise CliError("trace formulas need c != 0")
    if args.tau:
        tau = traces.YoungDiagram(_parse_partition(args.tau))
        tv = traces.trace_of_idempotent(tau)
        name = f"Tr(e_{args.tau})"
    else:
        ct = _parse_permutation(args.g or "id", n)
        tv = traces.trace_of_permutation(n, ct)
        name = f"Tr({args.g or 'id'})"
    return [
        {
            "name": "trace",
            "status": "pass",
            "data": {
                "of": name,
                "symbolic": tv.text(),
                "value_times_tr1": str(tv.at(n, c)),
            },
            "witnesses": [],
            "table": [{"power_of_1_over_nc": p, "coefficient": str(x)} for p, x in enumerate(tv.coeffs)],
        }
    ]


def cmd_fpoly(args, ctx) -> list[dict]:
    tau = traces.YoungDiagram(_parse_partition(args.tau))
    coeffs = traces.f_polynomial(tau)
    return [
        {
            "name": "fpoly",
            "status": "pass",
            "data": {
                "tau": args.tau,
                "coefficients": [str(x) for x in coeffs],
                "dimension": tau.dimension(),
                "contents": sorted(tau.contents()),
            },
            "witnesses": [],
            "table": [{"power": p, "coefficient": str(x)} for p, x in enumerate(coeffs)],
        }
    ]


def cmd_multiplicity(args, ctx) -> list[dict]:
    out = traces.multiplicity_vector(args.n, Q(args.c), args.dimv)
    table = [
        {
            "tau": ",".join(map(str, lam)),
            "value": str(e["value"]),
            "nonnegative": e["nonnegative"],
            "integral": e["integral"],
        }
        for lam, e in out["entries"].items()
    ]
    ok = out["completeness"]
    return [
        {
            "name": "multiplicity",
            "status": "pass" if ok else "fail",
            "data": {
                "completeness": out["completeness"],
                "minimal_dim_v": out["minimal_dim_v"],
            },
            "witnesses": [] if ok else ["dimension completeness fails"],
            "table": table,
        }
    ]


def cmd_sset(args, ctx) -> list[dict]:
    out = traces.s_set_constraints(args.n, Q(args.c))
    return [
        {
            "name": "sset",
            "status": "pass",
            "data": out,
            "witnesses": [],
        }
    ]


def cmd_lattice_restrict(args, ctx) -> list[dict]:
    out = traces.lattice_restriction_character(args.n, args.r)
    table = [
        {"cycle_type": ",".join(map(str, mu)), "fixed_points": out["character"][i]}
        for i, mu in enumerate(out["classes"])
    ]
    return [
        {
            "name": "lattice-restrict",
            "status": "pass" if out["matches_gcd_closed_form"] else "fail",
            "data": {
                "proportional_to_r_pow_cycles": out["proportional_to_r_pow_cycles"],
                "coprime": out["coprime"],
                "matches_gcd_closed_form": out["matches_gcd_closed_form"],
                "factor": out["factor"],
                "decomposition": {",".join(map(str, k)): v for k, v in out["decomposition"].items()},
            },
            "witnesses": [],
            "table": table,
        }
    ]


def cmd_flat_filtration(args, ctx) -> list[dict]:
    rs, gd = _build(args, ctx)
    c = _parse_c(rs, args.c)
    rep = flatfilt.flat_filtration_check(rs, gd, c, n_max=args.deg, degree_cap=args.degree_cap)
    return [
        {
            "name": "flat-filtration",
            "status": "pass" if rep.passed else "fail",
            "data": {
                "operators": rep.operator_ids,
                "flat_degrees": rep.flat_degrees,
                "checks": len(rep.checks),
            },
            "witnesses": [c.witness for c in rep.checks if not c.passed][:5],
        }
    ]


def cmd_selftest(args, ctx) -> list[dict]:
    only = args.criteria.split(",") if args.criteria else None
    results = []

    def progress(res):
        line = f"criterion {res.ident:>2} [{'PASS' if res.passed else 'FAIL'}] {res.name} ({res.seconds:.1f}s)"
        print(line, file=sys.stderr)

    for res in acceptance.run_acceptance(only, progress=progress):
        results.append(
            {
                "name": f"criterion-{res.ident}",
                "status": "pass" if res.passed else "fail",
                "data": {"description": res.name, **{k: v for k, v in res.details.items()}},
                "witnesses": res.details.get("failures", [])[:5] if not res.passed else [],
            }
        )
    return results


def _build(args, ctx):
    try:
        rs = build_root_system(args.label, args.rank)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    gd = group_data(rs, seed=ctx["seed"])
    return rs, gd


# ---------------------------------------------------------------------
# output formatting
# ---------------------------------------------------------------------


def _emit_json(config, results, timing) -> str:
    return json.dumps(
        {"config": config, "results": results, "timing": timing},
        sort_keys=True,
        indent=2,
    )


def _emit_csv(config, results) -> str:
    buf = io.StringIO()
    buf.write("# config: " + json.dumps(config, sort_keys=True) + "\n")
    tables = [r for r in results if "table" in r]
    if not tables:
        raise CliError(
            "this command has no flat table; use --format json for structured output"
        )
    for r in tables:
        cols = list(r["table"][0].keys()) if r["table"] else []
        buf.write(f"# result: {r['name']} status={r['status']}\n")
        buf.write(",".join(cols) + "\n")
        for row in r["table"]:
            buf.write(",".join(str(row[c]) for c in cols) + "\n")
    return buf.getvalue()


def _emit_text(config, results, timing) -> str:
    lines = ["# " + json.dumps(config, sort_keys=True)]
    for r in results:
        lines.append(f"[{r['status'].upper():4}] {r['name']}")
        for key, val in r.get("data", {}).items():
            text = json.dumps(val, sort_keys=True) if isinstance(val, (dict, list)) else str(val)
            if len(text) > 200:
                text = text[:200] + "..."
            lines.append(f"    {key}: {text}")
        for w in r.get("witnesses", []):
            lines.append(f"    witness: {w}")
    lines.append(f"# timing: {timing['seconds']:.3f}s")
    return "\n".join(lines)


COMMANDS = {
    "verify-relations": cmd_verify_relations,
    "qc-basis": cmd_qc_basis,
    "hilbert": cmd_hilbert,
    "cv-op": cmd_cv_op,
    "bilinear-gram": cmd_bilinear_gram,
    "shift-op": cmd_shift_op,
    "baker": cmd_baker,
    "eigencheck": cmd_eigencheck,
    "module-char": cmd_module_char,
    "singular": cmd_singular,
    "isotypic-shift": cmd_isotypic_shift,
    "lefschetz": cmd_lefschetz,
    "trace": cmd_trace,
    "fpoly": cmd_fpoly,
    "multiplicity": cmd_multiplicity,
    "sset": cmd_sset,
    "lattice-restrict": cmd_lattice_restrict,
    "flat-filtration": cmd_flat_filtration,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dunkl",
        description="Exact computations with Dunkl operators, quasi-invariants and shift operators.",
    )
    parser.add_argument("--format", choices=["json", "csv", "text"], default="json")
    parser.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV))
    parser.add_argument("--seed", type=int, default=0, help="seed for character-table splitting")
    parser.add_argument("--jobs", type=int, default=1, help="parallel width for independent jobs")
    sub = parser.add_subparsers(dest="command", required=True)

    def rs_command(name, help_, deg_default=None, extra=None):
        p = sub.add_parser(name, help=help_)
        p.add_argument("label", help="Cartan label: A, B, D or G")
        p.add_argument("rank", type=int)
        p.add_argument("--c", required=True,
                       help="multiplicity per root orbit, comma separated (B/G order: short,long)")
        if deg_default is not None:
            p.add_argument("--deg", type=int, default=deg_default)
        if extra:
            extra(p)
        return p

    rs_command("verify-relations", "check the defining operator relations", 5)
    rs_command("qc-basis", "graded basis of the quasi-invariant ring", 8)
    rs_command("hilbert", "Hilbert series of Q_c vs the closed form", 10)
    rs_command("cv-op", "iterated-adjoint operators L_P for basis P", 4)
    rs_command("bilinear-gram", "Gram matrices of the bilinear pairing", 6)
    rs_command("shift-op", "shift operator: symbol, intertwining, S[1]")
    rs_command("baker", "Baker-Akhiezer kernel Phi")
    rs_command("eigencheck", "eigenfunction identity for invariant P", 3)
    rs_command("module-char", "standard-module character vs closed form", 8,
               lambda p: p.add_argument("--tau", default="triv"))
    rs_command("singular", "singular vectors of a standard module", 8,
               lambda p: p.add_argument("--tau", default="triv"))
    rs_command("isotypic-shift", "isotypic conjugation identity", 4,
               lambda p: p.add_argument("--eps", default="all"))
    rs_command("lefschetz", "iterated-bracket isomorphism rank checks", None,
               lambda p: p.add_argument("--k", type=int, default=3))
    ff = rs_command("flat-filtration", "flat-filtration degree checks", 6)
    ff.add_argument("--degree-cap", type=int, default=3)

    t = sub.add_parser("trace", help="symmetric-group trace values")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--g", help="permutation in cycle notation, e.g. '(123)'")
    t.add_argument("--tau", help="partition, e.g. '2,1'")
    t.add_argument("--c", required=True)

    f = sub.add_parser("fpoly", help="content polynomial of a Young diagram")
    f.add_argument("--n", type=int)
    f.add_argument("--tau", required=True)

    m = sub.add_parser("multiplicity", help="isotype multiplicities in a module of given dimension")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--c", required=True)
    m.add_argument("--dimv", type=int, required=True)

    s = sub.add_parser("sset", help="necessary-condition verdicts for finite-dimensionality")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", required=True)

    lr = sub.add_parser("lattice-restrict", help="sum-zero lattice permutation character")
    lr.add_argument("--n", type=int, required=True)
    lr.add_argument("--r", type=int, required=True)

    st = sub.add_parser("selftest", help="run the acceptance suite")
    st.add_argument("--criteria", help="comma list of criterion numbers to run")
    return parser


def run(argv: list[str]) -> tuple[int, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = {
        "command": args.command,
        "format": args.format,
        "cache_dir": args.cache_dir,
        "seed": args.seed,
        "jobs": args.jobs,
    }
    for key in ("label", "rank", "c", "deg", "tau", "eps", "k", "n", "g", "dimv", "r", "criteria", "degree_cap"):
        if hasattr(args, key):
            config[key] = getattr(args, key)
    ctx = {"cache_dir": args.cache_dir, "seed": args.seed, "jobs": args.jobs}
    t0 = time.monotonic()
    try:
        results = COMMANDS[args.command](args, ctx)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, ""
    timing = {"seconds": time.monotonic() - t0}
    if args.format == "json":
        out = _emit_json(config, results, timing)
    elif args.format == "csv":
        out = _emit_csv(config, results)
    else:
        out = _emit_text(config, results, timing)
    failed = any(r["status"] == "fail" for r in results)
    return (1 if failed else 0), out


def run_to_string(argv: list[str]) -> str:
    code, out = run(argv)
    if code == 2:
        raise CliError("command failed")
    return out


def main(argv: list[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
