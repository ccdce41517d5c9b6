"""Command-line front end.

Exit codes: 0 when the checked property holds, 1 when it fails (the
report then carries a witness), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from fractions import Fraction

from . import aut_oracle, cover, faithful, group, hodge, involution
from .parallel import WORKERS_ENV, default_workers
from .report import FormatError, Report, emit


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fractions(text: str) -> list[Fraction]:
    try:
        return [Fraction(x) for x in text.replace(" ", "").split(",") if x]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _character_list(text: str) -> list[list[int]]:
    return [_ints(part) for part in text.split(";") if part.strip()]


def _element(g):
    return None if g is None else list(g.entries)


def _kernel(report: group.KernelReport) -> dict:
    return {
        "diagonal": report.diagonal,
        "cardinality": report.cardinality,
        "generators": [list(g) for g in report.kernel.generators],
        "orders": list(report.kernel.orders),
        "enumeration_checked": report.enumerated,
    }


# ---------------------------------------------------------------------------
# subcommands


def cmd_faithful(args) -> Report:
    n, r, d = args.n, args.r, args.d
    inputs = {"n": n, "r": r, "d": d, "mode": args.mode}
    result: dict = {}
    verdict = None
    notes = []
    if args.mode in ("certificate", "both"):
        try:
            cert = faithful.faithfulness_certificate(n, r, d)
        except faithful.CertificateFailure as exc:
            return Report("faithful", inputs, "certificate_failed", False,
                          {"error": str(exc), "diagnostics": list(exc.diagnostics)},
                          ["separating-set certificate"])
        verdict = cert.verdict
        result["separating_set"] = [
            {"character": list(e.character.entries), "eigen_dim": e.eigen_dim, "wedge_dim": e.wedge_dim}
            for e in cert.separating_set
        ]
        result["kernel"] = _kernel(cert.kernel_report)
        result["witness"] = _element(cert.witness)
        if cert.star is not None:
            result["star_parameters"] = {"k": cert.star.k, "s": cert.star.s, "t": cert.star.t}
        notes.extend(cert.diagnostics)
    if args.mode in ("brute", "both"):
        brute, witness = faithful.brute_force_faithful(n, r, d)
        result["brute_force"] = {"verdict": brute, "witness": _element(witness)}
        if verdict is None:
            verdict = brute
            result["witness"] = _element(witness)
        else:
            result["agreement"] = brute == verdict
    holds = verdict == faithful.FAITHFUL and result.get("agreement", True)
    return Report("faithful", inputs, verdict, holds, result,
                  ["faithfulness of the linear automorphism group on primitive middle cohomology"],
                  notes=notes)


def cmd_separate(args) -> Report:
    n, d = args.n, args.d
    if args.characters:
        chars = [group.CharacterVec.of(c, d) for c in _character_list(args.characters)]
        if any(len(c.entries) != n + 1 for c in chars):
            raise group.UsageError(f"every character needs {n + 1} entries")
        params = None
    else:
        params = group.star_parameters(n, d) if args.t is None else group.star_parameters_with_t(n, d, args.t)
        chars = group.star_characters(params)
    report = group.joint_kernel_is_diagonal(chars)
    result = {"characters": [list(c.entries) for c in chars], "kernel": _kernel(report)}
    if params is not None:
        result["star_parameters"] = {"k": params.k, "s": params.s, "t": params.t}
    inputs = {"n": n, "d": d, "characters": args.characters, "t": args.t}
    verdict = "diagonal" if report.diagonal else "not_diagonal"
    return Report("separate", inputs, verdict, report.diagonal, result,
                  ["joint kernel of a character set equals the diagonal subgroup"])


def cmd_cover(args) -> Report:
    chi = group.CharacterVec.of(args.chi, args.d)
    summary = cover.cover_summary(chi)
    result = {
        "e": summary.branch.e,
        "exponents": list(summary.branch.exponents),
        "unbranched_at_infinity": summary.branch.unbranched_at_infinity,
        "genus": summary.genus,
        "eigen_dim": summary.eigen_dim,
        "branch_count": summary.branch_count,
        "displayed_variant_2g_minus_2": summary.displayed_variant,
    }
    return Report("cover", {"d": args.d, "chi": args.chi}, "computed", True, result,
                  ["Riemann-Hurwitz genus and eigenspace dimension of a cyclic cover"])


def cmd_decomp(args) -> Report:
    n, r, d = args.n, args.r, args.d
    dec = cover.primitive_decomposition(n, r, d, materialize=args.list, workers=args.workers)
    betti = hodge.primitive_middle_betti(hodge.MultiDegree((d,) * r, n))
    result = {"total": dec.total, "primitive_middle_betti": betti, "agree": dec.total == betti}
    table = None
    if dec.entries is not None:
        table = (["character", "wedge_dim"], [[list(c.entries), w] for c, w in dec.entries])
    return Report("decomp", {"n": n, "r": r, "d": d}, "agree" if result["agree"] else "disagree",
                  result["agree"], result,
                  ["character decomposition of primitive middle cohomology versus Betti numbers"],
                  table=table)


def _lambdas(args):
    if args.lambdas is not None:
        return tuple(args.lambdas)
    return aut_oracle.sample_lambda(args.n, seed=args.seed, height=args.height)


def cmd_aut(args) -> Report:
    lam = _lambdas(args)
    family = aut_oracle.FermatFamily(args.n, args.r, args.d, lam)
    summary = aut_oracle.aut_group_order(family)
    rows = [[list(rep.tau), rep.solution_dim, rep.admissible,
             None if rep.sample_mu is None else list(rep.sample_mu)] for rep in summary.reports]
    result = {
        "lambdas": list(family.lambdas),
        "order": summary.order,
        "tag": summary.tag,
        "admissible": [list(rep.tau) for rep in summary.admissible],
        "group_order_d_pow_n": args.d**args.n,
    }
    inputs = {"n": args.n, "r": args.r, "d": args.d, "lambdas": args.lambdas,
              "seed": args.seed, "height": args.height}
    return Report("aut-oracle", inputs, summary.tag, summary.generic, result,
                  ["linear automorphism group of a Fermat-type intersection equals the diagonal group"],
                  table=(["tau", "solution_dim", "admissible", "sample_mu"], rows))


def cmd_interp(args) -> Report:
    lam = _lambdas(args)
    n = len(lam) - 1
    identity = tuple(range(n + 1))
    taus = [tuple(args.tau)] if args.tau else [t for t in itertools.permutations(range(n + 1)) if t != identity]
    rows = [[list(t), aut_oracle.interpolation_exists(lam, t, args.r)] for t in taus]
    offenders = [row[0] for row in rows if row[1] and tuple(row[0]) != identity]
    result = {"lambdas": list(lam), "interpolating": offenders, "checked": len(rows)}
    inputs = {"n": n, "r": args.r, "lambdas": args.lambdas, "seed": args.seed,
              "height": args.height, "tau": args.tau}
    holds = not offenders
    return Report("interp", inputs, "no_interpolant" if holds else "interpolant_found", holds, result,
                  ["no low-degree polynomial permutes generic interpolation nodes"],
                  table=(["tau", "interpolates"], rows))


def cmd_involution(args) -> Report:
    if args.n is not None:
        if args.r is None or args.d is None:
            raise group.UsageError("--n needs --r and --d")
        results = [involution.min_defect(args.n, args.r, args.d)]
    else:
        results = involution.involution_scan(args.n_max, args.d_max)
    rows = [[x.n, x.r, x.d, *x.argmin, x.minimum, x.positive, x.hypothesis] for x in results]
    holds = involution.scan_holds(results) if args.n is None else results[0].positive
    controls = [[x.n, x.r, x.d] for x in results if not x.hypothesis and not x.positive]
    result = {"rows": len(rows), "negative_controls": controls,
              "hypothesis_rows_positive": involution.scan_holds(results)}
    if args.n is not None:
        result["minimum"] = results[0].minimum
        result["argmin"] = list(results[0].argmin)
    inputs = {"n": args.n, "r": args.r, "d": args.d, "n_max": args.n_max, "d_max": args.d_max}
    return Report("involution", inputs, "positive" if holds else "not_positive", holds, result,
                  ["generic equal-degree complete intersections have no linear involutions"],
                  table=(["n", "r", "d", "n1", "n2", "f1", "f2", "min", "positive", "hypothesis"], rows))


def _md(args) -> hodge.MultiDegree:
    return hodge.MultiDegree(tuple(args.degrees), args.n)


def cmd_betti(args) -> Report:
    md = _md(args)
    result = {
        "multidegree": str(md),
        "dimension": md.m,
        "euler_characteristic": hodge.euler_characteristic(md),
        "primitive_middle_betti": hodge.primitive_middle_betti(md),
        "chi_O": hodge.chi_structure_sheaf_twist(md, 0),
    }
    return Report("betti", {"degrees": args.degrees, "n": args.n}, "computed", True, result,
                  ["Euler characteristic and primitive middle Betti number"])


def cmd_hodge(args) -> Report:
    md = _md(args)
    row = hodge.hodge_middle_row(md)
    result = {
        "multidegree": str(md),
        "dimension": md.m,
        "hodge_row": list(row.values),
        "primitive_row": list(row.primitive_values),
        "chi_omega": hodge.chi_y(md),
        "straight": row.is_straight(),
    }
    return Report("hodge", {"degrees": args.degrees, "n": args.n}, "computed", True, result,
                  ["middle Hodge numbers by Hirzebruch-Riemann-Roch"])


def cmd_scan_hodge(args) -> Report:
    found = hodge.straight_polygon_scan(args.n_max, args.d_max, args.c_max)
    expected = hodge.expected_straight_list(args.n_max, args.d_max, args.c_max)
    holds = found == expected
    rows = []
    for md in found:
        row = hodge.hodge_middle_row(md)
        rows.append([str(md), md.m, list(row.primitive_values)])
    result = {
        "straight": [str(md) for md in found],
        "expected": [str(md) for md in expected],
        "unexpected": [str(md) for md in found if md not in expected],
        "missing": [str(md) for md in expected if md not in found],
    }
    return Report("scan-hodge", {"n_max": args.n_max, "d_max": args.d_max, "c_max": args.c_max},
                  "matches" if holds else "mismatch", holds, result,
                  ["straight Hodge polygons occur only for quadrics, cubic surfaces and "
                   "even-dimensional intersections of two quadrics"],
                  table=(["multidegree", "dimension", "primitive_row"], rows))


def cmd_classify(args) -> Report:
    cls = hodge.classify_theorem_case(_md(args))
    result = {"multidegree": str(cls.md), "d": cls.d, "r": cls.r, "case": cls.case, "route": cls.route}
    return Report("classify", {"degrees": args.degrees, "n": args.n}, cls.case, True, result,
                  ["reduction to the leading equal-degree block"])


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    common.add_argument("--workers", type=int, default=None,
                        help=f"worker processes for scans (default ${WORKERS_ENV} or 1)")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")

    parser = argparse.ArgumentParser(prog="fermat-ci", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("faithful", cmd_faithful, "faithfulness certificate for X_{n,r,d}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mode", choices=("certificate", "brute", "both"), default="certificate")

    p = add("separate", cmd_separate, "joint kernel test for a set of characters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=int, default=None, help="override the t parameter")
    p.add_argument("--characters", default=None, help="e.g. '1,1,1,0;0,1,1,1' (default: the (k,s,t) set)")

    p = add("cover", cmd_cover, "genus and eigenspace dimension of a cyclic cover")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--chi", type=_ints, required=True)

    p = add("decomp", cmd_decomp, "character decomposition of primitive middle cohomology")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--list", action="store_true", help="list every nonzero summand")

    for name, func, help_ in (("aut-oracle", cmd_aut, "monomial automorphism search"),
                              ("interp", cmd_interp, "interpolation obstruction")):
        p = add(name, func, help_)
        p.add_argument("--n", type=int, required=name == "aut-oracle")
        p.add_argument("--r", type=int, required=True)
        if name == "aut-oracle":
            p.add_argument("--d", type=int, required=True)
        else:
            p.add_argument("--tau", type=_ints, default=None)
        p.add_argument("--lambdas", type=_fractions, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--height", type=int, default=10)

    p = add("involution", cmd_involution, "involution dimension bound")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--d", type=int, default=None)

    for name, func, help_ in (("betti", cmd_betti, "Euler characteristic and Betti numbers"),
                              ("hodge", cmd_hodge, "middle Hodge numbers"),
                              ("classify", cmd_classify, "which case of the triviality theorem applies")):
        p = add(name, func, help_)
        p.add_argument("--degrees", type=_ints, required=True)
        p.add_argument("--n", type=int, required=True)

    p = add("scan-hodge", cmd_scan_hodge, "scan for straight Hodge polygons")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--d-max", type=int, default=5)
    p.add_argument("--c-max", type=int, default=3)
    return parser


def run(argv=None) -> tuple[argparse.Namespace, Report, str]:
    """Parse, dispatch and serialize; raises SystemExit(2) on usage errors."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers is None:
        args.workers = default_workers()
    if args.workers < 1:
        parser.error("--workers must be positive")
    if getattr(args, "lambdas", None) is not None and args.seed is not None:
        parser.error("--lambdas and --seed are mutually exclusive")
    if args.subcommand == "interp" and args.lambdas is None and args.n is None:
        parser.error("interp needs --lambdas or --n")
    start = time.perf_counter()
    try:
        report = args.func(args)
        if args.timing:
            report.timing = time.perf_counter() - start
        text = emit(report, args.format)
    except (group.UsageError, FormatError) as exc:
        parser.error(str(exc))
    return args, report, text


def main(argv=None) -> int:
    args, report, text = run(argv)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
