"""Command-line verification frontend.

Commands: bound, omega, verify, search-exact, search-heuristic.  Every
command can emit a JSON report (--json) that embeds a RunManifest; replaying
the same command with the same parameters and seed reproduces the report
byte-for-byte except for runtime fields.  Mathematical quantities that can
grow without bound (bounds, omega values, census totals, profile counts)
cross the JSON boundary as decimal strings; small structural integers
(n, k, l, m, counts of witnesses, runtimes) stay native.

Exit codes: 0 all checks pass, 1 mathematical failure (a counterexample),
2 usage or hypothesis error, 3 resource cutoff.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path

from . import __version__
from .bounds import (
    ekr_bound,
    omega_cross_bound,
    omega_intersecting_bound,
    omega_strict_bound,
    star_identity_check,
)
from .cyclic import double_count_check, katona_verify
from .errors import (
    BadElementError,
    BadLengthError,
    BadSizeError,
    CounterexampleError,
    DuplicateSetError,
    GroundMismatchError,
    HypothesisError,
    NotExhaustiveError,
    TooLargeError,
)
from .search import (
    HeuristicConfig,
    heuristic_max,
    max_omega_cross,
    max_omega_intersecting,
    max_omega_intersecting_naive,
    uniqueness_report,
)
from .setcore import Family, family_from_dict, family_to_dict, star
from .weights import (
    intersection_profile,
    omega_cross,
    omega_cross_strict,
    omega_family,
    omega_generic,
    unit_weight,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_USAGE_ERRORS = (
    BadElementError,
    BadLengthError,
    BadSizeError,
    DuplicateSetError,
    GroundMismatchError,
    HypothesisError,
    NotExhaustiveError,
)


class _CliUsageError(Exception):
    """Bad command-line input; maps to exit code 2."""


@dataclass(frozen=True)
class RunManifest:
    command: str
    params: dict
    seed: int | None
    version: str
    runtime_ms: int
    outcome: str


def report_schema() -> dict:
    """The shipped JSON schema that every --json report validates against."""
    text = resources.files("intersum").joinpath("schema/report.schema.json").read_text()
    return json.loads(text)


def _load_family(path: str) -> Family:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _CliUsageError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _CliUsageError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return family_from_dict(data)


def _emit(args, manifest: RunManifest, result: dict, text_lines: list[str]) -> None:
    if args.json:
        payload = (
            json.dumps(
                {"manifest": asdict(manifest), "result": result},
                sort_keys=True,
                indent=2,
            )
            + "\n"
        )
    else:
        payload = "".join(line + "\n" for line in text_lines)
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)


def _ms_since(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def _fmt_sets(family: Family) -> str:
    return " ".join("{" + ",".join(map(str, ks.elements())) + "}" for ks in family)


# ---------------------------------------------------------------------------
# bound
# ---------------------------------------------------------------------------


def _cmd_bound(args) -> int:
    t0 = time.perf_counter()
    if args.kind == "cross":
        if args.l is None:
            raise _CliUsageError("bound cross needs three parameters: n k l")
        bv = omega_cross_bound(args.n, args.k, args.l)
    else:
        if args.l is not None:
            raise _CliUsageError(f"bound {args.kind} takes two parameters: n k")
        if args.kind == "family":
            bv = omega_intersecting_bound(args.n, args.k)
        elif args.kind == "strict":
            bv = omega_strict_bound(args.n, args.k)
        else:
            bv = ekr_bound(args.n, args.k)
    params = {"kind": args.kind, "n": args.n, "k": args.k, "l": args.l}
    manifest = RunManifest(
        command="bound",
        params=params,
        seed=None,
        version=__version__,
        runtime_ms=_ms_since(t0),
        outcome=str(bv.value),
    )
    result = {"kind": args.kind, "config": list(bv.config), "value": str(bv.value)}
    _emit(args, manifest, result, [str(bv.value)])
    return EXIT_PASS


# ---------------------------------------------------------------------------
# omega
# ---------------------------------------------------------------------------


def _cmd_omega(args) -> int:
    t0 = time.perf_counter()
    fam_a = _load_family(args.family)
    if args.mode == "family":
        if args.family_b is not None:
            raise _CliUsageError("omega family takes a single family file")
        fam_b = fam_a
        if args.weight == "meet":
            value = omega_family(fam_a)
        else:
            value = omega_generic(fam_a, fam_a, unit_weight, strict=True) // 2
    else:
        if args.family_b is None:
            raise _CliUsageError(f"omega {args.mode} needs two family files")
        fam_b = _load_family(args.family_b)
        strict = args.mode == "strict"
        if args.weight == "meet":
            value = omega_cross_strict(fam_a, fam_b) if strict else omega_cross(fam_a, fam_b)
        else:
            value = omega_generic(fam_a, fam_b, unit_weight, strict=strict)
    profile = intersection_profile(fam_a, fam_b) if args.profile else None

    lines = [str(value)]
    result = {
        "mode": args.mode,
        "weight": args.weight,
        "value": str(value),
        "profile": None,
    }
    if profile is not None:
        result["profile"] = [str(c) for c in profile.counts]
        lines += [f"m={m}: {c}" for m, c in enumerate(profile.counts)]
    params = {
        "mode": args.mode,
        "family": args.family,
        "family_b": args.family_b,
        "weight": args.weight,
        "profile": args.profile,
    }
    manifest = RunManifest(
        command="omega",
        params=params,
        seed=None,
        version=__version__,
        runtime_ms=_ms_since(t0),
        outcome=str(value),
    )
    _emit(args, manifest, result, lines)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify_katona(args) -> int:
    t0 = time.perf_counter()
    rep = katona_verify(args.n, args.k, all_perms=args.all_perms, workers=args.workers)
    lines = []
    tag = "PASS" if rep.max_size == rep.expected_max else "FAIL"
    lines.append(
        f"{tag}: largest pairwise-meeting interval family has size {rep.max_size}"
        f" (expected {rep.expected_max}; {rep.perms_checked} permutation(s) checked)"
    )
    if rep.uniqueness_expected:
        tag = "PASS" if rep.all_maxima_fixed else "FAIL"
        lines.append(
            f"{tag}: every maximum-size interval family passes through one fixed element"
        )
    else:
        lines.append(
            f"INFO: n = 2k boundary; {rep.maxima_count} maxima per permutation,"
            " fixed-element form not required"
        )
    if not rep.maxima_count_consistent:
        lines.append("FAIL: maxima counts differ between permutations")
    result = {
        "n": rep.n,
        "k": rep.k,
        "all_perms": rep.all_perms,
        "perms_checked": rep.perms_checked,
        "max_size": rep.max_size,
        "expected_max": rep.expected_max,
        "maxima_count": rep.maxima_count,
        "maxima_count_consistent": rep.maxima_count_consistent,
        "all_maxima_fixed": rep.all_maxima_fixed,
        "uniqueness_expected": rep.uniqueness_expected,
        "ok": rep.ok,
        "example_maxima": [family_to_dict(f) for f in rep.example_maxima],
    }
    params = {
        "suite": "katona",
        "n": args.n,
        "k": args.k,
        "all_perms": args.all_perms,
        "workers": args.workers,
    }
    manifest = RunManifest(
        command="verify",
        params=params,
        seed=None,
        version=__version__,
        runtime_ms=_ms_since(t0),
        outcome="pass" if rep.ok else "fail",
    )
    _emit(args, manifest, result, lines)
    return EXIT_PASS if rep.ok else EXIT_FAIL


def _cmd_verify_doublecount(args) -> int:
    t0 = time.perf_counter()
    n, k, l = args.n, args.k, args.l
    fam_a = star(n, k, 1)
    fam_b = star(n, l, 1)
    checks = []
    lines = []
    all_ok = True
    for m in range(1, min(k, l) + 1):
        rep = double_count_check(fam_a, fam_b, m, workers=args.workers)
        all_ok = all_ok and rep.ok
        tag = "PASS" if rep.ok else "FAIL"
        lines.append(
            f"{tag}: m={m}: sweep total {rep.lhs_total} == {rep.pair_count} pair(s)"
            f" x {rep.per_pair_expected} permutation(s) each"
            f" over {rep.perms_checked} cyclic permutations"
        )
        if not rep.per_pair_ok:
            lines.append(f"FAIL: m={m}: per-pair census is not uniform")
        if not rep.meets_distinct_ok:
            lines.append(f"FAIL: m={m}: two representable pairs shared a meet")
        if rep.meet_bound_checked and not rep.meet_bound_ok:
            lines.append(
                f"FAIL: m={m}: more than {m} distinct meets in one permutation"
            )
        checks.append(
            {
                "m": m,
                "perms_checked": rep.perms_checked,
                "pair_count": str(rep.pair_count),
                "per_pair_expected": str(rep.per_pair_expected),
                "per_pair_ok": rep.per_pair_ok,
                "lhs_total": str(rep.lhs_total),
                "rhs_total": str(rep.rhs_total),
                "meets_distinct_ok": rep.meets_distinct_ok,
                "meet_bound_checked": rep.meet_bound_checked,
                "meet_bound_ok": rep.meet_bound_ok,
                "max_meets_in_one_perm": rep.max_meets_in_one_perm,
                "ok": rep.ok,
            }
        )
    result = {"n": n, "k": k, "l": l, "checks": checks, "ok": all_ok}
    params = {"suite": "doublecount", "n": n, "k": k, "l": l, "workers": args.workers}
    manifest = RunManifest(
        command="verify",
        params=params,
        seed=None,
        version=__version__,
        runtime_ms=_ms_since(t0),
        outcome="pass" if all_ok else "fail",
    )
    _emit(args, manifest, result, lines)
    return EXIT_PASS if all_ok else EXIT_FAIL


def _cmd_verify_identity(args) -> int:
    t0 = time.perf_counter()
    n_max = args.n_max
    checked = 0
    failures = []
    for n in range(2, n_max + 1):
        for k in range(1, n):
            for l in range(1, min(k, n - k) + 1):
                checked += 1
                if not star_identity_check(n, k, l):
                    failures.append([n, k, l])
    ok = not failures
    lines = []
    if ok:
        lines.append(
            f"PASS: star profile total matches the closed form for all"
            f" {checked} configurations with n <= {n_max}"
        )
    else:
        for n, k, l in failures:
            lines.append(f"FAIL: identity breaks at (n,k,l) = ({n},{k},{l})")
    result = {"n_max": n_max, "configs_checked": checked, "failures": failures, "ok": ok}
    params = {"suite": "identity", "n_max": n_max}
    manifest = RunManifest(
        command="verify",
        params=params,
        seed=None,
        version=__version__,
        runtime_ms=_ms_since(t0),
        outcome="pass" if ok else "fail",
    )
    _emit(args, manifest, result, lines)
    return EXIT_PASS if ok else EXIT_FAIL


def _cmd_verify_extremal(args) -> int:
    t0 = time.perf_counter()
    if args.l is None:
        res = max_omega_intersecting(args.n, args.k, budget=args.budget)
        revals = [omega_family(w) for w in res.witnesses]
    else:
        res = max_omega_cross(args.n, args.k, args.l, budget=args.budget)
        revals = [omega_cross(a, b) for a, b in res.witnesses]
    lines = []
    ok = True

    tag = "PASS" if res.tight else "FAIL"
    ok = ok and res.tight
    lines.append(f"{tag}: exact maximum {res.best_value} == closed-form bound {res.bound}")

    reval_ok = all(v == res.best_value for v in revals)
    ok = ok and reval_ok
    tag = "PASS" if reval_ok else "FAIL"
    lines.append(f"{tag}: all {len(res.witnesses)} witness class(es) re-evaluate to the maximum")

    uniq = uniqueness_report(res)
    if uniq.uniqueness_expected:
        ok = ok and uniq.ok
        tag = "PASS" if uniq.ok else "FAIL"
        shape = "star pair" if len(res.config) == 3 else "star"
        lines.append(f"{tag}: unique witness class, and it is the {shape}")
    else:
        stars = sum(1 for a in uniq.assessments if a.is_extremal_pattern)
        lines.append(
            f"INFO: boundary parameters; {uniq.witness_count} witness class(es),"
            f" {stars} of star form (uniqueness not claimed)"
        )

    result = {
        "search": res.to_json_dict(),
        "uniqueness": asdict(uniq),
        "ok": ok,
    }
    params = {
        "suite": "extremal",
        "n": args.n,
        "k": args.k,
        "l": args.l,
        "budget": args.budget,
    }
    manifest = RunManifest(
        command="verify",
        params=params,
        seed=None,
        version=__version__,
        runtime_ms=_ms_since(t0),
        outcome="pass" if ok else "fail",
    )
    _emit(args, manifest, result, lines)
    return EXIT_PASS if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def _search_lines(res) -> list[str]:
    lines = [
        f"best {res.best_value}  bound {res.bound}"
        f"  {'tight' if res.tight else 'not tight'}"
        f"  ({'exhaustive' if res.exhaustive else 'heuristic'})"
    ]
    lines.append(f"witness classes: {len(res.witnesses)}")
    for i, wit in enumerate(res.witnesses, start=1):
        if len(res.config) == 3:
            fa, fb = wit
            lines.append(f"  {i}: A = {_fmt_sets(fa)}")
            lines.append(f"     B = {_fmt_sets(fb)}")
        else:
            lines.append(f"  {i}: {_fmt_sets(wit)}")
    return lines


def _cmd_search_exact(args) -> int:
    t0 = time.perf_counter()
    if args.naive:
        if args.l is not None:
            raise _CliUsageError("--naive oracle only covers intersecting families")
        res = max_omega_intersecting_naive(args.n, args.k)
    elif args.l is None:
        res = max_omega_intersecting(args.n, args.k, budget=args.budget)
    else:
        res = max_omega_cross(args.n, args.k, args.l, budget=args.budget)
    params = {
        "n": args.n,
        "k": args.k,
        "l": args.l,
        "budget": args.budget,
        "naive": args.naive,
    }
    manifest = RunManifest(
        command="search-exact",
        params=params,
        seed=None,
        version=__version__,
        runtime_ms=_ms_since(t0),
        outcome=f"best={res.best_value} tight={str(res.tight).lower()}",
    )
    _emit(args, manifest, res.to_json_dict(), _search_lines(res))
    return EXIT_PASS


def _cmd_search_heuristic(args) -> int:
    t0 = time.perf_counter()
    cfg = HeuristicConfig(
        seed=args.seed,
        iterations=args.iterations,
        restarts=args.restarts,
        initial_temperature=args.temperature,
        decay=args.decay,
    )
    res = heuristic_max(args.n, args.k, args.l, cfg)
    params = {
        "n": args.n,
        "k": args.k,
        "l": args.l,
        "iterations": cfg.iterations,
        "restarts": cfg.restarts,
        "temperature": cfg.initial_temperature,
        "decay": cfg.decay,
    }
    manifest = RunManifest(
        command="search-heuristic",
        params=params,
        seed=cfg.seed,
        version=__version__,
        runtime_ms=_ms_since(t0),
        outcome=f"best={res.best_value}"
        + ("" if res.bound is None else f" bound={res.bound}"),
    )
    _emit(args, manifest, res.to_json_dict(), _search_lines(res))
    return EXIT_PASS


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------


def _add_common(sp) -> None:
    sp.add_argument("--json", action="store_true", help="emit a JSON report")
    sp.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")
    sp.add_argument(
        "--workers",
        type=int,
        default=1,
        metavar="N",
        help="processes for permutation sweeps (results are identical for any N)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intersum",
        description="Exact bounds, totals, and searches for intersecting-family"
        " intersection sums.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="closed-form extremal values")
    b.add_argument("kind", choices=["family", "cross", "strict", "ekr"])
    b.add_argument("n", type=int)
    b.add_argument("k", type=int)
    b.add_argument("l", type=int, nargs="?", help="second member size (cross only)")
    _add_common(b)
    b.set_defaults(func=_cmd_bound)

    o = sub.add_parser("omega", help="evaluate intersection totals of family files")
    o.add_argument("mode", choices=["family", "cross", "strict"])
    o.add_argument("family", metavar="FAMILY_JSON")
    o.add_argument("family_b", metavar="FAMILY_B_JSON", nargs="?")
    o.add_argument("--weight", choices=["meet", "unit"], default="meet")
    o.add_argument("--profile", action="store_true", help="also print the meet-size histogram")
    _add_common(o)
    o.set_defaults(func=_cmd_omega)

    v = sub.add_parser("verify", help="run a verification suite")
    vsub = v.add_subparsers(dest="suite", required=True)

    vk = vsub.add_parser("katona", help="interval families along cyclic permutations")
    vk.add_argument("n", type=int)
    vk.add_argument("k", type=int)
    vk.add_argument(
        "--all-perms",
        action="store_true",
        help="sweep all (n-1)! permutations instead of one representative",
    )
    _add_common(vk)
    vk.set_defaults(func=_cmd_verify_katona)

    vd = vsub.add_parser("doublecount", help="representable-pair census on two stars")
    vd.add_argument("n", type=int)
    vd.add_argument("k", type=int)
    vd.add_argument("l", type=int)
    _add_common(vd)
    vd.set_defaults(func=_cmd_verify_doublecount)

    vi = vsub.add_parser("identity", help="star profile total vs closed form")
    vi.add_argument("--n-max", type=int, default=20, dest="n_max")
    _add_common(vi)
    vi.set_defaults(func=_cmd_verify_identity)

    ve = vsub.add_parser("extremal", help="exact search against the closed-form bound")
    ve.add_argument("n", type=int)
    ve.add_argument("k", type=int)
    ve.add_argument("l", type=int, nargs="?")
    ve.add_argument("--budget", type=int, default=24, help="max C(n,k) for exhaustion")
    _add_common(ve)
    ve.set_defaults(func=_cmd_verify_extremal)

    se = sub.add_parser("search-exact", help="exhaustive maximization")
    se.add_argument("n", type=int)
    se.add_argument("k", type=int)
    se.add_argument("l", type=int, nargs="?")
    se.add_argument("--budget", type=int, default=24, help="max C(n,k) for exhaustion")
    se.add_argument(
        "--naive",
        action="store_true",
        help="use the enumerate-all-subsets oracle instead of branch and bound",
    )
    _add_common(se)
    se.set_defaults(func=_cmd_search_exact)

    sh = sub.add_parser("search-heuristic", help="seeded annealing lower bound")
    sh.add_argument("n", type=int)
    sh.add_argument("k", type=int)
    sh.add_argument("l", type=int, nargs="?")
    sh.add_argument("--seed", type=int, default=0)
    sh.add_argument("--iterations", type=int, default=2000)
    sh.add_argument("--restarts", type=int, default=8)
    sh.add_argument("--temperature", type=float, default=2.0)
    sh.add_argument("--decay", type=float, default=0.999)
    _add_common(sh)
    sh.set_defaults(func=_cmd_search_heuristic)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except _CliUsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _USAGE_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLargeError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CounterexampleError as exc:
        print(f"COUNTEREXAMPLE: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {exc.witness!r}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
