"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input file,
3 budget exceeded or a precondition of the algorithm does not hold.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from . import io
from .colouring import ColouredGraph, mns, nu_vector
from .errors import BudgetExceeded, PreconditionError
from .formulas import (
    MatchingProfile,
    asymptotics,
    crossing_density,
    dense_construction,
    grt,
    sparse_construction,
)
from .oracle import brute_grt, ramsey_search
from .pipeline import check_distil, distil, recolour, verify_trace
from .sampling import random_colouring, random_profile

SCHEMA = 1


class UsageError(Exception):
    pass


def _profile(text: str) -> MatchingProfile:
    try:
        return MatchingProfile.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad profile {text!r}: {exc}") from None


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


# -- formula -------------------------------------------------------------------


def cmd_formula(args) -> int:
    p = args.t
    r = grt(args.ell, args.n, p)
    payload = {"ell": args.ell, "n": args.n, "t": list(p.t), "value": r.value,
               "regime": r.regime, "sparse": r.sparse, "dense": r.dense,
               "lambda": p.lam, "t_max": p.t_max}
    _emit(args, payload, [
        f"GRT_{args.ell}({args.n} -> {p}K2) = {r.value}",
        f"regime: {r.regime}",
        f"sparse candidate: {r.sparse}",
        f"dense candidate: {r.dense}",
        f"Lambda = {p.lam}, t_max = {p.t_max}",
    ])
    return 0


# -- construct -----------------------------------------------------------------


def cmd_construct(args) -> int:
    build = sparse_construction if args.kind == "sparse" else dense_construction
    try:
        cg = build(args.n, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = io.dumps(cg)
    if args.out and args.out != "-":
        io.write(args.out, cg)
    nu = nu_vector(cg)
    ok = args.t.admits(nu) and io.loads(text) == cg
    payload = {"kind": args.kind, "n": args.n, "t": list(args.t.t), "nu": list(nu),
               f"m_{args.ell}": cg.m_ell(args.ell), "self_check": ok}
    lines = [] if args.out else [text.rstrip("\n")]
    lines += [f"nu = {nu}", f"m_{args.ell} = {cg.m_ell(args.ell)}",
              f"self-check: {'PASS' if ok else 'FAIL'}"]
    _emit(args, payload, lines)
    return 0 if ok else 1


# -- distil --------------------------------------------------------------------


def _trace_json(trace) -> list[dict]:
    return [{"kind": r.kind, "colour": r.colour,
             "sets": {k: list(v) for k, v in r.sets.items()},
             "m_ell": {str(k): v for k, v in r.m_ell.items()},
             "nu": list(r.nu), "mns": r.mns, "theta": list(r.theta)}
            for r in trace.records]


def run_distil(cg: ColouredGraph, p: MatchingProfile, ells) -> dict:
    """Distil then recolour, with every output guarantee checked."""
    if p.q != cg.q:
        raise UsageError(f"profile has {p.q} colours but the graph has {cg.q}")
    if not p.admits(nu_vector(cg)):
        raise PreconditionError(f"input is not {p}K2-free: nu = {nu_vector(cg)}")
    result = distil(cg, ells)
    out = recolour(result.graph, result.cone, result.kappa, p, result.clique_colour,
                   trace=result.trace)
    checks = check_distil(cg, result, ells)
    checks.append(("monotone_trace", not verify_trace(result.trace)))
    checks.append(("recoloured_free", p.admits(nu_vector(out)) and not out.layer(0).num_edges()))
    return {"result": result, "output": out, "checks": checks}


def cmd_distil(args) -> int:
    try:
        cg = io.read(args.input)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    p = args.t or MatchingProfile(tuple(v + 1 for v in nu_vector(cg)))
    ells = sorted({args.ell, *args.also_ell}) if args.also_ell else [args.ell]
    run = run_distil(cg, p, ells)
    result, out, checks = run["result"], run["output"], run["checks"]
    if args.out:
        io.write(args.out, out)
    trace = _trace_json(result.trace)
    if args.trace:
        with open(args.trace, "w", newline="\n") as fh:
            json.dump(trace, fh, indent=1)
            fh.write("\n")
    x, y = 2 * result.kappa + 1, len(result.cone)
    before = {ell: cg.m_ell(ell) for ell in ells}
    after = {ell: out.m_ell(ell) for ell in ells}
    payload = {"t": list(p.t), "m_ell_before": {str(k): v for k, v in before.items()},
               "m_ell_after": {str(k): v for k, v in after.items()},
               "x": x, "y": y, "kappa": result.kappa, "cone": sorted(result.cone),
               "clique": sorted(result.clique), "mns_before": mns(cg),
               "checks": {name: ok for name, ok in checks}, "trace": trace}
    lines = [f"m_{ell}: {before[ell]} -> {after[ell]}" for ell in ells]
    lines.append(f"clique-cone (x, y) = ({x}, {y})")
    lines += [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in checks]
    _emit(args, payload, lines)
    return 0 if all(ok for _, ok in checks) else 1


# -- verify --------------------------------------------------------------------


def _verify_grt(args) -> tuple[bool, list[str], dict]:
    p = args.t or MatchingProfile((2, 2))
    rows, ok = [], True
    for n in range(args.max_n + 1):
        brute = brute_grt(args.ell, n, p, jobs=args.jobs).value
        formula = grt(args.ell, n, p).value
        good = brute == formula
        ok &= good
        rows.append({"n": n, "brute": brute, "formula": formula, "pass": good})
    lines = [f"{'PASS' if r['pass'] else 'FAIL'} n={r['n']}: brute {r['brute']} "
             f"formula {r['formula']}" for r in rows]
    return ok, lines, {"rows": rows}


def _verify_ramsey(args) -> tuple[bool, list[str], dict]:
    p = args.t or MatchingProfile((2, 2))
    found = ramsey_search(p, jobs=args.jobs)
    ok = found == p.ramsey
    return ok, [f"{'PASS' if ok else 'FAIL'} R({p}) search {found} = formula {p.ramsey}"], \
        {"search": found, "formula": p.ramsey}


def _verify_pipeline(args) -> tuple[bool, list[str], dict]:
    rng = random.Random(args.seed)
    ells = sorted({args.ell, 2, 3, 4})
    passed, failures = 0, []
    for case in range(args.cases):
        n = rng.randint(1, max(1, args.max_n))
        if args.t and 2 * (args.t.t_max - 1) < n and args.t.lam < n:
            p = args.t
        else:
            p = random_profile(n, rng.randint(1, 2), rng)
        cg = random_colouring(n, p, rng)
        checks = run_distil(cg, p, ells)["checks"]
        if all(ok for _, ok in checks):
            passed += 1
        else:
            failures.append({"case": case, "file": io.dumps(cg),
                             "failed": [name for name, ok in checks if not ok]})
    ok = passed == args.cases
    lines = [f"{'PASS' if ok else 'FAIL'} {passed}/{args.cases} pipeline runs clean"]
    lines += [f"  case {f['case']}: {', '.join(f['failed'])}" for f in failures]
    return ok, lines, {"passed": passed, "cases": args.cases, "failures": failures}


def cmd_verify(args) -> int:
    mode = {"grt": _verify_grt, "ramsey": _verify_ramsey, "pipeline": _verify_pipeline}
    ok, lines, payload = mode[args.mode](args)
    _emit(args, {"mode": args.mode, "pass": ok, **payload}, lines)
    return 0 if ok else 1


# -- asymptotics ---------------------------------------------------------------


def cmd_asymptotics(args) -> int:
    if args.sweep is not None:
        if args.sweep < 2:
            raise UsageError("--sweep needs at least 2 points")
        alphas = [i / (args.sweep - 1) for i in range(args.sweep)]
        fh = open(args.out, "w", newline="") if args.out else sys.stdout
        try:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["alpha", "s", "d", "bound"])
            for a in alphas:
                r = asymptotics(args.q, a)
                w.writerow([repr(a), repr(r.s), repr(r.d), repr(r.bound)])
        finally:
            if fh is not sys.stdout:
                fh.close()
        return 0
    if args.alpha is None:
        raise UsageError("give --alpha or --sweep")
    try:
        r = asymptotics(args.q, args.alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"q": args.q, "alpha": args.alpha, "s": r.s, "d": r.d,
               "M": crossing_density(args.q), "bound": r.bound}
    _emit(args, payload, [f"s = {r.s!r}", f"d = {r.d!r}", f"M(q) = {r.m_threshold!r}",
                          f"bound = {r.bound!r}"])
    return 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grtmatch",
                                 description="Clique counts in graphs with matching-bounded colourings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, need_t=True):
        sp.add_argument("--ell", type=int, default=2, help="clique size (default 2)")
        sp.add_argument("--t", type=_profile, required=need_t, default=None,
                        help="comma-separated thresholds t1,...,tq")
        sp.add_argument("--json", action="store_true", help="print a JSON report")

    sp = sub.add_parser("formula", help="evaluate the closed-form GRT value")
    common(sp)
    sp.add_argument("--n", type=int, required=True, help="number of vertices")
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("construct", help="write a sparse or dense extremal colouring")
    common(sp)
    sp.add_argument("--kind", choices=["sparse", "dense"], required=True)
    sp.add_argument("--n", type=int, required=True, help="number of vertices")
    sp.add_argument("--out", help="output graph file (default: print it)")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("distil", help="run the reduction pipeline on a graph file")
    common(sp, need_t=False)
    sp.add_argument("--in", dest="input", required=True, help="input graph file")
    sp.add_argument("--out", help="write the recoloured graph here")
    sp.add_argument("--trace", help="write the JSON step trace here")
    sp.add_argument("--also-ell", type=int, nargs="*", default=[],
                    help="extra clique sizes to track")
    sp.set_defaults(func=cmd_distil)

    sp = sub.add_parser("verify", help="brute-force sweeps against the formulas")
    common(sp, need_t=False)
    sp.add_argument("--mode", choices=["grt", "ramsey", "pipeline"], required=True)
    sp.add_argument("--max-n", type=int, default=6, help="largest n to check (default 6)")
    sp.add_argument("--seed", type=int, default=0, help="random seed for pipeline mode")
    sp.add_argument("--cases", type=int, default=200, help="pipeline cases (default 200)")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for grt mode")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("asymptotics", help="edge-density rates for ell = 2")
    sp.add_argument("--q", type=int, required=True, help="number of colours")
    sp.add_argument("--alpha", type=float, help="relative matching bound in [0, 1]")
    sp.add_argument("--sweep", type=int, help="emit a CSV over this many alpha values in [0, 1]")
    sp.add_argument("--out", help="CSV path for --sweep (default stdout)")
    sp.add_argument("--json", action="store_true", help="print a JSON report")
    sp.set_defaults(func=cmd_asymptotics)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
