"""Command-line interface: exact stationary solves, formula expansion,
queue sums, Schubert expansion, enumeration, and verification suites.

All tables print states in lexicographic order and polynomials in canonical
term order, so output is byte-identical across runs with the same argv and
seed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import chain, formulas, mlq, perms, schubert
from .chain import RateParams
from .poly import Poly

JSON_SCHEMA = 1


@dataclass
class CaseResult:
    name: str
    ok: bool
    expected: str = ""
    actual: str = ""
    seconds: float = 0.0


@dataclass
class RunReport:
    suite: str
    cases: list = field(default_factory=list)

    def record(self, name: str, ok: bool, expected: str = "",
               actual: str = "", seconds: float = 0.0) -> None:
        self.cases.append(CaseResult(name, ok, expected, actual, seconds))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def emit(self, out, as_json: bool, timings: bool) -> None:
        if as_json:
            payload = {
                "schema": JSON_SCHEMA,
                "suite": self.suite,
                "ok": self.ok,
                "cases": [
                    {"name": c.name, "ok": c.ok,
                     **({"expected": c.expected, "actual": c.actual}
                        if not c.ok else {}),
                     **({"seconds": round(c.seconds, 3)} if timings else {})}
                    for c in self.cases],
            }
            print(json.dumps(payload, indent=2), file=out)
            return
        for c in self.cases:
            line = f"{'PASS' if c.ok else 'FAIL'} {c.name}"
            if timings:
                line += f"  ({c.seconds:.3f}s)"
            print(line, file=out)
            if not c.ok:
                print(f"  expected: {c.expected}", file=out)
                print(f"  actual:   {c.actual}", file=out)
        status = "all passed" if self.ok else "FAILURES"
        print(f"{self.suite}: {len(self.cases)} cases, {status}", file=out)


def _timed(report: RunReport, name: str, expected, actual) -> None:
    report.record(name, expected == actual, str(expected), str(actual))


def _usage(msg: str) -> "SystemExit":
    print(msg, file=sys.stderr)
    return SystemExit(2)


# -- parameter handling ----------------------------------------------------

def _parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def _load_params(args, n: int) -> RateParams:
    if args.params:
        with open(args.params) as fh:
            vals = [_parse_fraction(ln) for ln in fh if ln.strip()]
        if len(vals) != 2 * n:
            raise _usage(f"params file must hold {2 * n} rationals "
                         f"(x block then y block), got {len(vals)}")
        return RateParams(vals[:n], vals[n:])
    xvals = [Fraction(0)] * n
    seen = set()
    if args.eval:
        for item in args.eval.split(","):
            name, _, val = item.partition("=")
            name = name.strip()
            if not name.startswith("x"):
                raise _usage(f"--eval assigns x variables only: {item!r}")
            idx = int(name[1:])
            if not 1 <= idx <= n:
                raise _usage(f"x index out of range in {item!r}")
            xvals[idx - 1] = _parse_fraction(val)
            seen.add(idx)
    if args.y_zero:
        missing = [i for i in range(1, n + 1) if i not in seen]
        if missing:
            raise _usage(f"--eval must assign x{missing[0]}")
        return RateParams.y_zero(xvals)
    raise _usage("provide --params FILE or --y-zero with --eval")


# -- subcommands -----------------------------------------------------------

def cmd_psi(args) -> int:
    n = args.n
    params = _load_params(args, n)
    if not params.all_rates_positive():
        raise _usage("all transition rates must be strictly positive")
    psi = chain.solve_renormalized(n, params)
    rows = [(perms.perm_str(w), str(psi[w])) for w in sorted(psi)]
    if args.json:
        print(json.dumps({"schema": JSON_SCHEMA, "n": n,
                          "psi": {s: v for s, v in rows}}, indent=2))
    else:
        for s, v in rows:
            print(f"{s}\t{v}")
    return 0


def cmd_formula(args) -> int:
    w = perms.parse_perm(args.state)
    n = len(w)
    try:
        lams = formulas.psi_partitions(w)
    except formulas.FormulaDomainError as exc:
        raise _usage(str(exc))
    gvecs = [formulas.g_vector(n, lam) for lam in lams]
    labels = formulas.factor_permutations(w)
    if args.y_zero:
        mu, factors = formulas.main_formula_y0(w)
        prefactor = Poly.monomial(n, mu)
        expanded = formulas.assemble_y0(w)
    else:
        prefactor = formulas.xy_fact(w)
        expanded = formulas.main_formula(w)
    if args.json:
        print(json.dumps({
            "schema": JSON_SCHEMA,
            "state": perms.perm_str(w),
            "partitions": [list(lam) for lam in lams],
            "g_vectors": [list(g) for g in gvecs],
            "factors": [perms.perm_str(u) for u in labels],
            "prefactor": prefactor.to_text(),
            "expanded": expanded.to_json_terms(),
        }, indent=2))
        return 0
    print(f"state:      {perms.perm_str(w)}")
    print(f"partitions: {' '.join(str(tuple(lam)) for lam in lams) or '()'}")
    for lam, g, u in zip(lams, gvecs, labels):
        print(f"  {tuple(lam)} -> code {perms.perm_str(g)}"
              f" -> factor {perms.perm_str(u)}")
    print(f"prefactor:  {prefactor.to_text()}")
    print(f"expanded:   {expanded.to_text()}")
    return 0


def cmd_count(args) -> int:
    counts = []
    for n in range(1, args.max_n + 1):
        got = perms.count_evil_avoiding(n)
        want = perms.count_evil_avoiding_recurrence(n)
        closed = perms.count_evil_avoiding_closed_form(n)
        if got != want or got != closed:
            raise SystemExit(f"count mismatch at n={n}: filter {got}, "
                             f"recurrence {want}, closed form {closed}")
        counts.append(got)
    if args.json:
        print(json.dumps({"schema": JSON_SCHEMA, "counts": counts}, indent=2))
    else:
        print(" ".join(str(c) for c in counts))
    return 0


def cmd_mlq(args) -> int:
    w = perms.parse_perm(args.state)
    n = args.n if args.n else len(w)
    if n != len(w):
        raise _usage("--n disagrees with --state length")
    if args.list:
        lines = []
        for q in mlq.iter_queues(n):
            pq = mlq.bully_project(q)
            if mlq.queue_type(pq) == w:
                lines.append((q.to_text(),
                              Poly.monomial(n, mlq.queue_weight(pq)).to_text()))
        if args.json:
            print(json.dumps({"schema": JSON_SCHEMA,
                              "state": perms.perm_str(w),
                              "queues": [{"grid": g, "weight": wt}
                                         for g, wt in lines]}, indent=2))
        else:
            for g, wt in lines:
                print(g)
                print(f"weight: {wt}")
                print()
            print(f"{len(lines)} queues")
    else:
        total = mlq.psi_via_mlq(w)
        if args.json:
            print(json.dumps({"schema": JSON_SCHEMA,
                              "state": perms.perm_str(w),
                              "psi": total.to_json_terms()}, indent=2))
        else:
            print(total.to_text())
    return 0


def cmd_schubert(args) -> int:
    w = perms.parse_perm(args.perm)
    p = (schubert.single_schubert(w) if args.single
         else schubert.double_schubert(w))
    if args.json:
        print(json.dumps({"schema": JSON_SCHEMA, "perm": perms.perm_str(w),
                          "single": bool(args.single),
                          "poly": p.to_json_terms()}, indent=2))
    else:
        print(p.to_text())
    return 0


# -- verification suites ---------------------------------------------------

def _suite_counts(report: RunReport, n: int, seed: int) -> None:
    for m in range(1, n + 1):
        want = perms.count_evil_avoiding_recurrence(m)
        _timed(report, f"count n={m} filter vs recurrence",
               want, perms.count_evil_avoiding(m))
        _timed(report, f"count n={m} closed form",
               want, perms.count_evil_avoiding_closed_form(m))


def _suite_main(report: RunReport, n: int, seed: int) -> None:
    states = perms.enumerate_states(n)
    if n <= 4:
        psis = chain.symbolic_stationary(n)
        for w in states:
            got = formulas.main_formula(w)
            report.record(f"product formula {perms.perm_str(w)} (symbolic)",
                          got == psis[w], psis[w].to_text(), got.to_text())
    else:
        for w in states:
            lhs = formulas.main_formula(w)
            rhs = lambda xv, yv: chain.solve_renormalized(
                n, RateParams(xv, yv))[w]
            ok = chain.identity_check(lhs, rhs, n, trials=5, seed=seed)
            report.record(f"product formula {perms.perm_str(w)} (5 points)",
                          ok, "equal at all points", "ok" if ok else "mismatch")


def _suite_eta(report: RunReport, n: int, seed: int) -> None:
    if n <= 4:
        psis = {w: p.substitute_y_zero()
                for w, p in chain.symbolic_stationary(n).items()}
    else:
        psis = mlq.all_psi_via_mlq(n)
    for w in sorted(psis):
        content, _ = psis[w].monomial_content()
        got = content[:n]
        want = formulas.eta(w)
        report.record(f"monomial factor {perms.perm_str(w)}",
                      got == want, str(want), str(got))


def _suite_mlq(report: RunReport, n: int, seed: int) -> None:
    queue_psis = mlq.all_psi_via_mlq(n)
    for w in sorted(queue_psis):
        lhs = queue_psis[w]
        rhs = lambda xv, yv: chain.solve_renormalized(
            n, RateParams.y_zero(xv))[w]
        ok = chain.identity_check(lhs, rhs, n, trials=3, seed=seed)
        report.record(f"queue sum vs solver {perms.perm_str(w)}", ok,
                      "equal at all points", "ok" if ok else "mismatch")


def _suite_flags(report: RunReport, n: int, seed: int) -> None:
    for w in perms.iter_perms(n):
        if schubert.is_vexillary(w):
            ok = schubert.verify_flagged_factorization(w)
            report.record(f"flagged factorization {perms.perm_str(w)}",
                          ok, "equal", "ok" if ok else "mismatch")


SUITES = {
    "counts": _suite_counts,
    "main": _suite_main,
    "eta": _suite_eta,
    "mlq": _suite_mlq,
    "flags": _suite_flags,
}


def cmd_verify(args) -> int:
    report = RunReport(suite=args.suite)
    t0 = time.monotonic()
    SUITES[args.suite](report, args.n, args.seed)
    if report.cases:
        report.cases[-1].seconds = time.monotonic() - t0
    report.emit(sys.stdout, args.json, args.timings)
    return 0 if report.ok else 1


# -- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ringtasep",
        description="Exact stationary measures of the inhomogeneous TASEP "
                    "on a ring, with product-formula and queue-sum routes.")
    ap.add_argument("--seed", type=int, default=0,
                    help="seed for randomized identity testing")
    ap.add_argument("--json", action="store_true",
                    help="emit machine-readable output")
    ap.add_argument("--timings", action="store_true",
                    help="include wall-clock times in reports")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", help="solve the chain at a parameter point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--params", help="file of 2n rationals, x block then y block")
    p.add_argument("--y-zero", action="store_true")
    p.add_argument("--eval", help="x assignments, e.g. x1=2,x2=1,x3=1")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("formula", help="expand the product formula for a state")
    p.add_argument("--state", required=True)
    p.add_argument("--y-zero", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("count", help="enumerate the pattern-avoiding class")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("mlq", help="queue sums for a state")
    p.add_argument("--state", required=True)
    p.add_argument("--n", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--list", action="store_true")
    group.add_argument("--sum", action="store_true")
    p.set_defaults(func=cmd_mlq)

    p = sub.add_parser("schubert", help="expand a Schubert polynomial")
    p.add_argument("--perm", required=True)
    p.add_argument("--single", action="store_true",
                   help="y = 0 specialization")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
