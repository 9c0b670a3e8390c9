"""
Command-line front end.

Subcommands::

    pwmean mean PROBLEM --kind wasserstein-t [--t T] [--out RESULT]
    pwmean distance PROBLEM --metric riemannian|bures-wasserstein
    pwmean verify [--seed 42] [--instances 100] [--checks det order ...] [--out REPORT]
    pwmean gen --dim M --count N [--seed S] [--t T] [--weights uniform|random] [--out PROBLEM]

Exit codes: 0 success, 1 a verified check failed, 2 malformed input,
3 solver did not converge or numerical breakdown, 4 domain error.
"""

from __future__ import annotations

import argparse
import hashlib
import sys

import numpy as np

from . import __version__
from .checks import CHECKS, SuiteConfig, run_suite
from .errors import NumericError, PwmeanError
from .files import ProblemFile, ProblemFormatError, ReportFile, dumps, format_float, parse_problem
from .means import (
    SolverConfig,
    arithmetic_mean,
    bures_wasserstein_distance,
    cartan_mean,
    geodesic,
    harmonic_mean,
    log_euclidean_mean,
    riemannian_distance,
    uniform_weights,
    wasserstein_mean_t,
)
from .spd import make_rng, random_spd_from

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_NO_CONVERGENCE = 3
EXIT_DOMAIN = 4

MEAN_KINDS = ("wasserstein-t", "cartan", "arithmetic", "harmonic", "log-euclidean", "geodesic")
METRICS = ("riemannian", "bures-wasserstein")


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from exc


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _load(path: str) -> tuple[ProblemFile, bytes]:
    text = _read_text(path)
    return parse_problem(text), text.encode("utf-8")


def _floats(values: list[str], name: str) -> tuple[float, ...]:
    out = []
    for v in values:
        for part in v.split(","):
            if part.strip():
                try:
                    out.append(float(part))
                except ValueError:
                    raise _Fail(EXIT_PARSE, f"{name}: not a number: {part!r}") from None
    return tuple(out)


def _ints(values: list[str], name: str) -> tuple[int, ...]:
    out = []
    for x in _floats(values, name):
        if x != int(x):
            raise _Fail(EXIT_PARSE, f"{name}: not an integer: {x!r}")
        out.append(int(x))
    return tuple(out)


def _names(values: list[str]) -> list[str]:
    return [p.strip() for v in values for p in v.split(",") if p.strip()]


# --- subcommands -----------------------------------------------------------


def cmd_mean(args) -> int:
    pf, _ = _load(args.input)
    mats, w = pf.matrices, pf.weights
    cfg = SolverConfig(
        tolerance=args.tolerance, max_iterations=args.max_iterations, method=args.method
    )
    result = {"kind": args.kind, "dim": pf.dim}
    if args.kind == "wasserstein-t":
        problem = pf.to_problem(args.t)
        result["t"] = problem.t
        rep = wasserstein_mean_t(problem, cfg)
        solution, iterations, converged = rep.solution, rep.iterations, rep.converged
        residuals = dict(rep.residuals)
        history = rep.residual_history
    elif args.kind == "cartan":
        rep = cartan_mean(mats, w, cfg)
        solution, iterations, converged = rep.solution, rep.iterations, rep.converged
        residuals = {"karcher": rep.residual}
        history = rep.residual_history
    else:
        if args.kind == "geodesic":
            if len(mats) != 2:
                raise _Fail(EXIT_DOMAIN, f"geodesic needs exactly 2 matrices, got {len(mats)}")
            solution = geodesic(mats[0], mats[1], float(w[1]))
        else:
            fn = {"arithmetic": arithmetic_mean, "harmonic": harmonic_mean,
                  "log-euclidean": log_euclidean_mean}[args.kind]
            solution = fn(mats, w)
        iterations, converged, residuals, history = 0, True, {}, []
    result.update(
        converged=bool(converged),
        iterations=int(iterations),
        residuals=residuals,
        residual_history=list(history),
        solution=np.asarray(solution).tolist(),
    )
    _write_text(args.out, dumps(result))
    if not converged:
        raise _Fail(EXIT_NO_CONVERGENCE, f"solver did not converge in {iterations} iterations")
    return EXIT_OK


def cmd_distance(args) -> int:
    pf, _ = _load(args.input)
    if len(pf.matrices) != 2:
        raise _Fail(EXIT_DOMAIN, f"distance needs exactly 2 matrices, got {len(pf.matrices)}")
    fn = riemannian_distance if args.metric == "riemannian" else bures_wasserstein_distance
    print(format_float(fn(*pf.matrices)))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        seed=args.seed,
        instances=args.instances,
        dims=_ints(args.dims, "--dims"),
        tuple_sizes=_ints(args.tuple_sizes, "--tuple-sizes"),
        t_grid=_floats(args.t_grid, "--t-grid"),
        slack=args.slack,
        condition_bound=args.condition_bound,
    )
    checks = _names(args.checks) if args.checks else None
    extra, problems = {}, None
    if args.input is not None:
        pf, raw = _load(args.input)
        problems = [pf.to_problem(0.5)]
        extra["input_sha256"] = hashlib.sha256(raw).hexdigest()
    reports = run_suite(cfg, checks, problems)
    report = ReportFile.build(cfg, reports, extra)
    _write_text(args.out, report.dumps())
    for r in reports:
        status = "PASS" if r.ok else "FAIL"
        print(
            f"{status} {r.check_id}: {r.passes}/{r.instances_run} pass, {r.failures} fail, "
            f"{r.inconclusive} inconclusive, {r.skipped} skipped, worst margin {r.worst_margin:.3e}",
            file=sys.stderr,
        )
    return EXIT_OK if report.verdict == "pass" else EXIT_CHECK_FAILED


def cmd_gen(args) -> int:
    if args.dim < 1 or args.count < 1:
        raise _Fail(EXIT_DOMAIN, "--dim and --count must be positive")
    rng = make_rng(args.seed, "gen")
    mats = [random_spd_from(rng, args.dim, args.condition_bound) for _ in range(args.count)]
    if args.weights == "uniform":
        w = uniform_weights(args.count)
    else:
        w = rng.uniform(0.1, 1.0, args.count)
        w = w / w.sum()
    pf = ProblemFile(args.dim, w, mats, args.t)
    text = pf.dumps()
    parse_problem(text)
    _write_text(args.out, text)
    return EXIT_OK


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pwmean", description="Means of positive definite matrices.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mean", help="compute a mean of the matrices in a problem file")
    p.add_argument("input", help="problem file (JSON), or - for stdin")
    p.add_argument("--kind", choices=MEAN_KINDS, default="wasserstein-t")
    p.add_argument("--t", type=float, default=None, help="override the file's t")
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.add_argument("--max-iterations", type=int, default=500)
    p.add_argument("--method", choices=("accelerated", "picard"), default="accelerated")
    p.add_argument("--out", default=None, help="result file (default stdout)")
    p.set_defaults(func=cmd_mean)

    p = sub.add_parser("distance", help="distance between the two matrices of a problem file")
    p.add_argument("input")
    p.add_argument("--metric", choices=METRICS, default="riemannian")
    p.set_defaults(func=cmd_distance)

    d = SuiteConfig()
    p = sub.add_parser("verify", help="run the inequality checks")
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--instances", type=int, default=d.instances)
    p.add_argument("--dims", nargs="+", default=[",".join(map(str, d.dims))])
    p.add_argument("--tuple-sizes", nargs="+", default=[",".join(map(str, d.tuple_sizes))])
    p.add_argument("--t-grid", nargs="+", default=[",".join(map(repr, d.t_grid))])
    p.add_argument("--slack", type=float, default=d.slack)
    p.add_argument("--condition-bound", type=float, default=d.condition_bound)
    p.add_argument("--checks", nargs="+", default=None, help=f"subset of: {' '.join(CHECKS)}")
    p.add_argument("--input", default=None, help="check this problem instead of random instances")
    p.add_argument("--out", default=None, help="report file (default stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a random problem file")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--condition-bound", type=float, default=100.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t", type=float, default=0.5)
    p.add_argument("--weights", choices=("uniform", "random"), default="uniform")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        code, message = exc.code, str(exc)
    except ProblemFormatError as exc:
        code, message = EXIT_PARSE, str(exc)
    except NumericError as exc:
        code, message = EXIT_NO_CONVERGENCE, str(exc)
    except PwmeanError as exc:
        code, message = EXIT_DOMAIN, str(exc)
    print(f"pwmean: error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
