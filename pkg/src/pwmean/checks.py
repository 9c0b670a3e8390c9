"""
Numerical verification of the inequalities, limits and majorizations satisfied
by the parameterized Wasserstein mean.

Every checker draws seeded instances (or takes user problems), evaluates one
family of statements on each, and returns a :class:`CheckReport`.  Instance
``i`` of checker ``c`` uses the Philox stream ``make_rng(seed, c, i)``, so
reports are a pure function of the :class:`SuiteConfig` and independent of
evaluation order.

Margin conventions, per recorded quantity:

* Loewner comparisons record ``lambda_min(B - A) / max(1, ||B - A||_F)``;
  the comparison passes iff the margin is ``>= -slack``.
* Scalar inequalities record a relative gap (e.g. ``ratio - 1``) that also
  passes iff ``>= -slack``.
* Log-majorization records the worst prefix log-margin, passing iff
  ``>= -log1p(slack)``.
* Identities record ``identity_tol - error``; they pass iff ``>= 0``.
"""

from __future__ import annotations

import hashlib
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

import numpy as np

from .errors import DomainError, PwmeanError
from .majorization import log_majorizes, spectrum
from .means import (
    MeanProblem,
    SolverConfig,
    cartan_mean,
    diagonal_block_map,
    log_euclidean_mean,
    transport_terms,
    validate_t,
    wasserstein_mean_t,
)
from .spd import (
    _eigh,
    _from_eig,
    loewner_compare,
    make_rng,
    mat_log,
    mat_power,
    operator_norm,
    random_orthogonal,
    random_spd_from,
)

__all__ = [
    "CHECKS",
    "CheckReport",
    "InstanceRecord",
    "SuiteConfig",
    "run_check",
    "run_suite",
] + [f"check_{name}" for name in (
    "mean_axioms", "det_inequality", "interval_bound", "norm_inequality",
    "arith_wass", "loewner_bounds", "lie_trotter", "order_implications",
    "kantorovich", "yamazaki", "majorization_chain", "power_majorization",
)]

LIE_TROTTER_STEPS = (0.2, 0.1, 0.05, 0.025)
LIE_TROTTER_RATIO = 0.75
LIE_TROTTER_FINAL = 0.05


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 42
    instances: int = 100
    dims: tuple[int, ...] = (2, 3, 4)
    tuple_sizes: tuple[int, ...] = (2, 3, 4)
    t_grid: tuple[float, ...] = (0.1, 0.3, 0.5, 0.7, 0.9)
    slack: float = 1e-9
    identity_tol: float = 1e-8
    condition_bound: float = 100.0
    solver_tolerance: float = 1e-12
    max_iterations: int = 2000

    def __post_init__(self):
        for name in ("dims", "tuple_sizes", "t_grid"):
            value = tuple(getattr(self, name))
            if not value:
                raise DomainError(f"{name} must be non-empty")
            object.__setattr__(self, name, value)
        object.__setattr__(self, "dims", tuple(int(m) for m in self.dims))
        object.__setattr__(self, "tuple_sizes", tuple(int(n) for n in self.tuple_sizes))
        object.__setattr__(self, "t_grid", tuple(validate_t(t) for t in self.t_grid))
        if min(self.dims) < 1 or min(self.tuple_sizes) < 1:
            raise DomainError("dims and tuple sizes must be positive")
        if self.instances < 0:
            raise DomainError("instances must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")
        if self.slack < 0 or self.identity_tol <= 0:
            raise DomainError("tolerances must be non-negative")
        if not self.condition_bound >= 1:
            raise DomainError("condition bound must be >= 1")

    @property
    def solver(self) -> SolverConfig:
        return SolverConfig(tolerance=self.solver_tolerance, max_iterations=self.max_iterations)

    def to_dict(self) -> dict:
        d = asdict(self)
        return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteConfig":
        return cls(**d)


@dataclass
class InstanceRecord:
    index: int
    inputs_hash: str
    verdict: str
    margins: dict[str, float] = field(default_factory=dict)
    info: dict[str, float] = field(default_factory=dict)
    note: str = ""


@dataclass
class CheckReport:
    """Aggregate outcome of one checker.

    ``passes + failures + inconclusive + skipped == instances_run``.
    ``ok`` requires at least one pass and no failure or inconclusive instance.
    """

    check_id: str
    theorem: str
    instances_run: int
    passes: int
    failures: int
    inconclusive: int
    skipped: int
    worst_margin: float
    details: list[InstanceRecord]

    @property
    def ok(self) -> bool:
        return self.passes > 0 and self.failures == 0 and self.inconclusive == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        d = {k: v for k, v in d.items() if k != "ok"}
        d["details"] = [InstanceRecord(**r) for r in d["details"]]
        return cls(**d)


# --- instance plumbing -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class _Instance:
    index: int
    matrices: tuple[np.ndarray, ...]
    weights: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]

    @property
    def n(self) -> int:
        return len(self.matrices)

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(np.ascontiguousarray(self.weights).tobytes())
        for A in self.matrices:
            h.update(np.ascontiguousarray(A).tobytes())
        return h.hexdigest()[:16]


class _Inconclusive(Exception):
    pass


def _generate(cfg: SuiteConfig, check_id: str) -> Iterable[_Instance]:
    for i in range(cfg.instances):
        rng = make_rng(cfg.seed, check_id, i)
        m = int(rng.choice(cfg.dims))
        n = int(rng.choice(cfg.tuple_sizes))
        mats = tuple(random_spd_from(rng, m, cfg.condition_bound) for _ in range(n))
        w = rng.uniform(0.1, 1.0, n)
        yield _Instance(i, mats, w / w.sum())


def _given(problems) -> Iterable[_Instance]:
    for i, p in enumerate(problems):
        yield _Instance(i, tuple(p.matrices), np.asarray(p.weights))


class _Probe:
    """Collects margins for one instance and decides its verdict."""

    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self.margins: dict[str, float] = {}
        self.info: dict[str, float] = {}
        self.failed: list[str] = []
        self.skipped: list[str] = []

    def _record(self, name: str, margin: float, passed: bool) -> None:
        self.margins[name] = float(margin)
        if not passed:
            self.failed.append(name)

    def loewner(self, name: str, A, B) -> None:
        """Require ``A <= B``."""
        v = loewner_compare(A, B, self.cfg.slack)
        self._record(name, v.normalized_margin, v.leq)

    def at_least(self, name: str, gap: float) -> None:
        """Require a relative gap ``>= -slack``."""
        self._record(name, gap, gap >= -self.cfg.slack)

    def identity(self, name: str, error: float) -> None:
        self._record(name, self.cfg.identity_tol - error, error <= self.cfg.identity_tol)

    def bound(self, name: str, value: float, limit: float) -> None:
        """Require ``value <= limit`` (no slack; used for rate tests)."""
        self._record(name, limit - value, value <= limit)

    def majorized(self, name: str, verdict) -> None:
        self._record(name, verdict.worst_margin, verdict.holds)
        if verdict.mode == "strict":
            self.identity(name + ":det", abs(verdict.determinant_gap))

    def skip(self, name: str) -> None:
        self.skipped.append(name)

    def verdict(self) -> str:
        if self.failed:
            return "fail"
        if self.margins:
            return "pass"
        return "skip"


def _rel(X, Y) -> float:
    return float(np.linalg.norm(X - Y) / max(np.linalg.norm(Y), np.finfo(float).tiny))


def _omega(cfg: SuiteConfig, matrices, weights, t) -> np.ndarray:
    report = wasserstein_mean_t(MeanProblem(tuple(matrices), weights, t), cfg.solver)
    if not report.converged:
        raise _Inconclusive(f"Omega_t solve did not converge (t={t}, residual {report.residual:.3g})")
    return report.solution


def _cartan(cfg: SuiteConfig, matrices, weights) -> np.ndarray:
    report = cartan_mean(matrices, weights, cfg.solver)
    if not report.converged:
        raise _Inconclusive(f"Cartan solve did not converge (residual {report.residual:.3g})")
    return report.solution


def _upper_grid(cfg: SuiteConfig) -> list[float]:
    return [t for t in cfg.t_grid if t >= 0.5]


def _power_sum(matrices, weights, r) -> np.ndarray:
    return sum(w * mat_power(A, r) for w, A in zip(weights, matrices))


# --- individual checks -----------------------------------------------------


def _axioms(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    for t in cfg.t_grid:
        X = _omega(cfg, mats, w, t)
        alpha = float(np.exp(rng.uniform(np.log(0.1), np.log(10.0))))
        probe.identity(f"homogeneity@{t}", _rel(_omega(cfg, [alpha * A for A in mats], w, t), alpha * X))
        sigma = rng.permutation(inst.n)
        probe.identity(
            f"permutation@{t}", _rel(_omega(cfg, [mats[i] for i in sigma], w[sigma], t), X)
        )
        for p in (2, 3):
            probe.identity(
                f"repetition{p}@{t}", _rel(_omega(cfg, mats * p, np.tile(w, p) / p, t), X)
            )
        U = random_orthogonal(rng, inst.dim)
        probe.identity(
            f"unitary@{t}", _rel(_omega(cfg, [U @ A @ U.T for A in mats], w, t), U @ X @ U.T)
        )
        if inst.n >= 2:
            w_hat = w[:-1] / w[:-1].sum()
            Xs = _omega(cfg, mats[:-1], w_hat, t)
            probe.identity(f"self_reference@{t}", _rel(_omega(cfg, mats[:-1] + (Xs,), w, t), Xs))
        else:
            probe.skip(f"self_reference@{t}")


def _logdet(A) -> float:
    return float(np.linalg.slogdet(A)[1])


def _det_ratio_gap(X, mats, w) -> float:
    return float(np.expm1(_logdet(X) - sum(wj * _logdet(A) for wj, A in zip(w, mats))))


def _det(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    A1 = mats[0]
    v = rng.standard_normal(inst.dim)
    v /= np.linalg.norm(v)
    # PSD rank-one bump: relative Frobenius distance exactly 0.1
    bumped = A1 + 0.1 * np.linalg.norm(A1) * np.outer(v, v)
    for t in cfg.t_grid:
        probe.at_least(f"det@{t}", _det_ratio_gap(_omega(cfg, mats, w, t), mats, w))
        equal = (A1,) * inst.n
        probe.identity(f"equal_tuple@{t}", abs(_det_ratio_gap(_omega(cfg, equal, w, t), equal, w)))
        if inst.n >= 2:
            near = (A1, bumped) + (A1,) * (inst.n - 2)
            probe.info[f"distinct_tuple_gap@{t}"] = _det_ratio_gap(_omega(cfg, near, w, t), near, w)


def _interval(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    alpha = min(np.linalg.eigvalsh(A)[0] for A in mats)
    beta = max(np.linalg.eigvalsh(A)[-1] for A in mats)
    I = np.eye(inst.dim)
    for t in cfg.t_grid:
        X = _omega(cfg, mats, w, t)
        if t >= 0.5:
            probe.loewner(f"lower@{t}", alpha * I, X)
            probe.loewner(f"upper@{t}", X, beta * I)
        else:
            # containment is not claimed below t = 1/2; measured only
            probe.info[f"lower@{t}"] = loewner_compare(alpha * I, X).normalized_margin
            probe.info[f"upper@{t}"] = loewner_compare(X, beta * I).normalized_margin


def _norm(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    norms = np.array([operator_norm(A) for A in mats])
    for t in cfg.t_grid:
        bound = float(np.sum(w * norms ** (1 - t)) ** (1 / (1 - t)))
        value = operator_norm(_omega(cfg, mats, w, t))
        probe.at_least(f"norm@{t}", (bound - value) / bound)


def _arith_wass(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    for t in _upper_grid(cfg):
        p = (1 - t) / t
        X = _omega(cfg, mats, w, t)
        probe.loewner(f"arith_wass@{t}", mat_power(X, p), _power_sum(mats, w, p))


def _loewner_bounds(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    I = np.eye(inst.dim)

    def lower(ms, t):
        return (I - t * _power_sum(ms, w, -(1 - t) / t)) / (1 - t)

    for t in cfg.t_grid:
        p = (1 - t) / t
        probe.loewner(f"lower@{t}", lower(mats, t), _omega(cfg, mats, w, t))
        # rescale so that t * sum w A^p has top eigenvalue theta < 1
        top = np.linalg.eigvalsh(_power_sum(mats, w, p))[-1]
        theta = rng.uniform(0.25, 0.75)
        c = float((theta / (t * top)) ** (1 / p))
        scaled = [c * A for A in mats]
        M = (I - t * _power_sum(scaled, w, p)) / (1 - t)
        if np.linalg.eigvalsh(M)[0] <= 0:
            probe.skip(f"upper@{t}")
            continue
        Xc = _omega(cfg, scaled, w, t)
        probe.loewner(f"upper_scaled@{t}", Xc, np.linalg.inv(M))
        probe.loewner(f"lower_scaled@{t}", lower(scaled, t), Xc)


def _trotter_errors(cfg, curves, limit, w, t, sign) -> list[float]:
    errors = []
    for s in LIE_TROTTER_STEPS:
        s = sign * s
        X = _omega(cfg, [curve(s) for curve in curves], w, t)
        errors.append(float(np.linalg.norm(mat_log(X) / s - limit)))
    return errors


def _trotter_verdict(probe: _Probe, name: str, errors: list[float], limit_norm: float) -> None:
    floor = 1e-12 * max(1.0, limit_norm)
    if max(errors) <= floor:
        probe.identity(name + ":exact", max(errors))
        return
    for k in range(1, len(errors)):
        ratio = errors[k] / errors[k - 1] if errors[k - 1] > 0 else np.inf
        probe.bound(f"{name}:ratio{k}", ratio, LIE_TROTTER_RATIO)
    probe.bound(f"{name}:final", errors[-1] / limit_norm, LIE_TROTTER_FINAL)


def _spectral_curve(A):
    d, Q = _eigh(A)
    logd = np.log(d)
    return lambda s: _from_eig(np.exp(s * logd), Q)


def _lie_trotter(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    logs = [mat_log(A) for A in mats]
    L = sum(wj * S for wj, S in zip(w, logs))
    power_curves = [_spectral_curve(A) for A in mats]
    # affine curves I + s B with s * ||B|| <= 1/2 on the sampled steps
    spread = max(operator_norm(S) for S in logs)
    radius = 0.5 / max(LIE_TROTTER_STEPS)
    Bs = [S * (radius / spread) if spread > 0 else S for S in logs]
    D = sum(wj * B for wj, B in zip(w, Bs))
    I = np.eye(inst.dim)
    affine_curves = [(lambda s, B=B: I + s * B) for B in Bs]
    for t in cfg.t_grid:
        for sign, label in ((1, "+"), (-1, "-")):
            errors = _trotter_errors(cfg, power_curves, L, w, t, sign)
            for s, e in zip(LIE_TROTTER_STEPS, errors):
                probe.info[f"power{label}@{t}:E({s})"] = e
            _trotter_verdict(probe, f"power{label}@{t}", errors, float(np.linalg.norm(L)))
            errors = _trotter_errors(cfg, affine_curves, D, w, t, sign)
            _trotter_verdict(probe, f"affine{label}@{t}", errors, float(np.linalg.norm(D)))


def _order(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    I = np.eye(inst.dim)
    for t in cfg.t_grid:
        ev = np.linalg.eigvalsh(_omega(cfg, mats, w, t))
        # homogeneity moves the spectrum of Omega_t onto the hypothesis boundary
        up = [A / ev[0] for A in mats]
        X = _omega(cfg, up, w, t)
        hyp = loewner_compare(I, X, cfg.slack)
        probe.info[f"hypothesis_geq@{t}"] = hyp.normalized_margin
        if hyp.leq:
            probe.loewner(f"implies_arith@{t}", I, _power_sum(up, w, 1 - t))
        else:
            probe.skip(f"implies_arith@{t}")
        down = [A / ev[-1] for A in mats]
        X = _omega(cfg, down, w, t)
        hyp = loewner_compare(X, I, cfg.slack)
        probe.info[f"hypothesis_leq@{t}"] = hyp.normalized_margin
        if hyp.leq:
            harmonic = np.linalg.inv(_power_sum(down, w, 1 - t))
            probe.loewner(f"implies_harmonic@{t}", X, harmonic)
        else:
            probe.skip(f"implies_harmonic@{t}")


def _kantorovich(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    m, n = inst.dim, inst.n
    alpha = min(np.linalg.eigvalsh(A)[0] for A in mats)
    beta = max(np.linalg.eigvalsh(A)[-1] for A in mats)
    kappa = 4 * alpha * beta / (alpha + beta) ** 2
    for t in _upper_grid(cfg):
        problem = MeanProblem(mats, w, t)
        X = _omega(cfg, mats, w, t)
        G = _cartan(cfg, transport_terms(problem, X), w)
        probe.at_least(f"kantorovich@{t}", np.linalg.eigvalsh(G)[0] / kappa - 1)
    # the block map is unital and order preserving
    probe.identity("block_map_unital", _rel(diagonal_block_map(np.eye(n * m), w), np.eye(m)))
    R = rng.standard_normal((n * m, n * m))
    S = rng.standard_normal((n * m, n * m))
    P = R @ R.T
    Q = P + S @ S.T
    probe.loewner("block_map_positive", np.zeros((m, m)), diagonal_block_map(P, w))
    probe.loewner("block_map_monotone", diagonal_block_map(P, w), diagonal_block_map(Q, w))


def _yamazaki(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    L = sum(wj * mat_log(A) for wj, A in zip(w, mats))
    top = np.linalg.eigvalsh(L)[-1]
    I = np.eye(inst.dim)
    for label, shift in (("boundary", 0.0), ("interior", rng.uniform(0.0, 1.0))):
        c = top + shift
        # push sum w log A into the negative cone through the first matrix
        shifted = (mats[0] * np.exp(-c / w[0]),) + mats[1:]
        probe.info[f"log_sum_top:{label}"] = float(
            np.linalg.eigvalsh(sum(wj * mat_log(A) for wj, A in zip(w, shifted)))[-1]
        )
        probe.loewner(f"cartan_below_identity:{label}", _cartan(cfg, shifted, w), I)


def _majorization_chain(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    lam_G = spectrum(_cartan(cfg, mats, w))
    lam_L = spectrum(log_euclidean_mean(mats, w))
    probe.majorized("cartan_logeuclid", log_majorizes(lam_G, lam_L, "strict", cfg.slack))
    for t in cfg.t_grid:
        lam_X = spectrum(_omega(cfg, mats, w, t))
        probe.majorized(f"logeuclid_omega@{t}", log_majorizes(lam_L, lam_X, "weak", cfg.slack))


def _power_majorization(inst: _Instance, cfg: SuiteConfig, rng, probe: _Probe) -> None:
    mats, w = inst.matrices, inst.weights
    for t in cfg.t_grid:
        G = _cartan(cfg, [mat_power(A, 1 - t) for A in mats], w)
        lam_X = spectrum(_omega(cfg, mats, w, t)) ** (1 - t)
        probe.majorized(f"power@{t}", log_majorizes(spectrum(G), lam_X, "weak", cfg.slack))


_Check = Callable[[_Instance, SuiteConfig, np.random.Generator, _Probe], None]

CHECKS: dict[str, tuple[_Check, str]] = {
    "axioms": (_axioms, "homogeneity, permutation, repetition, unitary congruence, self-reference"),
    "det": (_det, "det Omega_t >= prod det A_j^w_j"),
    "interval": (_interval, "alpha I <= Omega_t <= beta I for t >= 1/2"),
    "norm": (_norm, "||Omega_t|| <= (sum w_j ||A_j||^(1-t))^(1/(1-t))"),
    "arith-wass": (_arith_wass, "Omega_t^((1-t)/t) <= sum w_j A_j^((1-t)/t) for t >= 1/2"),
    "loewner-bounds": (_loewner_bounds, "Loewner lower and upper bounds for Omega_t"),
    "lie-trotter": (_lie_trotter, "Omega_t(gamma(s))^(1/s) -> exp(sum w_j gamma_j'(0))"),
    "order": (_order, "Omega_t >= I, Omega_t <= I order implications"),
    "kantorovich": (_kantorovich, "Kantorovich-type lower bound via the Cartan mean"),
    "yamazaki": (_yamazaki, "sum w log A <= 0 implies G <= I"),
    "majorization-chain": (_majorization_chain, "lambda(G) <_log lambda(L) <_wlog lambda(Omega_t)"),
    "power-majorization": (_power_majorization, "lambda(G(A^(1-t))) <_wlog lambda(Omega_t)^(1-t)"),
}


def run_check(check_id: str, cfg: SuiteConfig | None = None, problems=None) -> CheckReport:
    """Run one checker on seeded instances, or on `problems` if given.

    `problems` is any iterable of objects with ``matrices`` and ``weights``
    (e.g. :class:`MeanProblem`); their ``t`` is ignored in favour of
    ``cfg.t_grid``.
    """
    cfg = cfg or SuiteConfig()
    try:
        fn, theorem = CHECKS[check_id]
    except KeyError:
        raise DomainError(
            f"unknown check {check_id!r}; valid ids: {', '.join(CHECKS)}"
        ) from None
    instances = _generate(cfg, check_id) if problems is None else _given(problems)
    records = []
    for inst in instances:
        probe = _Probe(cfg)
        rng = make_rng(cfg.seed, check_id, inst.index, "aux")
        note = ""
        try:
            fn(inst, cfg, rng, probe)
            verdict = probe.verdict()
        except (_Inconclusive, PwmeanError) as exc:
            verdict, note = "inconclusive", str(exc)
        if verdict == "fail":
            note = "failed: " + ", ".join(probe.failed)
        elif probe.skipped and not note:
            note = "skipped: " + ", ".join(probe.skipped)
        records.append(InstanceRecord(inst.index, inst.digest(), verdict, probe.margins, probe.info, note))
    margins = [v for r in records if r.verdict in ("pass", "fail") for v in r.margins.values()]
    return CheckReport(
        check_id=check_id,
        theorem=theorem,
        instances_run=len(records),
        passes=sum(r.verdict == "pass" for r in records),
        failures=sum(r.verdict == "fail" for r in records),
        inconclusive=sum(r.verdict == "inconclusive" for r in records),
        skipped=sum(r.verdict == "skip" for r in records),
        worst_margin=float(min(margins)) if margins else 0.0,
        details=records,
    )


def run_suite(cfg: SuiteConfig | None = None, checks: Iterable[str] | None = None,
              problems=None) -> list[CheckReport]:
    """Run the selected checkers (all by default) in registry order."""
    cfg = cfg or SuiteConfig()
    ids = list(CHECKS) if checks is None else list(checks)
    for check_id in ids:
        if check_id not in CHECKS:
            raise DomainError(f"unknown check {check_id!r}; valid ids: {', '.join(CHECKS)}")
    problems = None if problems is None else list(problems)
    return [run_check(check_id, cfg, problems) for check_id in ids]


def _named(check_id: str):
    def runner(cfg: SuiteConfig | None = None, problems=None) -> CheckReport:
        return run_check(check_id, cfg, problems)

    runner.__name__ = runner.__qualname__ = "check_" + check_id.replace("-", "_")
    runner.__doc__ = f"Check: {CHECKS[check_id][1]}."
    return runner


check_mean_axioms = _named("axioms")
check_det_inequality = _named("det")
check_interval_bound = _named("interval")
check_norm_inequality = _named("norm")
check_arith_wass = _named("arith-wass")
check_loewner_bounds = _named("loewner-bounds")
check_lie_trotter = _named("lie-trotter")
check_order_implications = _named("order")
check_kantorovich = _named("kantorovich")
check_yamazaki = _named("yamazaki")
check_majorization_chain = _named("majorization-chain")
check_power_majorization = _named("power-majorization")

