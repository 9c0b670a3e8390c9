import numpy as np
import pytest

import oracles
from pwmean.checks import (
    CHECKS,
    CheckReport,
    SuiteConfig,
    check_det_inequality,
    check_lie_trotter,
    run_check,
    run_suite,
)
from pwmean.errors import DomainError
from pwmean.means import MeanProblem

ALL_IDS = [
    "axioms", "det", "interval", "norm", "arith-wass", "loewner-bounds", "lie-trotter",
    "order", "kantorovich", "yamazaki", "majorization-chain", "power-majorization",
]
SMALL = SuiteConfig(seed=7, instances=4)


def _equal_fixture(m=3, n=3):
    A = oracles.random_spd(np.random.default_rng(m * 10 + n), m, 20.0)
    return MeanProblem((A,) * n, np.full(n, 1.0 / n), 0.5)


def test_registry_order():
    assert list(CHECKS) == ALL_IDS


def test_suite_config_validation():
    for kwargs in ({"t_grid": (1.5,)}, {"t_grid": ()}, {"dims": (0,)}, {"instances": -1},
                   {"slack": -1.0}, {"condition_bound": 0.5}, {"seed": -1}):
        with pytest.raises(DomainError):
            SuiteConfig(**kwargs)
    cfg = SuiteConfig(dims=[2, 5])
    assert cfg.dims == (2, 5)
    assert SuiteConfig.from_dict(cfg.to_dict()) == cfg


def test_unknown_check_lists_valid_ids():
    with pytest.raises(DomainError, match="valid ids: axioms, det"):
        run_check("nope")
    with pytest.raises(DomainError):
        run_suite(checks=["det", "nope"])


@pytest.mark.parametrize("check_id", ALL_IDS)
def test_all_equal_fixture(check_id):
    rep = run_check(check_id, SMALL, problems=[_equal_fixture()])
    assert rep.ok, rep.details[0].note
    assert rep.passes == 1
    for name, margin in rep.details[0].margins.items():
        assert margin >= -1e-9, name


@pytest.mark.parametrize("check_id", ALL_IDS)
def test_scalar_instance(check_id):
    P = MeanProblem((np.array([[1.0]]), np.array([[4.0]])), [0.5, 0.5], 0.5)
    rep = run_check(check_id, SMALL, problems=[P])
    assert rep.failures == 0 and rep.inconclusive == 0


@pytest.mark.parametrize("check_id", ALL_IDS)
def test_small_seeded_batch(check_id):
    rep = run_check(check_id, SMALL)
    assert rep.instances_run == 4
    assert rep.passes + rep.failures + rep.inconclusive + rep.skipped == rep.instances_run
    assert rep.ok, [r.note for r in rep.details if r.verdict != "pass"]


def test_determinant_values():
    rep = check_det_inequality(SMALL, problems=[
        MeanProblem((np.array([[1.0]]), np.array([[4.0]])), [0.5, 0.5], 0.5)
    ])
    # det Omega_{1/2} = 2.25 against geometric mean 2
    assert rep.details[0].margins["det@0.5"] == pytest.approx(2.25 / 2 - 1, rel=1e-10)


def test_determinism():
    a = run_check("kantorovich", SMALL).to_dict()
    b = run_check("kantorovich", SMALL).to_dict()
    assert a == b
    c = run_check("kantorovich", SuiteConfig(seed=8, instances=4)).to_dict()
    assert [r["inputs_hash"] for r in a["details"]] != [r["inputs_hash"] for r in c["details"]]


def test_streams_are_independent_of_instance_count():
    a = run_check("norm", SuiteConfig(seed=3, instances=2))
    b = run_check("norm", SuiteConfig(seed=3, instances=4))
    assert [r.inputs_hash for r in a.details] == [r.inputs_hash for r in b.details[:2]]


def test_non_convergence_is_inconclusive():
    rep = run_check("det", SuiteConfig(seed=1, instances=3, max_iterations=1))
    assert rep.inconclusive == 3 and rep.passes == 0
    assert not rep.ok
    assert "did not converge" in rep.details[0].note


def test_empty_run_is_not_ok():
    rep = run_check("det", SuiteConfig(instances=0))
    assert rep.instances_run == 0 and not rep.ok


def test_report_round_trip():
    rep = run_check("order", SMALL)
    d = rep.to_dict()
    assert d["ok"] is True
    back = CheckReport.from_dict(d)
    assert back.to_dict() == d


def test_lie_trotter_covers_both_signs_and_families():
    rep = check_lie_trotter(SuiteConfig(seed=42, instances=2))
    names = set(rep.details[0].margins)
    for family in ("power", "affine"):
        for sign in ("+", "-"):
            assert any(n.startswith(f"{family}{sign}") for n in names), (family, sign, names)


def test_run_suite_defaults():
    reps = run_suite(SuiteConfig(seed=5, instances=1))
    assert [r.check_id for r in reps] == ALL_IDS
    assert all(r.ok for r in reps)
