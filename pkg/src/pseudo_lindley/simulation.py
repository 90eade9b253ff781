import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from tqdm import tqdm

from ._types import Hypothesis, Params, ReplicationRecord, SamplerKind, SigmaAt, SimConfig, SimReport, SimRow
from .estimation import fit
from .exceptions import DegenerateSampleError, DomainError, SingularCovarianceError
from .inference import joint_wald_test, wald_test
from .rng import RngStream
from .samplers import get_sampler

logger = logging.getLogger(__name__)


def _degenerate_record() -> ReplicationRecord:
    return ReplicationRecord(
        theta_hat=math.nan,
        beta_hat=math.nan,
        p_theta=math.nan,
        p_beta=math.nan,
        p_joint=math.nan,
        degenerate=True,
    )


def run_replication(
    p: Params,
    n: int,
    r: RngStream,
    level: float = 0.05,
    sigma_at: SigmaAt = "null",
    sampler: SamplerKind = "inverse",
) -> ReplicationRecord:
    """
    Draw one sample, fit it and test H₀: (θ, β) = p.

    A degenerate sample yields a record with degenerate=True; nothing is
    raised. Under the plug-in covariance a p-value that cannot be computed
    (β̂ ≤ 1, singular Σ̂) is NaN.
    """
    if n < 10:
        raise DomainError(f"n must be >= 10, got {n}")
    x = get_sampler(sampler).draw(p, r, n)
    try:
        est = fit(x)
    except DegenerateSampleError:
        return _degenerate_record()

    def p_value(h: Hypothesis) -> float:
        try:
            if h.which == "joint":
                return joint_wald_test(est, h, sigma_at, level).p_value
            return wald_test(est, h, sigma_at, level).p_value
        except (DomainError, SingularCovarianceError):
            return math.nan

    return ReplicationRecord(
        theta_hat=est.theta_hat,
        beta_hat=est.beta_hat,
        p_theta=p_value(Hypothesis(p.theta, p.beta, "theta")),
        p_beta=p_value(Hypothesis(p.theta, p.beta, "beta")),
        p_joint=p_value(Hypothesis(p.theta, p.beta, "joint")),
        degenerate=False,
    )


def _rate(p_values: np.ndarray, level: float) -> tuple[float, float, int]:
    tested = p_values[np.isfinite(p_values)]
    m = tested.size
    if m == 0:
        return math.nan, math.nan, 0
    rate = float(np.mean(tested < level))
    return rate, math.sqrt(rate * (1.0 - rate) / m), m


def _rmse(est: np.ndarray, truth: float) -> tuple[float, float]:
    sq = (est - truth) ** 2
    mse = float(np.mean(sq))
    rmse = math.sqrt(mse)
    if est.size < 2 or rmse == 0.0:
        return rmse, math.nan
    # delta method on √MSE
    se_mse = float(np.std(sq, ddof=1)) / math.sqrt(est.size)
    return rmse, se_mse / (2.0 * rmse)


def aggregate(n: int, records: list[ReplicationRecord], truth: Params, level: float) -> SimRow:
    """Fold replication records (in index order) into one table row."""
    kept = [rec for rec in records if not rec["degenerate"]]
    degenerate = len(records) - len(kept)
    if not kept:
        nan = math.nan
        return SimRow(n, nan, nan, nan, nan, nan, nan, nan, degenerate_count=degenerate)

    theta = np.array([rec["theta_hat"] for rec in kept])
    beta = np.array([rec["beta_hat"] for rec in kept])
    m = theta.size
    sd_scale = 1.0 / math.sqrt(m) if m > 1 else math.nan
    rmse_theta, se_rmse_theta = _rmse(theta, truth.theta)
    rmse_beta, se_rmse_beta = _rmse(beta, truth.beta)
    rej_theta, se_theta, tested = _rate(np.array([rec["p_theta"] for rec in kept]), level)
    rej_beta, se_beta, _ = _rate(np.array([rec["p_beta"] for rec in kept]), level)
    rej_joint, se_joint, _ = _rate(np.array([rec["p_joint"] for rec in kept]), level)

    return SimRow(
        n=n,
        mve_theta=float(np.mean(theta)),
        mve_beta=float(np.mean(beta)),
        rmse_theta=rmse_theta,
        rmse_beta=rmse_beta,
        reject_rate_theta=rej_theta,
        reject_rate_beta=rej_beta,
        reject_rate_joint=rej_joint,
        degenerate_count=degenerate,
        tested=tested,
        se_mve_theta=float(np.std(theta, ddof=1)) * sd_scale if m > 1 else math.nan,
        se_mve_beta=float(np.std(beta, ddof=1)) * sd_scale if m > 1 else math.nan,
        se_rmse_theta=se_rmse_theta,
        se_rmse_beta=se_rmse_beta,
        se_reject_theta=se_theta,
        se_reject_beta=se_beta,
        se_reject_joint=se_joint,
    )


def run_experiment(c: SimConfig) -> SimReport:
    """
    Monte Carlo study over c.sizes.

    Replication r at size index k draws from stream k·replications + r of
    c.seed. Results are collected in replication order, so the report is
    identical for any worker count.
    """
    p = c.params
    base = RngStream(c.seed, 0)
    started = time.perf_counter()
    logger.info(
        "  🧪 [simulation] RUN  ▶  theta=%g beta=%g  sizes=%s  reps=%d  workers=%d",
        c.theta, c.beta, list(c.sizes), c.replications, c.workers,
    )

    rows: list[SimRow] = []
    with ThreadPoolExecutor(max_workers=c.workers) as pool:
        for k, n in enumerate(c.sizes):
            offset = k * c.replications

            def task(i: int, n: int = n, offset: int = offset) -> ReplicationRecord:
                return run_replication(p, n, base.derive(offset + i), c.nominal_level, c.sigma_at, c.sampler)

            records = list(
                tqdm(
                    pool.map(task, range(c.replications)),
                    total=c.replications,
                    desc=f"n={n}",
                    disable=not c.progress,
                    leave=False,
                )
            )
            row = aggregate(n, records, p, c.nominal_level)
            if row.degenerate_count:
                logger.warning("     ⚠️  n=%d: %d degenerate replication(s) excluded", n, row.degenerate_count)
            logger.debug(
                "     ├─ n=%d  mve=(%.4f, %.4f)  rmse=(%.4f, %.4f)",
                n, row.mve_theta, row.mve_beta, row.rmse_theta, row.rmse_beta,
            )
            rows.append(row)

    wall = time.perf_counter() - started
    logger.info("     └─ ✅ done   rows=%d  wall=%.2fs", len(rows), wall)
    return SimReport(config=c, rows=rows, wall_time=wall)
