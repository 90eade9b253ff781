"""
Asymptotic law of the moment estimators.

√n(θ̂ − θ) and √n(β̂ − β) behave like the empirical-process averages of the
influence functions H₁ and H₂ respectively, where H_i(x) = a_i·x + b_i·x².
Σ is the covariance matrix of (H₁(X), H₂(X)); every entry follows from the
raw moments E(X^k) = k!(β+k)/(θ^k β), k ≤ 4.
"""
import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike

from ._types import AsymptoticCoefficients, CovarianceMatrix, ParamEstimate, Params, SamplerKind
from .distribution import raw_moment, variance
from .estimation import fit
from .exceptions import DegenerateSampleError, DomainError
from .rng import RngStream
from .samplers import get_sampler

logger = logging.getLogger(__name__)

_SQRT2 = math.sqrt(2.0)
_ORACLE_CHUNK = 1_000_000


def coefficients(p: Params) -> AsymptoticCoefficients:
    m = raw_moment(p, 1)
    m2 = raw_moment(p, 2)
    sigma2 = variance(p)
    # η = √(m² − σ²) = √2/(θβ),  λ = m√2 − η = √2/θ
    eta = _SQRT2 / (p.theta * p.beta)
    lam = _SQRT2 / p.theta
    eta3 = eta**3
    return AsymptoticCoefficients(
        m=m,
        m2=m2,
        sigma2=sigma2,
        eta=eta,
        lam=lam,
        a1=2.0 / (eta * lam),
        b1=-1.0 / (_SQRT2 * eta * lam * lam),
        a2=-lam * (eta * _SQRT2 + 2.0 * m) / eta3,
        b2=(lam + eta) / (2.0 * eta3),
    )


def eval_influence(c: AsymptoticCoefficients, which: Literal[1, 2], x: ArrayLike) -> float | np.ndarray:
    """H_which(x) = a·x + b·x²."""
    if which == 1:
        a, b = c.a1, c.b1
    elif which == 2:
        a, b = c.a2, c.b2
    else:
        raise DomainError(f"which must be 1 or 2, got {which!r}")
    x = np.asarray(x, dtype=float)
    h = (a + b * x) * x
    return float(h) if h.ndim == 0 else h


def covariance(p: Params) -> CovarianceMatrix:
    """
    Closed-form Σ.

        γ_i  = E H_i(X)      = a_i·μ₁ + b_i·μ₂
        τ_i² = E H_i(X)²     = a_i²·μ₂ + 2a_ib_i·μ₃ + b_i²·μ₄
        c    = E H₁(X)H₂(X)  = a₁a₂·μ₂ + (a₁b₂ + b₁a₂)·μ₃ + b₁b₂·μ₄

    with μ_k = E(X^k). The cross moment c is the plain expectation of the
    product; its μ₂ and μ₄ terms pair a₁a₂ and b₁b₂.
    """
    k = coefficients(p)
    mu1, mu2, mu3, mu4 = (raw_moment(p, j) for j in (1, 2, 3, 4))

    gamma1 = k.a1 * mu1 + k.b1 * mu2
    gamma2 = k.a2 * mu1 + k.b2 * mu2
    tau1_sq = k.a1 * k.a1 * mu2 + 2.0 * k.a1 * k.b1 * mu3 + k.b1 * k.b1 * mu4
    tau2_sq = k.a2 * k.a2 * mu2 + 2.0 * k.a2 * k.b2 * mu3 + k.b2 * k.b2 * mu4
    c = k.a1 * k.a2 * mu2 + (k.a1 * k.b2 + k.b1 * k.a2) * mu3 + k.b1 * k.b2 * mu4

    return CovarianceMatrix(
        s11=tau1_sq - gamma1 * gamma1,
        s22=tau2_sq - gamma2 * gamma2,
        s12=c - gamma1 * gamma2,
        gamma1=gamma1,
        gamma2=gamma2,
        tau1_sq=tau1_sq,
        tau2_sq=tau2_sq,
        c=c,
    )


def plugin_covariance(e: ParamEstimate) -> CovarianceMatrix:
    """Σ at the estimate (θ̂, β̂); requires β̂ > 1."""
    if not e.beta_in_range:
        raise DomainError(f"plug-in covariance needs beta_hat > 1, got {e.beta_hat!r}")
    return covariance(Params(e.theta_hat, e.beta_hat))


def covariance_mc_oracle(
    p: Params,
    draws: int,
    r: RngStream,
    sampler: SamplerKind = "inverse",
) -> CovarianceMatrix:
    """
    Empirical covariance of (H₁(X), H₂(X)) over `draws` iid draws.

    Draws are taken in chunks from the one stream and reduced with running
    sums, so the result depends on (seed, stream_id, draws) only.
    """
    if draws < 10_000:
        raise DomainError(f"draws must be >= 10000, got {draws}")
    k = coefficients(p)
    backend = get_sampler(sampler)
    logger.info("  🔬 [asymptotics] ORACLE  ▶  draws=%d  sampler=%s   › %s", draws, sampler, p)

    s1 = s2 = s11 = s22 = s12 = 0.0
    left = draws
    while left > 0:
        size = min(left, _ORACLE_CHUNK)
        x = backend.draw(p, r, size)
        h1 = eval_influence(k, 1, x)
        h2 = eval_influence(k, 2, x)
        s1 += float(h1.sum())
        s2 += float(h2.sum())
        s11 += float(h1 @ h1)
        s22 += float(h2 @ h2)
        s12 += float(h1 @ h2)
        left -= size

    gamma1, gamma2 = s1 / draws, s2 / draws
    tau1_sq, tau2_sq, c = s11 / draws, s22 / draws, s12 / draws
    result = CovarianceMatrix(
        s11=tau1_sq - gamma1 * gamma1,
        s22=tau2_sq - gamma2 * gamma2,
        s12=c - gamma1 * gamma2,
        gamma1=gamma1,
        gamma2=gamma2,
        tau1_sq=tau1_sq,
        tau2_sq=tau2_sq,
        c=c,
    )
    logger.info("     └─ ✅ Σ̂ = [[%.6g, %.6g], [%.6g, %.6g]]", result.s11, result.s12, result.s12, result.s22)
    return result


@dataclass(frozen=True)
class EstimatorSamplingResult:
    covariance: CovarianceMatrix
    deviations: np.ndarray     # (kept, 2): √n(θ̂ − θ), √n(β̂ − β)
    degenerate_count: int
    n: int
    reps: int


def estimator_sampling_mc(
    p: Params,
    n: int,
    reps: int,
    r: RngStream,
    sampler: SamplerKind = "inverse",
) -> EstimatorSamplingResult:
    """
    Empirical covariance of (√n(θ̂ − θ), √n(β̂ − β)) over `reps` samples.

    Replication i draws from r.derive(i), so the result does not depend on
    how replications are scheduled. Degenerate samples are counted and left
    out of the covariance.
    """
    if n < 50:
        raise DomainError(f"n must be >= 50, got {n}")
    if reps < 100:
        raise DomainError(f"reps must be >= 100, got {reps}")
    backend = get_sampler(sampler)
    root_n = math.sqrt(n)
    logger.info("  🔬 [asymptotics] SAMPLING-MC  ▶  n=%d  reps=%d  sampler=%s   › %s", n, reps, sampler, p)

    rows: list[tuple[float, float]] = []
    degenerate = 0
    for i in range(reps):
        x = backend.draw(p, r.derive(i), n)
        try:
            est = fit(x)
        except DegenerateSampleError:
            degenerate += 1
            continue
        rows.append((root_n * (est.theta_hat - p.theta), root_n * (est.beta_hat - p.beta)))

    dev = np.asarray(rows, dtype=float).reshape(-1, 2)
    if len(dev) < 2:
        raise DegenerateSampleError(f"only {len(dev)} of {reps} replications produced estimates")
    emp = np.cov(dev, rowvar=False, bias=True)
    logger.info("     └─ ✅ kept=%d  degenerate=%d", len(dev), degenerate)
    return EstimatorSamplingResult(
        covariance=CovarianceMatrix(s11=float(emp[0, 0]), s22=float(emp[1, 1]), s12=float(emp[0, 1])),
        deviations=dev,
        degenerate_count=degenerate,
        n=n,
        reps=reps,
    )


def mahalanobis(result: EstimatorSamplingResult, sigma: CovarianceMatrix) -> np.ndarray:
    """n·dᵀΣ⁻¹d per kept replication, with d the raw estimation error."""
    dev = result.deviations
    return np.einsum("ij,jk,ik->i", dev, sigma.inverse(), dev)
