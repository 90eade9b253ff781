import math

import numpy as np
from numpy.typing import ArrayLike
from scipy.optimize import bisect
from scipy.special import erfc

from ._types import CovarianceMatrix, Hypothesis, ParamEstimate, Params, SigmaAt, TestResult
from .asymptotics import covariance, plugin_covariance
from .exceptions import DomainError, SingularCovarianceError

_SQRT2 = math.sqrt(2.0)
_SINGULAR_RTOL = 1e-12


def normal_cdf(z: ArrayLike) -> float | np.ndarray:
    """Φ(z) = erfc(−z/√2)/2, accurate in both tails."""
    out = 0.5 * erfc(-np.asarray(z, dtype=float) / _SQRT2)
    return float(out) if np.ndim(out) == 0 else out


def normal_quantile(p: float) -> float:
    """Φ⁻¹(p) by bisection on [−40, 40]."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"probability must lie strictly inside (0, 1), got {p!r}")
    return float(bisect(lambda z: normal_cdf(z) - p, -40.0, 40.0, xtol=1e-13, maxiter=200))


def chi2_2_sf(t: float) -> float:
    """Survival function of χ²(2): exp(−t/2)."""
    if not t >= 0:
        raise DomainError(f"chi-square statistic must be >= 0, got {t!r}")
    return math.exp(-0.5 * t)


def _two_sided_p(z: float) -> float:
    # 2(1 − Φ(|z|)) = erfc(|z|/√2)
    return min(1.0, float(erfc(abs(z) / _SQRT2)))


def _sigma(e: ParamEstimate, h: Hypothesis, sigma_at: SigmaAt) -> CovarianceMatrix:
    if sigma_at == "null":
        return covariance(Params(h.theta0, h.beta0))
    if sigma_at == "plug-in":
        return plugin_covariance(e)
    raise DomainError(f"sigma_at must be 'null' or 'plug-in', got {sigma_at!r}")


def _decide(stat: float, reference, p_value: float, level: float | None) -> TestResult:
    if level is None:
        return TestResult(statistic=stat, reference=reference, p_value=p_value)
    if not 0.0 < level < 1.0:
        raise DomainError(f"level must lie in (0, 1), got {level!r}")
    return TestResult(statistic=stat, reference=reference, p_value=p_value, level=level, reject=p_value < level)


def wald_test(
    e: ParamEstimate,
    h: Hypothesis,
    sigma_at: SigmaAt = "null",
    level: float | None = None,
) -> TestResult:
    """Two-sided z-test of θ = θ₀ (which="theta") or β = β₀ (which="beta")."""
    sigma = _sigma(e, h, sigma_at)
    root_n = math.sqrt(e.n)
    if h.which == "theta":
        z = root_n * (e.theta_hat - h.theta0) / math.sqrt(sigma.s11)
    elif h.which == "beta":
        z = root_n * (e.beta_hat - h.beta0) / math.sqrt(sigma.s22)
    else:
        raise DomainError("wald_test handles which='theta' or 'beta'; use joint_wald_test for 'joint'")
    return _decide(z, "standard-normal", _two_sided_p(z), level)


def wald_quadratic_form(n: int, d1: float, d2: float, sigma: CovarianceMatrix) -> float:
    """n·dᵀΣ⁻¹d with the closed-form 2×2 inverse."""
    det = sigma.det
    if det <= _SINGULAR_RTOL * sigma.s11 * sigma.s22:
        raise SingularCovarianceError(f"det Σ = {det!r} is too small relative to Σ11·Σ22")
    t = n * (sigma.s22 * d1 * d1 - 2.0 * sigma.s12 * d1 * d2 + sigma.s11 * d2 * d2) / det
    return max(t, 0.0)


def joint_wald_test(
    e: ParamEstimate,
    h: Hypothesis,
    sigma_at: SigmaAt = "null",
    level: float | None = None,
) -> TestResult:
    """Wald χ²(2) test of (θ, β) = (θ₀, β₀)."""
    if h.which != "joint":
        raise DomainError("joint_wald_test needs which='joint'")
    sigma = _sigma(e, h, sigma_at)
    t = wald_quadratic_form(e.n, e.theta_hat - h.theta0, e.beta_hat - h.beta0, sigma)
    return _decide(t, "chi-square-2", chi2_2_sf(t), level)


def run_test(e: ParamEstimate, h: Hypothesis, sigma_at: SigmaAt = "null", level: float | None = None) -> TestResult:
    """Dispatch on h.which."""
    if h.which == "joint":
        return joint_wald_test(e, h, sigma_at, level)
    return wald_test(e, h, sigma_at, level)


def confidence_intervals(
    e: ParamEstimate,
    level: float = 0.95,
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Wald intervals θ̂ ± z·√(Σ̂11/n) and β̂ ± z·√(Σ̂22/n) with Σ̂ at the estimate."""
    if not 0.0 < level < 1.0:
        raise DomainError(f"level must lie in (0, 1), got {level!r}")
    sigma = plugin_covariance(e)
    z = normal_quantile(0.5 * (1.0 + level))
    half_theta = z * math.sqrt(sigma.s11 / e.n)
    half_beta = z * math.sqrt(sigma.s22 / e.n)
    return (
        (e.theta_hat - half_theta, e.theta_hat + half_theta),
        (e.beta_hat - half_beta, e.beta_hat + half_beta),
    )
