import math

import numpy as np
from numpy.typing import ArrayLike

from ._types import ParamEstimate, SampleSummary
from .exceptions import DegenerateSampleError, DomainError

_SQRT2 = math.sqrt(2.0)


def summarize(data: ArrayLike) -> SampleSummary:
    """
    Sample size, mean, 1/n variance and minimum.

    Two passes: the variance is the mean of squared deviations from the
    already computed mean, which avoids the E(X²) − X̄² cancellation.
    """
    x = np.asarray(data, dtype=float).ravel()
    if x.size < 2:
        raise DomainError(f"need at least 2 observations, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise DomainError("data contains non-finite values")
    if np.any(x < 0):
        first = int(np.argmax(x < 0))
        raise DomainError(f"data contains a negative value at index {first}: {x[first]!r}")
    m = float(np.mean(x))
    var = float(np.mean((x - m) ** 2))
    return SampleSummary(n=int(x.size), mean=m, var=var, min=float(x.min()))


def estimate_moments(s: SampleSummary) -> ParamEstimate:
    """
    Closed-form moment estimators.

    With η̂ = √(X̄² − S²) and λ̂ = X̄√2 − η̂:
        θ̂ = √2 / λ̂,   β̂ = λ̂ / η̂.
    β̂ ≤ 1 is returned as-is with beta_in_range=False.
    """
    if not s.mean > 0:
        raise DomainError(f"sample mean must be > 0, got {s.mean!r}")
    gap = s.mean * s.mean - s.var
    if not gap > 0:
        raise DegenerateSampleError(
            f"mean² − variance = {gap!r} ≤ 0 (mean={s.mean!r}, var={s.var!r}, n={s.n}): "
            "the moment estimators do not exist for this sample"
        )
    eta = math.sqrt(gap)
    lam = s.mean * _SQRT2 - eta
    beta_hat = lam / eta
    return ParamEstimate(
        theta_hat=_SQRT2 / lam,
        beta_hat=beta_hat,
        eta_hat=eta,
        lambda_hat=lam,
        n=s.n,
        beta_in_range=beta_hat > 1.0,
    )


def remark_estimates(s: SampleSummary) -> tuple[float, float]:
    """
    (θ, β) from the alternative closed-form expressions

        θ = (2X̄ + √2·η̂) / (X̄² + S²)
        β = (S² + X̄²) / (X̄² − S² + X̄√2·η̂)

    Algebraically identical to estimate_moments().
    """
    gap = s.mean * s.mean - s.var
    if not gap > 0:
        raise DegenerateSampleError(f"mean² − variance = {gap!r} ≤ 0")
    eta = math.sqrt(gap)
    m2 = s.mean * s.mean + s.var
    theta = (2.0 * s.mean + _SQRT2 * eta) / m2
    beta = m2 / (gap + s.mean * _SQRT2 * eta)
    return theta, beta


def fit(data: ArrayLike) -> ParamEstimate:
    return estimate_moments(summarize(data))
