"""
Pseudo-Lindley law: density θ(β−1+θx)e^{−θx}/β on x ≥ 0, with θ > 0 and β > 1.

Every evaluation function accepts a scalar or an array for its point argument
and returns a float for scalar input, an ndarray otherwise.
"""
import logging
import math

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import lambertw

from ._types import Params, QuantileSettings
from .exceptions import ConvergenceError, DomainError
from .rng import RngStream

logger = logging.getLogger(__name__)

_DEFAULT_SETTINGS = QuantileSettings()


def _as_float_array(x: ArrayLike) -> np.ndarray:
    return np.asarray(x, dtype=float)


def _out(values: np.ndarray) -> float | np.ndarray:
    # 0-d 結果は Python float で返す
    return float(values) if values.ndim == 0 else values


def pdf(p: Params, x: ArrayLike) -> float | np.ndarray:
    x = _as_float_array(x)
    xs = np.maximum(x, 0.0)  # keeps exp() finite on the masked branch
    with np.errstate(invalid="ignore", over="ignore"):
        dens = p.theta * (p.beta - 1.0 + p.theta * xs) * np.exp(-p.theta * xs) / p.beta
        dens = np.where(np.isposinf(xs), 0.0, dens)
    return _out(np.where(x >= 0, dens, 0.0))


def log_pdf(p: Params, x: ArrayLike) -> float | np.ndarray:
    """log f(x) evaluated term by term, so it stays finite far in the tail."""
    x = _as_float_array(x)
    xs = np.maximum(x, 0.0)
    with np.errstate(invalid="ignore"):
        logd = math.log(p.theta) + np.log(p.beta - 1.0 + p.theta * xs) - p.theta * xs - math.log(p.beta)
        logd = np.where(np.isposinf(xs), -np.inf, logd)
    return _out(np.where(x >= 0, logd, -np.inf))


def survival(p: Params, x: ArrayLike) -> float | np.ndarray:
    """1 − F(x) = (β + θx)e^{−θx}/β."""
    x = _as_float_array(x)
    t = p.theta * np.maximum(x, 0.0)
    with np.errstate(invalid="ignore"):
        sf = np.exp(-t) * (1.0 + t / p.beta)
        sf = np.where(np.isposinf(t), 0.0, sf)
    return _out(np.where(x >= 0, sf, 1.0))


def cdf(p: Params, x: ArrayLike) -> float | np.ndarray:
    # −expm1(−t) − (t/β)e^{−t}: no cancellation against 1 near the origin
    x = _as_float_array(x)
    t = p.theta * np.maximum(x, 0.0)
    with np.errstate(invalid="ignore"):
        cd = -np.expm1(-t) - (t / p.beta) * np.exp(-t)
        cd = np.where(np.isposinf(t), 1.0, cd)
    return _out(np.where(x >= 0, np.clip(cd, 0.0, 1.0), 0.0))


def raw_moment(p: Params, k: int) -> float:
    """E(X^k) = k!(β+k)/(θ^k β)."""
    if int(k) != k or k < 1:
        raise DomainError(f"moment order must be a positive integer, got {k!r}")
    k = int(k)
    try:
        value = math.factorial(k) * (p.beta + k) / (p.theta**k * p.beta)
    except (OverflowError, ZeroDivisionError) as e:
        raise OverflowError(f"E(X^{k}) is not representable for {p}") from e
    if not math.isfinite(value):
        raise OverflowError(f"E(X^{k}) is not representable for {p}")
    return value


def mean(p: Params) -> float:
    return raw_moment(p, 1)


def variance(p: Params) -> float:
    """(β² + 2β − 1)/(θβ)², i.e. E(X²) − E(X)² without the subtraction."""
    tb = p.theta * p.beta
    try:
        value = ((p.beta + 1.0) ** 2 - 2.0) / tb / tb
    except (OverflowError, ZeroDivisionError) as e:
        raise OverflowError(f"Var(X) is not representable for {p}") from e
    if not math.isfinite(value):
        raise OverflowError(f"Var(X) is not representable for {p}")
    return value


def lindley_pdf(theta: float, x: ArrayLike) -> float | np.ndarray:
    """One-parameter Lindley density θ²(1+x)e^{−θx}/(1+θ)."""
    if not (math.isfinite(theta) and theta > 0):
        raise DomainError(f"theta must be a finite positive number, got {theta!r}")
    x = _as_float_array(x)
    xs = np.maximum(x, 0.0)
    with np.errstate(invalid="ignore"):
        dens = theta * theta * (1.0 + xs) * np.exp(-theta * xs) / (1.0 + theta)
        dens = np.where(np.isposinf(xs), 0.0, dens)
    return _out(np.where(x >= 0, dens, 0.0))


def _check_open_unit(u: np.ndarray) -> None:
    if not np.all((u > 0.0) & (u < 1.0)):
        bad = u[~((u > 0.0) & (u < 1.0))]
        raise DomainError(f"probability must lie strictly inside (0, 1), got {bad.ravel()[:5].tolist()}")


def _bracket(p: Params, q: np.ndarray, s: QuantileSettings) -> np.ndarray:
    """Upper bounds with survival(upper) ≤ 1 − u, doubled per element as needed."""
    start = max(1.0, mean(p) + 40.0 * math.sqrt(variance(p)))
    if not math.isfinite(start):
        raise OverflowError(f"quantile bracket is not representable for {p}")
    upper = np.full(q.shape, start)
    for _ in range(s.max_bracket_doublings):
        short = survival(p, upper) > q
        if not np.any(short):
            return upper
        upper = np.where(short, 2.0 * upper, upper)
    if np.any(survival(p, upper) > q):
        logger.warning("  ⚠️  [distribution] QUANTILE  bracket not found after %d doublings", s.max_bracket_doublings)
        raise ConvergenceError(f"no bracket after {s.max_bracket_doublings} doublings")
    return upper


def quantile(p: Params, u: ArrayLike, s: QuantileSettings = _DEFAULT_SETTINGS) -> float | np.ndarray:
    """
    F^{-1}(u) by dichotomy on [0, upper].

    The comparison uses F(mid) < u in the lower half and survival(mid) > 1 − u
    in the upper half, where 1 − u is exact. Bisection stops once the bracket
    is narrower than abs_tolerance or cannot be split any further in floating
    point.
    """
    u = _as_float_array(u)
    _check_open_unit(u)
    q = 1.0 - u
    upper_half = u > 0.5

    lo = np.zeros(u.shape)
    hi = _bracket(p, q, s)
    tol = s.abs_tolerance

    for _ in range(s.max_bisections):
        mid = 0.5 * (lo + hi)
        active = ((hi - lo) > tol) & (mid > lo) & (mid < hi)
        if not np.any(active):
            break
        below = np.where(upper_half, survival(p, mid) > q, cdf(p, mid) < u)
        lo = np.where(active & below, mid, lo)
        hi = np.where(active & ~below, mid, hi)
    else:
        mid = 0.5 * (lo + hi)
        if np.any(((hi - lo) > tol) & (mid > lo) & (mid < hi)):
            logger.warning("  ⚠️  [distribution] QUANTILE  bisection did not converge in %d steps", s.max_bisections)
            raise ConvergenceError(f"bisection did not reach tolerance {tol} in {s.max_bisections} steps")
    return _out(0.5 * (lo + hi))


def quantile_lambertw(p: Params, u: ArrayLike) -> float | np.ndarray:
    """
    Closed-form quantile through the W₋₁ branch of Lambert W.

    Cross-check only; sampling always goes through quantile().
    """
    u = _as_float_array(u)
    _check_open_unit(u)
    z = -p.beta * (1.0 - u) * math.exp(-p.beta)
    w = lambertw(z, k=-1).real
    return _out((-w - p.beta) / p.theta)


def sample_inverse(p: Params, r: RngStream, n: int, s: QuantileSettings = _DEFAULT_SETTINGS) -> np.ndarray:
    """n iid draws X = F^{-1}(U) from the uniforms of r."""
    if n < 1:
        raise DomainError(f"sample size must be >= 1, got {n}")
    logger.debug("  🎲 [distribution] SAMPLE  ▶  inverse  n=%d   › %r", n, r)
    return np.atleast_1d(quantile(p, r.uniforms(n), s))


def sample_mixture(p: Params, r: RngStream, n: int) -> np.ndarray:
    """
    n iid draws from the decomposition f = ((β−1)/β)·Exp(θ) + (1/β)·Γ(2, θ).

    Three uniforms are consumed per draw whatever branch fires, so the
    stream position after a call depends on n only.
    """
    if n < 1:
        raise DomainError(f"sample size must be >= 1, got {n}")
    logger.debug("  🎲 [distribution] SAMPLE  ▶  mixture  n=%d   › %r", n, r)
    u = r.uniforms(3 * n).reshape(3, n)
    gamma_branch = u[0] < 1.0 / p.beta
    e1 = -np.log(u[1])
    e2 = np.where(gamma_branch, -np.log(u[2]), 0.0)
    return (e1 + e2) / p.theta
