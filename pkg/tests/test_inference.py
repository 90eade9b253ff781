import math

import numpy as np
import pytest
from scipy import integrate, stats

from pseudo_lindley._types import CovarianceMatrix, Hypothesis, ParamEstimate, Params
from pseudo_lindley.asymptotics import covariance
from pseudo_lindley.estimation import fit
from pseudo_lindley.exceptions import DegenerateSampleError, DomainError, SingularCovarianceError
from pseudo_lindley.inference import (
    chi2_2_sf,
    confidence_intervals,
    joint_wald_test,
    normal_cdf,
    normal_quantile,
    run_test,
    wald_quadratic_form,
    wald_test,
)
from pseudo_lindley.rng import RngStream
from pseudo_lindley.samplers import get_sampler

SQRT2 = math.sqrt(2.0)

def _estimate(theta_hat, beta_hat, n):
    eta = SQRT2 / (theta_hat * beta_hat)
    return ParamEstimate(theta_hat, beta_hat, eta, SQRT2 / theta_hat, n, beta_hat > 1)

# ── reference laws ─────────────────────────────────────────

def test_normal_cdf():
    assert normal_cdf(0.0) == 0.5
    assert normal_cdf(1.959964) == pytest.approx(0.975, abs=1e-6)
    z = np.linspace(-8, 8, 81)
    np.testing.assert_allclose(normal_cdf(z) + normal_cdf(-z), 1.0, atol=1e-12)
    np.testing.assert_allclose(normal_cdf(z), stats.norm.cdf(z), rtol=1e-12, atol=1e-300)

def test_normal_quantile():
    assert normal_quantile(0.5) == pytest.approx(0.0, abs=1e-10)
    assert normal_quantile(0.975) == pytest.approx(1.959964, abs=1e-6)
    for p in (1e-10, 0.01, 0.3, 0.9, 0.999):
        assert normal_quantile(p) == pytest.approx(stats.norm.ppf(p), abs=1e-9)
        assert normal_cdf(normal_quantile(p)) == pytest.approx(p, rel=1e-9)
    for bad in (0.0, 1.0, -0.2):
        with pytest.raises(DomainError):
            normal_quantile(bad)

def test_chi2_2_sf():
    assert chi2_2_sf(0.0) == 1.0
    assert chi2_2_sf(2.0 * math.log(20.0)) == pytest.approx(0.05, rel=1e-12)
    assert chi2_2_sf(10.0) == pytest.approx(math.exp(-5.0), rel=1e-12)
    for t in (0.5, 3.0, 12.0):
        head, _ = integrate.quad(lambda s: 0.5 * math.exp(-0.5 * s), 0.0, t, epsabs=1e-14)
        assert chi2_2_sf(t) == pytest.approx(1.0 - head, abs=1e-10)
    with pytest.raises(DomainError):
        chi2_2_sf(-1.0)

# ── single-parameter tests ─────────────────────────────────

def test_wald_at_the_null_estimate():
    res = wald_test(_estimate(2.0, 2.0, 500), Hypothesis(2.0, 2.0, "theta"))
    assert res.statistic == 0.0
    assert res.p_value == 1.0
    assert res.reference == "standard-normal"
    assert res.reject is None

def test_wald_theta_value():
    # one asymptotic standard error above the null
    res = wald_test(_estimate(2.155, 2.0, 500), Hypothesis(2.0, 2.0, "theta"), level=0.05)
    assert res.statistic == pytest.approx(1.0005, abs=1e-3)
    assert res.p_value == pytest.approx(0.317, abs=2e-3)
    assert res.reject is False

def test_wald_beta_uses_sigma22():
    e = _estimate(2.0, 2.5, 1000)
    res = wald_test(e, Hypothesis(2.0, 2.0, "beta"))
    assert res.statistic == pytest.approx(math.sqrt(1000) * 0.5 / math.sqrt(88.0), rel=1e-10)

def test_wald_is_monotone_in_distance():
    h = Hypothesis(2.0, 2.0, "theta")
    z = [abs(wald_test(_estimate(2.0 + d, 2.0, 500), h).statistic) for d in (0.01, 0.05, 0.1, 0.3)]
    assert z == sorted(z)

def test_hypothesis_kind_mismatch():
    with pytest.raises(DomainError):
        wald_test(_estimate(2.0, 2.0, 100), Hypothesis(2.0, 2.0, "joint"))
    with pytest.raises(DomainError):
        joint_wald_test(_estimate(2.0, 2.0, 100), Hypothesis(2.0, 2.0, "theta"))

@pytest.mark.parametrize("level", [0.0, 1.0, 1.5])
def test_level_domain(level):
    with pytest.raises(DomainError):
        wald_test(_estimate(2.0, 2.0, 100), Hypothesis(2.0, 2.0, "theta"), level=level)

def test_plugin_sigma_needs_beta_in_range():
    e = ParamEstimate(3.4, 0.4, 1.0, 0.4, 100, False)
    with pytest.raises(DomainError):
        wald_test(e, Hypothesis(2.0, 2.0, "theta"), sigma_at="plug-in")
    # the null covariance does not look at β̂
    assert 0.0 <= wald_test(e, Hypothesis(2.0, 2.0, "theta")).p_value <= 1.0

def test_unknown_sigma_location():
    with pytest.raises(DomainError):
        wald_test(_estimate(2.0, 2.0, 100), Hypothesis(2.0, 2.0, "theta"), sigma_at="sandwich")

# ── joint test ─────────────────────────────────────────────

def test_joint_at_the_null_estimate():
    res = joint_wald_test(_estimate(2.0, 2.0, 500), Hypothesis(2.0, 2.0))
    assert res.statistic == 0.0
    assert res.p_value == 1.0
    assert res.reference == "chi-square-2"

def test_joint_uses_sigma_inverse(p22):
    sigma = covariance(p22)
    np.testing.assert_allclose(sigma.inverse(), np.array([[88.0, 28.0], [28.0, 12.0]]) / 272.0, rtol=1e-10)
    d = np.array([0.1, -0.3])
    t = wald_quadratic_form(400, d[0], d[1], sigma)
    assert t == pytest.approx(400 * d @ sigma.inverse() @ d, rel=1e-12)
    res = joint_wald_test(_estimate(2.1, 1.7, 400), Hypothesis(2.0, 2.0), level=0.05)
    assert res.statistic == pytest.approx(t, rel=1e-9)
    assert res.p_value == pytest.approx(math.exp(-t / 2), rel=1e-12)
    assert res.reject == (res.p_value < 0.05)

def test_joint_with_zero_correlation_adds_squares():
    sigma = CovarianceMatrix(12.0, 88.0, 0.0)
    n, d1, d2 = 500, 0.2, -0.4
    z1 = math.sqrt(n) * d1 / math.sqrt(12.0)
    z2 = math.sqrt(n) * d2 / math.sqrt(88.0)
    assert wald_quadratic_form(n, d1, d2, sigma) == pytest.approx(z1 * z1 + z2 * z2, rel=1e-12)

def test_singular_covariance():
    with pytest.raises(SingularCovarianceError):
        wald_quadratic_form(100, 0.1, 0.1, CovarianceMatrix(1.0, 1.0, 1.0))

def test_run_test_dispatches():
    e = _estimate(2.1, 1.9, 300)
    assert run_test(e, Hypothesis(2.0, 2.0, "theta")).reference == "standard-normal"
    assert run_test(e, Hypothesis(2.0, 2.0, "joint")).reference == "chi-square-2"

def test_statistics_are_scale_invariant(p22):
    x = get_sampler("inverse").draw(p22, RngStream(6, 0), 2000)
    c = 4.0
    base, scaled = fit(x), fit(c * x)
    for which in ("theta", "beta"):
        a = wald_test(base, Hypothesis(2.0, 2.0, which)).statistic
        b = wald_test(scaled, Hypothesis(2.0 / c, 2.0, which)).statistic
        assert b == pytest.approx(a, rel=1e-9)
    a = joint_wald_test(base, Hypothesis(2.0, 2.0)).statistic
    b = joint_wald_test(scaled, Hypothesis(2.0 / c, 2.0)).statistic
    assert b == pytest.approx(a, rel=1e-9)

def test_joint_detects_wrong_null(p22):
    est = fit(get_sampler("inverse").draw(p22, RngStream(7, 0), 10_000))
    assert joint_wald_test(est, Hypothesis(3.0, 2.0)).p_value < 1e-6

# ── confidence intervals ───────────────────────────────────

def test_confidence_intervals_shape():
    e = _estimate(2.0, 2.0, 500)
    (t_lo, t_hi), (b_lo, b_hi) = confidence_intervals(e)
    assert t_lo < 2.0 < t_hi and b_lo < 2.0 < b_hi
    assert (t_hi - t_lo) / 2 == pytest.approx(1.959964 * math.sqrt(12.0 / 500), rel=1e-6)
    (w_lo, w_hi), _ = confidence_intervals(_estimate(2.0, 2.0, 2000))
    assert (w_hi - w_lo) == pytest.approx(0.5 * (t_hi - t_lo), rel=1e-12)

def test_confidence_intervals_domain():
    with pytest.raises(DomainError):
        confidence_intervals(_estimate(2.0, 2.0, 500), level=1.0)
    with pytest.raises(DomainError):
        confidence_intervals(ParamEstimate(3.4, 0.4, 1.0, 0.4, 100, False))

@pytest.mark.slow
def test_confidence_interval_coverage(p22):
    backend = get_sampler("mixture")
    base = RngStream(19, 0)
    hits = tested = 0
    for i in range(1000):
        try:
            est = fit(backend.draw(p22, base.derive(i), 1000))
            (lo, hi), _ = confidence_intervals(est)
        except (DegenerateSampleError, DomainError):
            continue
        tested += 1
        hits += lo <= p22.theta <= hi
    assert 0.925 <= hits / tested <= 0.975

@pytest.mark.slow
def test_null_p_values_are_uniform(p22):
    backend = get_sampler("mixture")
    base = RngStream(21, 0)
    p_theta, p_beta = [], []
    for i in range(1000):
        est = fit(backend.draw(p22, base.derive(i), 1000))
        p_theta.append(wald_test(est, Hypothesis(2.0, 2.0, "theta")).p_value)
        p_beta.append(wald_test(est, Hypothesis(2.0, 2.0, "beta")).p_value)
    assert stats.kstest(p_theta, "uniform").pvalue > 0.01
    assert stats.kstest(p_beta, "uniform").pvalue > 0.01
