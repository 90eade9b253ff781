import math
from dataclasses import dataclass, field
from typing import Literal, TypedDict

import numpy as np

from .exceptions import ConfigError, DomainError

SamplerKind = Literal["inverse", "mixture"]
SigmaAt = Literal["null", "plug-in"]
Which = Literal["theta", "beta", "joint"]
Reference = Literal["standard-normal", "chi-square-2"]
TableFormat = Literal["csv", "json", "series"]

SAMPLER_KINDS: tuple[SamplerKind, ...] = ("inverse", "mixture")
SIGMA_AT: tuple[SigmaAt, ...] = ("null", "plug-in")
WHICH: tuple[Which, ...] = ("theta", "beta", "joint")


def _check_params(theta: float, beta: float) -> None:
    if not (math.isfinite(theta) and theta > 0):
        raise DomainError(f"theta must be a finite positive number, got {theta!r}")
    if not (math.isfinite(beta) and beta > 1):
        raise DomainError(f"beta must be a finite number > 1, got {beta!r}")


@dataclass(frozen=True)
class Params:
    """Pseudo-Lindley parameters: rate theta > 0 and shape beta > 1."""
    theta: float
    beta: float

    def __post_init__(self) -> None:
        _check_params(self.theta, self.beta)


@dataclass(frozen=True)
class QuantileSettings:
    abs_tolerance: float = 1e-12
    max_bracket_doublings: int = 128
    max_bisections: int = 200

    def __post_init__(self) -> None:
        if not self.abs_tolerance > 0:
            raise DomainError(f"abs_tolerance must be > 0, got {self.abs_tolerance!r}")
        if self.max_bracket_doublings < 1 or self.max_bisections < 1:
            raise DomainError("iteration limits must be positive")


@dataclass(frozen=True)
class SampleSummary:
    n: int
    mean: float
    var: float          # 1/n convention
    min: float = 0.0


@dataclass(frozen=True)
class ParamEstimate:
    theta_hat: float
    beta_hat: float
    eta_hat: float      # sqrt(mean² - var)
    lambda_hat: float   # mean·√2 - eta_hat
    n: int
    beta_in_range: bool


@dataclass(frozen=True)
class AsymptoticCoefficients:
    """Moments and influence-function coefficients H_i(x) = a_i·x + b_i·x²."""
    m: float
    m2: float
    sigma2: float
    eta: float
    lam: float
    a1: float
    b1: float
    a2: float
    b2: float


@dataclass(frozen=True)
class CovarianceMatrix:
    s11: float
    s22: float
    s12: float
    gamma1: float = math.nan
    gamma2: float = math.nan
    tau1_sq: float = math.nan
    tau2_sq: float = math.nan
    c: float = math.nan

    @property
    def det(self) -> float:
        return self.s11 * self.s22 - self.s12 * self.s12

    @property
    def correlation(self) -> float:
        return self.s12 / math.sqrt(self.s11 * self.s22)

    def as_array(self) -> np.ndarray:
        return np.array([[self.s11, self.s12], [self.s12, self.s22]])

    def inverse(self) -> np.ndarray:
        det = self.det
        return np.array([[self.s22, -self.s12], [-self.s12, self.s11]]) / det


@dataclass(frozen=True)
class Hypothesis:
    theta0: float
    beta0: float
    which: Which = "joint"
    sidedness: Literal["two-sided"] = "two-sided"

    def __post_init__(self) -> None:
        _check_params(self.theta0, self.beta0)
        if self.which not in WHICH:
            raise DomainError(f"which must be one of {WHICH}, got {self.which!r}")


@dataclass(frozen=True)
class TestResult:
    statistic: float
    reference: Reference
    p_value: float
    level: float | None = None
    reject: bool | None = None

    __test__ = False  # keep pytest from collecting this class


class ReplicationRecord(TypedDict):
    theta_hat: float
    beta_hat: float
    p_theta: float
    p_beta: float
    p_joint: float
    degenerate: bool


@dataclass(frozen=True)
class SimConfig:
    theta: float
    beta: float
    sizes: tuple[int, ...]
    replications: int = 1000
    seed: int = 0
    nominal_level: float = 0.05
    sampler: SamplerKind = "inverse"
    sigma_at: SigmaAt = "null"
    workers: int = 1
    progress: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(int(n) for n in self.sizes))
        try:
            _check_params(self.theta, self.beta)
        except DomainError as e:
            raise ConfigError(str(e)) from e
        if not self.sizes:
            raise ConfigError("sizes must not be empty")
        if any(n < 10 for n in self.sizes):
            raise ConfigError(f"every sample size must be >= 10, got {list(self.sizes)}")
        if self.replications < 100:
            raise ConfigError(f"replications must be >= 100, got {self.replications}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if not 0 < self.nominal_level < 1:
            raise ConfigError(f"nominal_level must lie in (0, 1), got {self.nominal_level}")
        if self.sampler not in SAMPLER_KINDS:
            raise ConfigError(f"sampler must be one of {SAMPLER_KINDS}, got {self.sampler!r}")
        if self.sigma_at not in SIGMA_AT:
            raise ConfigError(f"sigma_at must be one of {SIGMA_AT}, got {self.sigma_at!r}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")

    @property
    def params(self) -> Params:
        return Params(self.theta, self.beta)


@dataclass(frozen=True)
class SimRow:
    n: int
    mve_theta: float
    mve_beta: float
    rmse_theta: float
    rmse_beta: float
    reject_rate_theta: float
    reject_rate_beta: float
    reject_rate_joint: float
    degenerate_count: int
    tested: int = 0
    se_mve_theta: float = math.nan
    se_mve_beta: float = math.nan
    se_rmse_theta: float = math.nan
    se_rmse_beta: float = math.nan
    se_reject_theta: float = math.nan
    se_reject_beta: float = math.nan
    se_reject_joint: float = math.nan


@dataclass(frozen=True)
class SimReport:
    config: SimConfig
    rows: list[SimRow] = field(default_factory=list)
    wall_time: float = 0.0


@dataclass(frozen=True)
class DataFile:
    path: str
    values: np.ndarray
