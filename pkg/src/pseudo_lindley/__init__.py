from .exceptions import (
    PseudoLindleyError,
    DomainError,
    ConvergenceError,
    DegenerateSampleError,
    SingularCovarianceError,
    ConfigError,
    DataFileError,
)
from ._types import (
    Params,
    QuantileSettings,
    SampleSummary,
    ParamEstimate,
    AsymptoticCoefficients,
    CovarianceMatrix,
    Hypothesis,
    TestResult,
    SimConfig,
    SimRow,
    SimReport,
    DataFile,
    SamplerKind,
    SigmaAt,
)
from .rng import RngStream
from .samplers import Sampler, InverseSampler, MixtureSampler, get_sampler
from .distribution import (
    pdf,
    log_pdf,
    cdf,
    survival,
    quantile,
    quantile_lambertw,
    raw_moment,
    mean,
    variance,
    lindley_pdf,
    sample_inverse,
    sample_mixture,
)
from .estimation import summarize, estimate_moments, remark_estimates, fit
from .asymptotics import (
    coefficients,
    eval_influence,
    covariance,
    plugin_covariance,
    covariance_mc_oracle,
    estimator_sampling_mc,
    mahalanobis,
    EstimatorSamplingResult,
)
from .inference import (
    normal_cdf,
    normal_quantile,
    chi2_2_sf,
    wald_test,
    joint_wald_test,
    run_test,
    confidence_intervals,
)
from .simulation import run_replication, aggregate, run_experiment
from .report import emit_table, parse_table
from .datafile import read_data, write_data

__all__ = [
    "PseudoLindleyError",
    "DomainError",
    "ConvergenceError",
    "DegenerateSampleError",
    "SingularCovarianceError",
    "ConfigError",
    "DataFileError",
    "Params",
    "QuantileSettings",
    "SampleSummary",
    "ParamEstimate",
    "AsymptoticCoefficients",
    "CovarianceMatrix",
    "Hypothesis",
    "TestResult",
    "SimConfig",
    "SimRow",
    "SimReport",
    "DataFile",
    "SamplerKind",
    "SigmaAt",
    "RngStream",
    "Sampler",
    "InverseSampler",
    "MixtureSampler",
    "get_sampler",
    "pdf",
    "log_pdf",
    "cdf",
    "survival",
    "quantile",
    "quantile_lambertw",
    "raw_moment",
    "mean",
    "variance",
    "lindley_pdf",
    "sample_inverse",
    "sample_mixture",
    "summarize",
    "estimate_moments",
    "remark_estimates",
    "fit",
    "coefficients",
    "eval_influence",
    "covariance",
    "plugin_covariance",
    "covariance_mc_oracle",
    "estimator_sampling_mc",
    "mahalanobis",
    "EstimatorSamplingResult",
    "normal_cdf",
    "normal_quantile",
    "chi2_2_sf",
    "wald_test",
    "joint_wald_test",
    "run_test",
    "confidence_intervals",
    "run_replication",
    "run_experiment",
    "aggregate",
    "emit_table",
    "parse_table",
    "read_data",
    "write_data",
]
