"""
Command-line front end.

Exit codes: 0 success, 2 usage or domain error, 3 degenerate data,
4 validation failure.
"""
import argparse
import logging
import math
import sys
from typing import Sequence

from . import distribution
from ._types import SAMPLER_KINDS, SIGMA_AT, WHICH, Hypothesis, Params, SimConfig
from .asymptotics import covariance, covariance_mc_oracle, estimator_sampling_mc, plugin_covariance
from .datafile import read_data, write_data
from .estimation import estimate_moments, summarize
from .exceptions import ConfigError, ConvergenceError, DegenerateSampleError, DomainError, SingularCovarianceError
from .inference import confidence_intervals, run_test
from .report import dumps_json, emit_table
from .rng import RngStream
from .samplers import get_sampler
from .simulation import run_experiment

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_VALIDATION = 4

ORACLE_TOLERANCE = 0.10
ORACLE_FULL_DRAWS = 1_000_000
SAMPLING_TOLERANCE = 0.25

TABLE1_SIZES = "50,200,375,400,500,700,900,1000,1500,2000,2500"


def _m(value: float) -> str:
    """Machine format: 15 significant digits."""
    return f"{value:.15g}"


def _h(value: float) -> str:
    """Human format: 4 significant digits."""
    return f"{value:.4g}"


def _sizes(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers, got {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


# --- dist -----------------------------------------------------------------

def cmd_dist(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    p = Params(args.theta, args.beta)
    what = args.what
    if what in ("pdf", "log-pdf", "cdf", "survival"):
        if args.x is None:
            parser.error(f"--what {what} needs --x")
        fn = {
            "pdf": distribution.pdf,
            "log-pdf": distribution.log_pdf,
            "cdf": distribution.cdf,
            "survival": distribution.survival,
        }[what]
        value = fn(p, args.x)
    elif what == "quantile":
        if args.u is None:
            parser.error("--what quantile needs --u")
        value = distribution.quantile(p, args.u)
    else:
        if args.k is None:
            parser.error("--what moment needs --k")
        value = distribution.raw_moment(p, args.k)
    print(_m(value))
    return EXIT_OK


# --- sample ---------------------------------------------------------------

def cmd_sample(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    p = Params(args.theta, args.beta)
    r = RngStream(args.seed, args.stream)
    values = get_sampler(args.sampler).draw(p, r, args.n)
    logger.info("  🎲 [cli] SAMPLE  ▶  n=%d  sampler=%s   › %s", args.n, args.sampler, args.out or "<stdout>")
    write_data(args.out if args.out else sys.stdout, values)
    return EXIT_OK


# --- fit ------------------------------------------------------------------

def cmd_fit(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    data = read_data(args.data)
    s = summarize(data.values)
    e = estimate_moments(s)
    result: dict[str, object] = {
        "n": s.n,
        "mean": s.mean,
        "var": s.var,
        "theta_hat": e.theta_hat,
        "beta_hat": e.beta_hat,
        "eta_hat": e.eta_hat,
        "lambda_hat": e.lambda_hat,
        "beta_in_range": e.beta_in_range,
    }
    if e.beta_in_range:
        sigma = plugin_covariance(e)
        (t_lo, t_hi), (b_lo, b_hi) = confidence_intervals(e, args.level)
        result.update(
            se_theta=math.sqrt(sigma.s11 / e.n),
            se_beta=math.sqrt(sigma.s22 / e.n),
            level=args.level,
            ci_theta=[t_lo, t_hi],
            ci_beta=[b_lo, b_hi],
        )

    if args.format == "json":
        print(dumps_json(result))
        return EXIT_OK

    print(f"n             {s.n}")
    print(f"mean          {_h(s.mean)}")
    print(f"var           {_h(s.var)}")
    print(f"theta_hat     {_h(e.theta_hat)}")
    print(f"beta_hat      {_h(e.beta_hat)}")
    print(f"eta_hat       {_h(e.eta_hat)}")
    print(f"beta_in_range {'yes' if e.beta_in_range else 'no'}")
    if e.beta_in_range:
        pct = f"{100 * args.level:g}%"
        print(f"se_theta      {_h(result['se_theta'])}")
        print(f"se_beta       {_h(result['se_beta'])}")
        print(f"ci_theta      [{_h(result['ci_theta'][0])}, {_h(result['ci_theta'][1])}]  ({pct})")
        print(f"ci_beta       [{_h(result['ci_beta'][0])}, {_h(result['ci_beta'][1])}]  ({pct})")
    else:
        print("note          beta_hat <= 1: standard errors and intervals are not available")
    return EXIT_OK


# --- test -----------------------------------------------------------------

def cmd_test(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    data = read_data(args.data)
    e = estimate_moments(summarize(data.values))
    h = Hypothesis(args.theta0, args.beta0, args.which)
    res = run_test(e, h, args.sigma_at, args.level)
    if args.format == "json":
        print(dumps_json(
            {
                "which": args.which,
                "sigma_at": args.sigma_at,
                "statistic": res.statistic,
                "reference": res.reference,
                "p_value": res.p_value,
                "level": res.level,
                "reject": res.reject,
            },
        ))
        return EXIT_OK
    decision = "reject H0" if res.reject else "do not reject H0"
    print(f"statistic  {_m(res.statistic)}")
    print(f"reference  {res.reference}")
    print(f"p_value    {_m(res.p_value)}")
    print(f"decision   {decision} at level {args.level:g}")
    return EXIT_OK


# --- simulate -------------------------------------------------------------

def cmd_simulate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    theta, beta, sizes = args.theta, args.beta, args.sizes
    if args.from_data:
        data = read_data(args.from_data)
        e = estimate_moments(summarize(data.values))
        if not e.beta_in_range:
            raise DomainError(f"fitted beta_hat = {e.beta_hat:.4g} <= 1; cannot simulate at the estimate")
        theta, beta = e.theta_hat, e.beta_hat
        sizes = sizes or [len(data.values)]
        logger.info("  📐 [cli] SIMULATE  ▶  at the estimate theta=%.6g beta=%.6g   › %s", theta, beta, args.from_data)
    if theta is None or beta is None:
        parser.error("simulate needs --theta and --beta (or --from-data)")
    config = SimConfig(
        theta=theta,
        beta=beta,
        sizes=tuple(sizes or _sizes(TABLE1_SIZES)),
        replications=args.reps,
        seed=args.seed,
        nominal_level=args.level,
        sampler=args.sampler,
        sigma_at=args.sigma_at,
        workers=args.workers,
        progress=args.progress,
    )
    text = emit_table(run_experiment(config), args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- validate -------------------------------------------------------------

def _rel(empirical: float, closed: float) -> float:
    return abs(empirical - closed) / abs(closed)


def cmd_validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    p = Params(args.theta, args.beta)
    closed = covariance(p)
    tolerance = ORACLE_TOLERANCE
    if args.draws < ORACLE_FULL_DRAWS:
        tolerance = ORACLE_TOLERANCE * math.sqrt(ORACLE_FULL_DRAWS / args.draws)
        print(
            f"warning: draws={args.draws} < {ORACLE_FULL_DRAWS}; tolerances are MC-limited "
            f"(relative tolerance widened to {tolerance:.3g})",
            file=sys.stderr,
        )

    oracle = covariance_mc_oracle(p, args.draws, RngStream(args.seed, 0), args.sampler)
    sampling = estimator_sampling_mc(p, args.n, args.reps, RngStream(args.seed, 1), args.sampler)

    print(f"{'entry':<8}{'closed':>16}{'oracle':>16}{'rel_err':>10}{'sampling':>16}{'rel_err':>10}")
    failed = False
    for name in ("s11", "s22", "s12"):
        c = getattr(closed, name)
        o = getattr(oracle, name)
        s = getattr(sampling.covariance, name)
        err_o, err_s = _rel(o, c), _rel(s, c)
        failed |= err_o > tolerance
        if err_s > SAMPLING_TOLERANCE:
            print(f"warning: sampling {name} differs by {err_s:.1%} at n={args.n}", file=sys.stderr)
        print(f"{name:<8}{_m(c):>16}{o:>16.6g}{err_o:>10.2%}{s:>16.6g}{err_s:>10.2%}")
    print(f"degenerate replications: {sampling.degenerate_count} of {args.reps}")
    if failed:
        print(f"validation FAILED: an oracle entry exceeds {tolerance:.1%} relative error", file=sys.stderr)
        return EXIT_VALIDATION
    print("validation passed")
    return EXIT_OK


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudo-lindley",
        description="Pseudo-Lindley distribution: evaluation, sampling, moment fitting, Wald tests and Monte Carlo studies.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="trace operations on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def params(sp: argparse.ArgumentParser, required: bool = True) -> None:
        sp.add_argument("--theta", type=float, required=required, help="rate θ > 0")
        sp.add_argument("--beta", type=float, required=required, help="shape β > 1")

    sp = sub.add_parser("dist", help="evaluate pdf, cdf, survival, quantile or a raw moment")
    params(sp)
    sp.add_argument("--what", required=True, choices=["pdf", "log-pdf", "cdf", "survival", "quantile", "moment"])
    sp.add_argument("--x", type=float, help="point for pdf / log-pdf / cdf / survival")
    sp.add_argument("--u", type=float, help="probability for quantile, 0 < u < 1")
    sp.add_argument("--k", type=int, help="order for moment, k >= 1")
    sp.set_defaults(func=cmd_dist)

    sp = sub.add_parser("sample", help="draw a reproducible sample (CSV with header x)")
    params(sp)
    sp.add_argument("--n", type=_positive_int, required=True, help="sample size, n >= 1")
    sp.add_argument("--seed", type=int, default=0, help="64-bit seed (default 0)")
    sp.add_argument("--stream", type=int, default=0, help="stream id (default 0)")
    sp.add_argument("--sampler", choices=SAMPLER_KINDS, default="inverse", help="generator (default inverse)")
    sp.add_argument("--out", help="output file (default stdout)")
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("fit", help="moment estimates with plug-in standard errors and intervals")
    sp.add_argument("--data", required=True, help="data file: one value per line, optional header x")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--level", type=float, default=0.95, help="interval level (default 0.95)")
    sp.set_defaults(func=cmd_fit)

    sp = sub.add_parser("test", help="Wald z-test or joint chi-square test")
    sp.add_argument("--data", required=True, help="data file: one value per line, optional header x")
    sp.add_argument("--theta0", type=float, required=True, help="null value of θ")
    sp.add_argument("--beta0", type=float, required=True, help="null value of β")
    sp.add_argument("--which", choices=WHICH, default="joint", help="tested parameter(s) (default joint)")
    sp.add_argument("--sigma-at", choices=SIGMA_AT, default="null", help="where Σ is evaluated (default null)")
    sp.add_argument("--level", type=float, default=0.05, help="nominal level (default 0.05)")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_test)

    sp = sub.add_parser("simulate", help="Monte Carlo study of the estimators and tests")
    params(sp, required=False)
    sp.add_argument("--sizes", type=_sizes, help=f"comma-separated sample sizes (default {TABLE1_SIZES})")
    sp.add_argument("--reps", type=int, default=1000, help="replications per size, >= 100 (default 1000)")
    sp.add_argument("--seed", type=int, default=0, help="64-bit seed (default 0)")
    sp.add_argument("--level", type=float, default=0.05, help="nominal test level (default 0.05)")
    sp.add_argument("--sampler", choices=SAMPLER_KINDS, default="inverse")
    sp.add_argument("--sigma-at", choices=SIGMA_AT, default="null")
    sp.add_argument("--workers", type=_positive_int, default=1, help="replication threads (default 1)")
    sp.add_argument("--progress", action="store_true", help="show a progress bar on stderr")
    sp.add_argument("--from-data", help="fit this data file and simulate at the estimate")
    sp.add_argument("--out", help="output file (default stdout)")
    sp.add_argument("--format", choices=["csv", "json", "series"], default="csv")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("validate", help="compare closed-form Σ with Monte Carlo oracles")
    params(sp)
    sp.add_argument("--draws", type=int, default=ORACLE_FULL_DRAWS, help="oracle draws, >= 10000 (default 1e6)")
    sp.add_argument("--seed", type=int, default=0, help="64-bit seed (default 0)")
    sp.add_argument("--n", type=int, default=5000, help="sample size of the estimator oracle (default 5000)")
    sp.add_argument("--reps", type=int, default=2000, help="replications of the estimator oracle (default 2000)")
    sp.add_argument("--sampler", choices=SAMPLER_KINDS, default="inverse")
    sp.set_defaults(func=cmd_validate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")

    try:
        return args.func(args, parser)
    except DegenerateSampleError as e:
        print(f"error: degenerate sample: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (DomainError, ConfigError, ConvergenceError, SingularCovarianceError, OverflowError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
