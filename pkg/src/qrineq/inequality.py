"""Sample estimators: ratio inequality curve, index, asymptotic variances,
Wald and bootstrap confidence intervals, Gini baseline, Lorenz ordinates,
and the median-preserving transfer utility.

All estimators are exactly scale invariant (except the Lorenz/Gini pair,
which is scale invariant by construction): multiplying every observation by
a positive constant leaves curves, indices, variances and interval endpoints
unchanged.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import DomainError, InsufficientDataError, RejectedTransferError
from .quantile_estimation import (BandwidthRule, SortedSample, _qdens_grid,
                                  hf8_quantile)
from .special import norm_ppf

__all__ = [
    "CurveGrid", "EstimateMethod", "IntervalEstimate", "VarianceComponents",
    "r_hat", "curve", "i_hat", "variance_components", "ratio_covariance",
    "sigma2_p", "sigma_pr", "var_i_hat", "ci_I", "ci_diff_I", "ci_diff_G",
    "gini_hat", "var_gini_hat", "ci_G", "bootstrap_ci", "lorenz_ordinates",
    "median_preserving_transfer", "grid_levels",
]

DEFAULT_J = 100
DEFAULT_ALPHA = 0.05
DEFAULT_BOOTSTRAP_REPLICATES = 500


def grid_levels(J: int) -> np.ndarray:
    """Midpoint grid p_j = (j - 1/2) / J, j = 1..J."""
    if J < 2:
        raise DomainError("grid size J must be >= 2")
    return (np.arange(J, dtype=float) + 0.5) / J


@dataclass(frozen=True)
class CurveGrid:
    """Ordinates of an inequality or Lorenz curve on a probability grid."""

    p: np.ndarray
    ordinate: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        o = np.asarray(self.ordinate, dtype=float)
        if p.shape != o.shape or p.ndim != 1:
            raise DomainError("curve grid needs matching 1-d arrays")
        if np.any(p <= 0.0) or np.any(p > 1.0) or np.any(np.diff(p) <= 0.0):
            raise DomainError("grid levels must be strictly increasing in (0, 1]")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "ordinate", o)

    @property
    def J(self) -> int:
        return self.p.size

    def write_csv(self, fp) -> None:
        writer = csv.writer(fp)
        writer.writerow(["p", "ordinate"])
        for pj, oj in zip(self.p, self.ordinate):
            writer.writerow([repr(float(pj)), repr(float(oj))])


class EstimateMethod(Enum):
    WALD_I = "wald-i"
    WALD_G = "wald-g"
    BOOTSTRAP = "bootstrap"
    WALD_DIFF = "wald-diff"


@dataclass(frozen=True)
class IntervalEstimate:
    """Point estimate with standard error and a confidence interval."""

    measure: str
    point: float
    se: float
    lower: float
    upper: float
    level: float
    method: EstimateMethod
    n: int
    J: int | None = None
    flags: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.lower <= self.point <= self.upper:
            raise DomainError("interval must contain its point estimate")
        if self.se < 0.0:
            raise DomainError("standard error must be nonnegative")

    def covers(self, value: float) -> bool:
        return self.lower <= value <= self.upper

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def to_record(self) -> dict:
        return {
            "measure": self.measure,
            "point": self.point,
            "se": self.se,
            "lower": self.lower,
            "upper": self.upper,
            "level": self.level,
            "method": self.method.value,
            "J": self.J,
            "n": self.n,
            "flags": list(self.flags),
        }


@dataclass(frozen=True)
class VarianceComponents:
    """Per-level coefficients of the ratio-estimate asymptotic variance.

    sigma2 = a0 + a1 R + a2 R^2, floored at zero; ``degenerate`` marks a
    zero-spread quantile-density window (ties), where the variance is
    reported as exactly zero.
    """

    a0: float
    a1: float
    a2: float
    sigma2: float
    degenerate: bool = False


def _require_positive(sample: SortedSample, what: str) -> None:
    if sample.values[0] <= 0.0:
        raise DomainError(f"{what} requires strictly positive observations")


def r_hat(sample: SortedSample, p) -> float | np.ndarray:
    """Estimated symmetric quantile ratio at level(s) p."""
    _require_positive(sample, "the quantile ratio")
    p = np.asarray(p, dtype=float)
    lo = hf8_quantile(sample, p / 2.0)
    hi = hf8_quantile(sample, 1.0 - p / 2.0)
    return lo / hi


def curve(sample: SortedSample, J: int = DEFAULT_J) -> CurveGrid:
    """Ratio inequality curve on the midpoint grid of size J."""
    p = grid_levels(J)
    return CurveGrid(p, np.asarray(r_hat(sample, p)))


def i_hat(sample: SortedSample, J: int = DEFAULT_J) -> float:
    """Grid average of 1 - R_hat(p_j); zero iff every ratio equals one."""
    return float(np.mean(1.0 - curve(sample, J).ordinate))


def variance_components(p: float, q_lo: float, q_hi: float, x_hi: float,
                        r_value: float, degenerate: bool = False
                        ) -> VarianceComponents:
    """Evaluate the variance coefficients from (estimated or true) inputs.

    ``q_lo``/``q_hi`` are quantile densities at p/2 and 1 - p/2, ``x_hi``
    the quantile at 1 - p/2, ``r_value`` the ratio at p.
    """
    half = 0.5 * p
    a0 = half * (1.0 - half) * q_lo**2 / x_hi**2
    a1 = -2.0 * half**2 * q_lo * q_hi / x_hi**2
    a2 = half * (1.0 - half) * q_hi**2 / x_hi**2
    sigma2 = max(0.0, a0 + a1 * r_value + a2 * r_value**2)
    if degenerate:
        sigma2 = 0.0
    return VarianceComponents(a0, a1, a2, sigma2, degenerate)


def ratio_covariance(p: float, r: float, q_lo_p: float, q_hi_p: float,
                     q_lo_r: float, q_hi_r: float, x_hi_p: float,
                     x_hi_r: float, r_p: float, r_r: float) -> float:
    """Large-sample covariance of the ratio estimates at levels p <= r."""
    if p > r:
        raise DomainError("ratio_covariance expects p <= r")
    hp, hr = 0.5 * p, 0.5 * r
    return (hp * (1.0 - hr) * (q_lo_p * q_lo_r + r_p * r_r * q_hi_p * q_hi_r)
            - hp * hr * (r_r * q_lo_p * q_hi_r + r_p * q_hi_p * q_lo_r)) \
        / (x_hi_p * x_hi_r)


def _plugin_components(sample: SortedSample, p: np.ndarray,
                       rule: BandwidthRule):
    """Quantiles, densities and ratios at p/2 and 1 - p/2 for each level."""
    lo_lv = p / 2.0
    hi_lv = 1.0 - p / 2.0
    x_lo = _kernels.hf8(sample.values, lo_lv)
    x_hi = _kernels.hf8(sample.values, hi_lv)
    q_lo, deg_lo = _qdens_grid(sample, lo_lv, rule)
    q_hi, deg_hi = _qdens_grid(sample, hi_lv, rule)
    return x_lo, x_hi, q_lo, q_hi, (deg_lo | deg_hi)


def sigma2_p(sample: SortedSample, p: float,
             rule: BandwidthRule | None = None) -> VarianceComponents:
    """Plug-in variance coefficients of the ratio estimate at level p."""
    _require_positive(sample, "variance estimation")
    if not 0.0 < p < 1.0:
        raise DomainError("p must lie in (0, 1)")
    rule = rule or BandwidthRule.automatic()
    x_lo, x_hi, q_lo, q_hi, deg = _plugin_components(
        sample, np.array([p]), rule)
    return variance_components(p, float(q_lo[0]), float(q_hi[0]),
                               float(x_hi[0]), float(x_lo[0] / x_hi[0]),
                               bool(deg[0]))


def sigma_pr(sample: SortedSample, p: float, r: float,
             rule: BandwidthRule | None = None) -> float:
    """Plug-in covariance of the ratio estimates at levels p and r.

    Symmetric in (p, r); on the diagonal it equals ``sigma2_p(...).sigma2``
    before flooring.
    """
    _require_positive(sample, "covariance estimation")
    if not (0.0 < p < 1.0 and 0.0 < r < 1.0):
        raise DomainError("levels must lie in (0, 1)")
    if p > r:
        p, r = r, p
    rule = rule or BandwidthRule.automatic()
    levels = np.array([p, r])
    x_lo, x_hi, q_lo, q_hi, deg = _plugin_components(sample, levels, rule)
    rr = x_lo / x_hi
    return ratio_covariance(p, r, q_lo[0], q_hi[0], q_lo[1], q_hi[1],
                            x_hi[0], x_hi[1], rr[0], rr[1])


def var_i_hat(sample: SortedSample, J: int = DEFAULT_J,
              rule: BandwidthRule | None = None) -> float:
    """Estimated variance of the grid index estimate, floored at zero."""
    _require_positive(sample, "variance estimation")
    rule = rule or BandwidthRule.automatic()
    p = grid_levels(J)
    x_lo, x_hi, q_lo, q_hi, deg = _plugin_components(sample, p, rule)
    total = _kernels.sigma_matrix_sum(p / 2.0, x_lo, x_hi, q_lo, q_hi)
    return max(0.0, total / (sample.n * float(J) ** 2))


def _z_crit(alpha: float) -> float:
    if not 0.0 < alpha < 1.0:
        raise DomainError("alpha must lie in (0, 1)")
    return float(norm_ppf(1.0 - alpha / 2.0))


def ci_I(sample: SortedSample, J: int = DEFAULT_J,
         alpha: float = DEFAULT_ALPHA,
         rule: BandwidthRule | None = None) -> IntervalEstimate:
    """Wald interval for the inequality index, truncated to [0, 1].

    Truncation is recorded in ``flags`` so coverage bookkeeping can use the
    interval exactly as reported.
    """
    rule = rule or BandwidthRule.automatic()
    point = i_hat(sample, J)
    var = var_i_hat(sample, J, rule)
    se = math.sqrt(var)
    z = _z_crit(alpha)
    lower, upper = point - z * se, point + z * se
    flags = []
    if lower < 0.0:
        lower = 0.0
        flags.append("truncated-lower")
    if upper > 1.0:
        upper = 1.0
        flags.append("truncated-upper")
    if var == 0.0:
        flags.append("degenerate-variance")
    return IntervalEstimate("I", point, se, lower, upper, 1.0 - alpha,
                            EstimateMethod.WALD_I, sample.n, J, tuple(flags))


def ci_diff_I(sample1: SortedSample, sample2: SortedSample,
              J: int = DEFAULT_J, alpha: float = DEFAULT_ALPHA,
              rule: BandwidthRule | None = None) -> IntervalEstimate:
    """Wald interval for the difference of two inequality indices.

    Differences live in [-1, 1]; the interval is not truncated.
    """
    rule = rule or BandwidthRule.automatic()
    point = i_hat(sample1, J) - i_hat(sample2, J)
    var = var_i_hat(sample1, J, rule) + var_i_hat(sample2, J, rule)
    se = math.sqrt(var)
    z = _z_crit(alpha)
    return IntervalEstimate("I_diff", point, se, point - z * se,
                            point + z * se, 1.0 - alpha,
                            EstimateMethod.WALD_DIFF,
                            sample1.n + sample2.n, J)


def gini_hat(sample: SortedSample) -> float:
    """Order-statistic Gini estimate; lies in [0, 1 - 1/n]."""
    if sample.n < 2:
        raise InsufficientDataError("Gini estimation needs n >= 2")
    _require_positive(sample, "Gini estimation")
    return _kernels.gini_coeff(sample.values)


def var_gini_hat(sample: SortedSample) -> float:
    """Influence-function plug-in variance of the Gini estimate."""
    g = gini_hat(sample)
    zsum = _kernels.gini_zsum(sample.values, g)
    xbar = float(sample.values.mean())
    return max(0.0, zsum / (sample.n * xbar) ** 2)


def ci_G(sample: SortedSample, alpha: float = DEFAULT_ALPHA) -> IntervalEstimate:
    """Wald interval for the Gini index."""
    point = gini_hat(sample)
    se = math.sqrt(var_gini_hat(sample))
    z = _z_crit(alpha)
    flags = ("degenerate-variance",) if se == 0.0 else ()
    return IntervalEstimate("G", point, se, point - z * se, point + z * se,
                            1.0 - alpha, EstimateMethod.WALD_G, sample.n,
                            None, flags)


def ci_diff_G(sample1: SortedSample, sample2: SortedSample,
              alpha: float = DEFAULT_ALPHA) -> IntervalEstimate:
    """Wald interval for the difference of two Gini indices."""
    point = gini_hat(sample1) - gini_hat(sample2)
    se = math.sqrt(var_gini_hat(sample1) + var_gini_hat(sample2))
    z = _z_crit(alpha)
    return IntervalEstimate("G_diff", point, se, point - z * se,
                            point + z * se, 1.0 - alpha,
                            EstimateMethod.WALD_DIFF,
                            sample1.n + sample2.n, None)


def bootstrap_ci(sample: SortedSample, measure: str,
                 B: int = DEFAULT_BOOTSTRAP_REPLICATES,
                 alpha: float = DEFAULT_ALPHA, seed: int = 0,
                 J: int = DEFAULT_J) -> IntervalEstimate:
    """Percentile bootstrap interval for the index ("I") or Gini ("G").

    Resamples with replacement, deterministic in ``seed``; the interval
    endpoints are the alpha/2 and 1 - alpha/2 quantiles of the replicate
    estimates (same order-statistic quantile estimator as everywhere else).
    """
    if measure not in ("I", "G"):
        raise DomainError("measure must be 'I' or 'G'")
    if B < 50:
        raise DomainError("bootstrap needs at least 50 replicates")
    z_lo, z_hi = alpha / 2.0, 1.0 - alpha / 2.0
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    n = sample.n
    estimates = np.empty(B)
    for b in range(B):
        values = np.sort(sample.values[rng.integers(0, n, size=n)])
        boot = SortedSample(values, presorted=True)
        estimates[b] = i_hat(boot, J) if measure == "I" else gini_hat(boot)
    point = i_hat(sample, J) if measure == "I" else gini_hat(sample)
    order = SortedSample(estimates)
    lower = hf8_quantile(order, z_lo)
    upper = hf8_quantile(order, z_hi)
    lower = min(lower, point)
    upper = max(upper, point)
    se = float(np.std(estimates, ddof=1))
    return IntervalEstimate(measure, point, se, float(lower), float(upper),
                            1.0 - alpha, EstimateMethod.BOOTSTRAP, n,
                            J if measure == "I" else None)


def lorenz_ordinates(sample: SortedSample, grid: Sequence[float]) -> CurveGrid:
    """Empirical Lorenz ordinates: share of the total held by the poorest
    ceil(n p) observations at each grid level."""
    _require_positive(sample, "Lorenz ordinates")
    p = np.asarray(grid, dtype=float)
    if np.any((p <= 0.0) | (p > 1.0)):
        raise DomainError("Lorenz grid levels must lie in (0, 1]")
    counts = np.ceil(sample.n * p).astype(np.intp)
    cum = np.concatenate([[0.0], np.cumsum(sample.values)])
    ordinates = cum[counts] / cum[-1]
    return CurveGrid(p, ordinates)


def median_preserving_transfer(sample: SortedSample, amount: float,
                               donor_rank: int, recipient_rank: int
                               ) -> SortedSample:
    """Move ``amount`` from an above-median to a below-median observation.

    Ranks are 1-based positions in the sorted sample.  The transfer is
    rejected unless the median position(s) and the ordering within each
    half survive unchanged.
    """
    if amount <= 0.0:
        raise DomainError("transfer amount must be positive")
    n = sample.n
    v = sample.values
    med_lo = (n + 1) // 2      # lower median position, 1-based
    med_hi = (n + 2) // 2      # upper median position (== med_lo for odd n)
    if not 1 <= recipient_rank < med_lo:
        raise RejectedTransferError(
            "recipient must sit strictly below the median position(s)")
    if not med_hi < donor_rank <= n:
        raise RejectedTransferError(
            "donor must sit strictly above the median position(s)")
    new_donor = v[donor_rank - 1] - amount
    new_recipient = v[recipient_rank - 1] + amount
    if new_donor < v[donor_rank - 2]:
        raise RejectedTransferError(
            "transfer would push the donor below its lower neighbor")
    if new_recipient > v[recipient_rank]:
        raise RejectedTransferError(
            "transfer would push the recipient above its upper neighbor")
    out = v.copy()
    out[donor_rank - 1] = new_donor
    out[recipient_rank - 1] = new_recipient
    return SortedSample(out, presorted=True)
