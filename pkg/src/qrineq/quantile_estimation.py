"""Distribution-free quantile and quantile-density estimation.

The quantile estimator interpolates two adjacent order statistics with
plotting position h = (n + 1/3) p + 1/3 (median-unbiased family).  The
quantile density is a symmetric difference quotient of that estimator with
a plug-in bandwidth on the probability scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import DomainError, InsufficientDataError

__all__ = [
    "SortedSample", "BandwidthKind", "BandwidthRule", "QuantileDensity",
    "hf8_quantile", "default_bandwidth", "empirical_quantile_density",
]

# Coefficient of the n^(-1/5) automatic bandwidth.  Calibrated against the
# interval-width targets of the acceptance suite; see tests/test_acceptance.
AUTO_BANDWIDTH_COEF = 0.5
_H_FLOOR = 0.001
_H_CEIL = 0.25


class SortedSample:
    """Immutable ascending sample; the array itself is the order statistics."""

    __slots__ = ("values",)

    def __init__(self, values, presorted: bool = False):
        arr = np.array(values, dtype=np.float64, copy=True).ravel()
        if arr.size < 1:
            raise DomainError("sample must contain at least one observation")
        if not np.all(np.isfinite(arr)):
            raise DomainError("sample values must be finite")
        if not presorted:
            arr.sort()
        elif np.any(np.diff(arr) < 0.0):
            raise DomainError("presorted=True but values are not ascending")
        arr.setflags(write=False)
        self.values = arr

    @property
    def n(self) -> int:
        return self.values.size

    def __len__(self) -> int:
        return self.values.size

    @property
    def min(self) -> float:
        return float(self.values[0])

    @property
    def max(self) -> float:
        return float(self.values[-1])

    def require_positive(self, what: str = "this operation") -> None:
        if self.values[0] <= 0.0:
            raise DomainError(f"{what} requires strictly positive values")

    def scaled(self, c: float) -> "SortedSample":
        if c <= 0.0:
            raise DomainError("scale factor must be positive")
        return SortedSample(self.values * c, presorted=True)

    def __repr__(self):
        return f"SortedSample(n={self.n}, min={self.min:g}, max={self.max:g})"


class BandwidthKind(Enum):
    FIXED_H = "fixed-h"
    AUTOMATIC_QOR = "auto-qor"


@dataclass(frozen=True)
class BandwidthRule:
    """Probability-scale bandwidth policy for quantile-density estimation."""

    kind: BandwidthKind = BandwidthKind.AUTOMATIC_QOR
    h: float | None = None

    def __post_init__(self):
        if self.kind is BandwidthKind.FIXED_H:
            if self.h is None or not (0.0 < self.h < 0.5):
                raise DomainError("fixed bandwidth must satisfy 0 < h < 1/2")
        elif self.h is not None:
            raise DomainError("automatic rule takes no explicit h")

    @classmethod
    def fixed(cls, h: float) -> "BandwidthRule":
        return cls(BandwidthKind.FIXED_H, float(h))

    @classmethod
    def automatic(cls) -> "BandwidthRule":
        return cls()

    def resolve(self, n: int, p) -> np.ndarray:
        """Bandwidth at each level p, shrunk to keep the window inside (0, 1)."""
        p = np.asarray(p, dtype=float)
        if self.kind is BandwidthKind.FIXED_H:
            h = np.full_like(p, self.h)
        else:
            h = np.full_like(p, _auto_h(n))
        return np.minimum(h, 0.5 * np.minimum(p, 1.0 - p))


def _auto_h(n: int) -> float:
    return min(_H_CEIL, max(_H_FLOOR, AUTO_BANDWIDTH_COEF * n ** -0.2))


def default_bandwidth(n: int, p: float) -> float:
    """Automatic bandwidth at level p for a sample of size n.

    min(0.25, max(0.001, 0.5 n^(-1/5))), then shrunk to at most half the
    distance from p to the nearer endpoint so the symmetric window
    [p - h, p + h] stays well inside (0, 1); nonincreasing in n.
    """
    if n < 3:
        raise InsufficientDataError("bandwidth needs n >= 3")
    if not 0.0 < p < 1.0:
        raise DomainError("p must lie in (0, 1)")
    return float(BandwidthRule.automatic().resolve(n, p))


def hf8_quantile(sample: SortedSample, p):
    """Quantile estimate at level(s) p: linear interpolation of adjacent
    order statistics, continuous and nondecreasing in p."""
    p = np.asarray(p, dtype=float)
    if np.any((p <= 0.0) | (p >= 1.0)):
        raise DomainError("quantile level must lie in (0, 1)")
    out = _kernels.hf8(sample.values, np.atleast_1d(p))
    return float(out[0]) if p.ndim == 0 else out


class QuantileDensity(NamedTuple):
    """Quantile-density estimate with a zero-spread indicator."""

    value: float
    degenerate: bool


def _qdens_grid(sample: SortedSample, p: np.ndarray, rule: BandwidthRule
                ) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized difference-quotient quantile density at levels ``p``."""
    h = rule.resolve(sample.n, p)
    lo = _kernels.hf8(sample.values, p - h)
    hi = _kernels.hf8(sample.values, p + h)
    q = (hi - lo) / (2.0 * h)
    degenerate = q <= 0.0
    q[degenerate] = 0.0
    return q, degenerate


def empirical_quantile_density(sample: SortedSample, p: float,
                               rule: BandwidthRule | None = None
                               ) -> QuantileDensity:
    """Estimate q(p) by a symmetric difference quotient of the quantile
    estimator.

    A window with zero spread (ties) yields value 0 with the degenerate
    flag set, rather than an error: constant data legitimately carry no
    quantile dispersion.
    """
    if sample.n < 3:
        raise InsufficientDataError(
            "quantile-density estimation needs n >= 3")
    if not 0.0 < p < 1.0:
        raise DomainError("p must lie in (0, 1)")
    rule = rule or BandwidthRule.automatic()
    q, degenerate = _qdens_grid(sample, np.array([p]), rule)
    return QuantileDensity(float(q[0]), bool(degenerate[0]))
