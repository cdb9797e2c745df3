"""Pure-numpy implementations of the hot kernels.

Mirror of the compiled ``_speedups`` module; used as the import-time
fallback and for cross-checking the extension.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"


def hf8(values: np.ndarray, ps: np.ndarray) -> np.ndarray:
    """Order-statistic quantile with plotting position (n + 1/3) p + 1/3.

    ``values`` must be sorted ascending.  The fractional index is clamped
    to [1, n], which pins the estimate to the extreme order statistics near
    the boundaries.
    """
    values = np.ascontiguousarray(values, dtype=np.float64)
    ps = np.asarray(ps, dtype=np.float64)
    n = values.size
    h = (n + 1.0 / 3.0) * ps + 1.0 / 3.0
    h = np.clip(h, 1.0, float(n))
    k = np.floor(h).astype(np.intp)
    g = h - k
    lo = values[k - 1]
    hi = values[np.minimum(k, n - 1)]
    return lo + g * (hi - lo)


def sigma_matrix_sum(half_p: np.ndarray, xa: np.ndarray, xb: np.ndarray,
                     qa: np.ndarray, qb: np.ndarray) -> float:
    """Sum of the full J x J asymptotic covariance matrix of ratio ordinates.

    ``half_p`` holds the lower tail levels p_j / 2 in increasing order;
    ``xa``/``xb`` the quantiles at p_j/2 and 1 - p_j/2; ``qa``/``qb`` the
    quantile densities there.  Entry (i, j), i <= j, is the large-sample
    covariance of the ratio estimates at grid levels p_i <= p_j.
    """
    half_p = np.asarray(half_p, dtype=np.float64)
    xa = np.asarray(xa, dtype=np.float64)
    xb = np.asarray(xb, dtype=np.float64)
    qa = np.asarray(qa, dtype=np.float64)
    qb = np.asarray(qb, dtype=np.float64)
    r = xa / xb
    diag = (half_p * (1.0 - half_p) * (qa**2 + r**2 * qb**2)
            - 2.0 * half_p**2 * r * qa * qb) / xb**2
    iu, ju = np.triu_indices(half_p.size, k=1)
    hp_i, hp_j = half_p[iu], half_p[ju]
    off = (hp_i * (1.0 - hp_j) * (qa[iu] * qa[ju] + r[iu] * r[ju] * qb[iu] * qb[ju])
           - hp_i * hp_j * (r[ju] * qa[iu] * qb[ju] + r[iu] * qb[iu] * qa[ju])) \
        / (xb[iu] * xb[ju])
    return float(diag.sum() + 2.0 * off.sum())


def gini_coeff(values: np.ndarray) -> float:
    """Order-statistic Gini estimate 2 sum(i x_(i)) / (n^2 xbar) - (n+1)/n."""
    values = np.asarray(values, dtype=np.float64)
    n = values.size
    i = np.arange(1, n + 1, dtype=np.float64)
    total = values.sum()
    return float(2.0 * np.dot(i, values) / (n * total) - (n + 1.0) / n)


def gini_zsum(values: np.ndarray, g: float) -> float:
    """Centered sum of squares of the Gini influence terms.

    Z_i = -(g + 1) x_(i) + ((2i - 1)/n) x_(i) - (2/n) prefix_i, where
    prefix_i is the cumulative sum through i.
    """
    values = np.asarray(values, dtype=np.float64)
    n = values.size
    i = np.arange(1, n + 1, dtype=np.float64)
    prefix = np.cumsum(values)
    z = (-(g + 1.0) + (2.0 * i - 1.0) / n) * values - (2.0 / n) * prefix
    z -= z.mean()
    return float(np.dot(z, z))
