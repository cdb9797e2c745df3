"""Self-contained special functions: erfc, normal CDF/quantile, regularized
incomplete beta/gamma functions and their inverses.

Everything here is vectorized over the main argument; distribution shape
parameters are scalars.  Accuracy targets (checked in the test suite against
independent references): ~1e-15 relative for erfc/normal, <=1e-12 relative
for the incomplete-function inverses away from the extreme denormal range.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "erfc",
    "norm_cdf",
    "norm_pdf",
    "norm_ppf",
    "betainc",
    "betainc_inv",
    "gammainc",
    "gammainc_inv",
]

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# Cody (1969) rational coefficients for erf/erfc, double precision.
_ERF_A = np.array(
    [3.16112374387056560e0, 1.13864154151050156e2, 3.77485237685302021e2,
     3.20937758913846947e3, 1.85777706184603153e-1])
_ERF_B = np.array(
    [2.36012909523441209e1, 2.44024637934444173e2, 1.28261652607737228e3,
     2.84423683343917062e3])
_ERF_C = np.array(
    [5.64188496988670089e-1, 8.88314979438837594e0, 6.61191906371416295e1,
     2.98635138197400131e2, 8.81952221241769090e2, 1.71204761263407058e3,
     2.05107837782607147e3, 1.23033935479799725e3, 2.15311535474403846e-8])
_ERF_D = np.array(
    [1.57449261107098347e1, 1.17693950891312499e2, 5.37181101862009858e2,
     1.62138957456669019e3, 3.29079923573345963e3, 4.36261909014324716e3,
     3.43936767414372164e3, 1.23033935480374942e3])
_ERF_P = np.array(
    [3.05326634961232344e-1, 3.60344899949804439e-1, 1.25781726111229246e-1,
     1.60837851487422766e-2, 6.58749161529837803e-4, 1.63153871373020978e-2])
_ERF_Q = np.array(
    [2.56852019228982242e0, 1.87295284992346047e0, 5.27905102951428412e-1,
     6.05183413124413191e-2, 2.33520497626869185e-3])


def _erfc_nonneg(y: np.ndarray) -> np.ndarray:
    """erfc(y) for y >= 0 via Cody's three-region rational approximation."""
    out = np.empty_like(y)

    small = y <= 0.46875
    if np.any(small):
        z = y[small] ** 2
        num = _ERF_A[4] * z
        den = z.copy()
        for i in range(3):
            num = (num + _ERF_A[i]) * z
            den = (den + _ERF_B[i]) * z
        out[small] = 1.0 - y[small] * (num + _ERF_A[3]) / (den + _ERF_B[3])

    mid = (y > 0.46875) & (y <= 4.0)
    if np.any(mid):
        ym = y[mid]
        num = _ERF_C[8] * ym
        den = ym.copy()
        for i in range(7):
            num = (num + _ERF_C[i]) * ym
            den = (den + _ERF_D[i]) * ym
        res = (num + _ERF_C[7]) / (den + _ERF_D[7])
        ysq = np.trunc(ym * 16.0) / 16.0
        out[mid] = np.exp(-ysq * ysq) * np.exp(-(ym - ysq) * (ym + ysq)) * res

    big = y > 4.0
    if np.any(big):
        yb = y[big]
        z = 1.0 / (yb * yb)
        num = _ERF_P[5] * z
        den = z.copy()
        for i in range(4):
            num = (num + _ERF_P[i]) * z
            den = (den + _ERF_Q[i]) * z
        res = z * (num + _ERF_P[4]) / (den + _ERF_Q[4])
        res = (0.564189583547756287 - res) / yb
        ysq = np.trunc(yb * 16.0) / 16.0
        with np.errstate(under="ignore"):
            out[big] = np.exp(-ysq * ysq) * np.exp(-(yb - ysq) * (yb + ysq)) * res
    return out


def erfc(x):
    """Complementary error function, elementwise."""
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    xv = np.atleast_1d(x)
    out = _erfc_nonneg(np.abs(xv))
    neg = xv < 0.0
    out[neg] = 2.0 - out[neg]
    return float(out[0]) if scalar else out


def norm_cdf(x):
    """Standard normal CDF."""
    x = np.asarray(x, dtype=float)
    return 0.5 * erfc(-x / _SQRT2)


def norm_pdf(x):
    """Standard normal density."""
    x = np.asarray(x, dtype=float)
    with np.errstate(under="ignore"):
        return _INV_SQRT_2PI * np.exp(-0.5 * x * x)


# Wichura's AS 241 (PPND16) coefficients, ascending order.
_PPND_A = [3.3871328727963666080e0, 1.3314166789178437745e2,
           1.9715909503065514427e3, 1.3731693765509461125e4,
           4.5921953931549871457e4, 6.7265770927008700853e4,
           3.3430575583588128105e4, 2.5090809287301226727e3]
_PPND_B = [1.0, 4.2313330701600911252e1, 6.8718700749205790830e2,
           5.3941960214247511077e3, 2.1213794301586595867e4,
           3.9307895800092710610e4, 2.8729085735721942674e4,
           5.2264952788528545610e3]
_PPND_C = [1.42343711074968357734e0, 4.63033784615654529590e0,
           5.76949722146069140550e0, 3.64784832476320460504e0,
           1.27045825245236838258e0, 2.41780725177450611770e-1,
           2.27238449892691845833e-2, 7.74545014278341407640e-4]
_PPND_D = [1.0, 2.05319162663775882187e0, 1.67638483018380384940e0,
           6.89767334985100004550e-1, 1.48103976427480074590e-1,
           1.51986665636164571966e-2, 5.47593808499534494600e-4,
           1.05075007164441684324e-9]
_PPND_E = [6.65790464350110377720e0, 5.46378491116411436990e0,
           1.78482653991729133580e0, 2.96560571828504891230e-1,
           2.65321895265761230930e-2, 1.24266094738807843860e-3,
           2.71155556874348757815e-5, 2.01033439929228813265e-7]
_PPND_F = [1.0, 5.99832206555887937690e-1, 1.36929880922735805310e-1,
           1.48753612908506148525e-2, 7.86869131145613259100e-4,
           1.84631831751005468180e-5, 1.42151175831644588870e-7,
           2.04426310338993978564e-15]


def _ratpoly(coef_num, coef_den, r):
    num = np.zeros_like(r)
    den = np.zeros_like(r)
    for c in reversed(coef_num):
        num = num * r + c
    for c in reversed(coef_den):
        den = den * r + c
    return num / den


def norm_ppf(p):
    """Standard normal quantile (inverse CDF).

    Rational approximation (AS 241) refined by one Newton step; relative
    error well below 1e-12 on (0, 1).
    """
    p = np.asarray(p, dtype=float)
    scalar = p.ndim == 0
    pv = np.atleast_1d(p).copy()
    if np.any((pv <= 0.0) | (pv >= 1.0)):
        raise ValueError("norm_ppf requires 0 < p < 1")

    z = np.empty_like(pv)
    q = pv - 0.5
    central = np.abs(q) <= 0.425
    if np.any(central):
        r = 0.180625 - q[central] ** 2
        z[central] = q[central] * _ratpoly(_PPND_A, _PPND_B, r)
    if np.any(~central):
        qt = q[~central]
        pt = pv[~central]
        r = np.where(qt < 0.0, pt, 1.0 - pt)
        r = np.sqrt(-np.log(r))
        zt = np.empty_like(r)
        near = r <= 5.0
        zt[near] = _ratpoly(_PPND_C, _PPND_D, r[near] - 1.6)
        zt[~near] = _ratpoly(_PPND_E, _PPND_F, r[~near] - 5.0)
        z[~central] = np.where(qt < 0.0, -zt, zt)

    # Newton polish where the density is representable.
    pdf = norm_pdf(z)
    safe = pdf > 1e-290
    if np.any(safe):
        z[safe] -= (norm_cdf(z[safe]) - pv[safe]) / pdf[safe]
    return float(z[0]) if scalar else z


def _betacf(a: float, b: float, x: np.ndarray) -> np.ndarray:
    """Continued fraction for the incomplete beta (modified Lentz).

    Converged elements are dropped from the working set so mixed inputs do
    not pay for the slowest one.
    """
    FPMIN = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    out = np.empty_like(x)
    idx = np.arange(x.size)
    c = np.ones_like(x)
    d = 1.0 - qab * x / qap
    d[np.abs(d) < FPMIN] = FPMIN
    d = 1.0 / d
    h = d.copy()
    for m in range(1, 300):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        d[np.abs(d) < FPMIN] = FPMIN
        c = 1.0 + aa / c
        c[np.abs(c) < FPMIN] = FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        d[np.abs(d) < FPMIN] = FPMIN
        c = 1.0 + aa / c
        c[np.abs(c) < FPMIN] = FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        conv = np.abs(delta - 1.0) < 1e-16
        if np.all(conv):
            break
        if np.any(conv):
            out[idx[conv]] = h[conv]
            keep = ~conv
            idx, x, c, d, h = idx[keep], x[keep], c[keep], d[keep], h[keep]
    out[idx] = h
    return out


def _betainc_raw(a: float, b: float, x: np.ndarray) -> np.ndarray:
    """Regularized incomplete beta on the fast-converging branch only."""
    lbeta = math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
    with np.errstate(divide="ignore", invalid="ignore", under="ignore"):
        front = np.exp(lbeta + a * np.log(x) + b * np.log1p(-x))
    out = front * _betacf(a, b, x) / a
    out[x == 0.0] = 0.0
    return out


def betainc(a: float, b: float, x):
    """Regularized incomplete beta function I_x(a, b)."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError("betainc requires a > 0 and b > 0")
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    xv = np.atleast_1d(x)
    if np.any((xv < 0.0) | (xv > 1.0)):
        raise ValueError("betainc requires 0 <= x <= 1")
    out = np.empty_like(xv)
    lower = xv < (a + 1.0) / (a + b + 2.0)
    if np.any(lower):
        out[lower] = _betainc_raw(a, b, xv[lower])
    if np.any(~lower):
        out[~lower] = 1.0 - _betainc_raw(b, a, 1.0 - xv[~lower])
    np.clip(out, 0.0, 1.0, out=out)
    return float(out[0]) if scalar else out


def _beta_logpdf_const(a: float, b: float) -> float:
    return math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)


def _bracketed_newton(fwd, logpdf, p, x0, lo0, hi0, max_iter=110):
    """Solve fwd(x) = p elementwise by Newton iteration inside a bracket.

    ``fwd`` is monotone increasing; ``logpdf`` is log of its derivative.
    Elements whose upper bracket is +inf grow it by doubling.  Converged
    elements are dropped from the working set.
    """
    x = x0.copy()
    lo = lo0.copy()
    hi = hi0.copy()
    idx = np.arange(x.size)
    for _ in range(max_iter):
        fx = fwd(x) - p[idx]
        lo = np.where(fx < 0.0, x, lo)
        hi = np.where(fx > 0.0, x, hi)
        with np.errstate(divide="ignore", under="ignore", over="ignore"):
            step = fx * np.exp(-logpdf(x))
        xn = x - step
        bad = ~np.isfinite(xn) | (xn < lo) | (xn > hi)
        if np.any(bad):
            fallback = np.where(np.isfinite(hi), 0.5 * (lo + hi), 2.0 * x)
            xn[bad] = fallback[bad]
        conv = (fx == 0.0) | (np.abs(xn - x) <= 1e-15 * np.abs(xn))
        x = xn
        if np.all(conv):
            break
        keep = ~conv
        x0[idx[conv]] = x[conv]
        idx, x, lo, hi = idx[keep], x[keep], lo[keep], hi[keep]
    x0[idx] = x
    return x0


def betainc_inv(a: float, b: float, p):
    """Inverse of the regularized incomplete beta function in x."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError("betainc_inv requires a > 0 and b > 0")
    p = np.asarray(p, dtype=float)
    scalar = p.ndim == 0
    pv = np.atleast_1d(p)
    if np.any((pv < 0.0) | (pv > 1.0)):
        raise ValueError("betainc_inv requires 0 <= p <= 1")

    x = np.empty_like(pv)
    # Initial guess (Numerical-Recipes style: normal approximation for
    # a, b >= 1, tail power-law inversion otherwise).
    if a >= 1.0 and b >= 1.0:
        inner = (pv > 0.0) & (pv < 1.0)
        w = np.zeros_like(pv)
        if np.any(inner):
            w[inner] = norm_ppf(pv[inner])
        al = (w * w - 3.0) / 6.0
        h = 2.0 / (1.0 / (2.0 * a - 1.0) + 1.0 / (2.0 * b - 1.0))
        ww = (w * np.sqrt(al + h) / h
              - (1.0 / (2.0 * b - 1.0) - 1.0 / (2.0 * a - 1.0))
              * (al + 5.0 / 6.0 - 2.0 / (3.0 * h)))
        x = a / (a + np.exp(2.0 * ww) * b)
    else:
        lna = math.log(a / (a + b))
        lnb = math.log(b / (a + b))
        t = math.exp(a * lna) / a
        u = math.exp(b * lnb) / b
        w = t + u
        with np.errstate(divide="ignore", under="ignore", over="ignore"):
            x = np.where(pv < t / w,
                         np.exp((np.log(a * w) + np.log(pv)) / a),
                         1.0 - np.exp((np.log(b * w) + np.log1p(-pv)) / b))
    np.clip(x, 1e-300, 1.0 - 1e-16, out=x)

    lbeta = _beta_logpdf_const(a, b)
    a1, b1 = a - 1.0, b - 1.0

    def logpdf(xx):
        with np.errstate(divide="ignore", under="ignore", over="ignore"):
            return lbeta + a1 * np.log(xx) + b1 * np.log1p(-xx)

    x = _bracketed_newton(lambda xx: betainc(a, b, xx), logpdf, pv, x,
                          np.zeros_like(x), np.ones_like(x))
    x[pv == 0.0] = 0.0
    x[pv == 1.0] = 1.0
    return float(x[0]) if scalar else x


def _gamma_p_series(s: float, x: np.ndarray) -> np.ndarray:
    """Lower regularized incomplete gamma by series (for x < s + 1)."""
    out = np.zeros_like(x)
    idx = np.flatnonzero(x > 0.0)
    xp = x[idx]
    total_out = np.empty_like(x)
    ap = np.full_like(xp, s)
    term = np.full_like(xp, 1.0 / s)
    total = term.copy()
    for _ in range(500):
        ap += 1.0
        term *= xp / ap
        total += term
        conv = term < np.abs(total) * 1e-17
        if np.all(conv):
            break
        if np.any(conv):
            total_out[idx[conv]] = total[conv]
            keep = ~conv
            idx, xp, ap, term, total = (idx[keep], xp[keep], ap[keep],
                                        term[keep], total[keep])
    total_out[idx] = total
    pos = x > 0.0
    with np.errstate(under="ignore"):
        out[pos] = total_out[pos] * np.exp(
            -x[pos] + s * np.log(x[pos]) - math.lgamma(s))
    return out


def _gamma_q_contfrac(s: float, x: np.ndarray) -> np.ndarray:
    """Upper regularized incomplete gamma by continued fraction (x >= s + 1)."""
    FPMIN = 1e-300
    hout = np.empty_like(x)
    idx = np.arange(x.size)
    xa = x
    b = xa + 1.0 - s
    c = np.full_like(xa, 1.0 / FPMIN)
    d = 1.0 / b
    h = d.copy()
    for i in range(1, 500):
        an = -i * (i - s)
        b = b + 2.0
        d = an * d + b
        d[np.abs(d) < FPMIN] = FPMIN
        c = b + an / c
        c[np.abs(c) < FPMIN] = FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        conv = np.abs(delta - 1.0) < 1e-16
        if np.all(conv):
            break
        if np.any(conv):
            hout[idx[conv]] = h[conv]
            keep = ~conv
            idx, xa, b, c, d, h = (idx[keep], xa[keep], b[keep], c[keep],
                                   d[keep], h[keep])
    hout[idx] = h
    with np.errstate(under="ignore"):
        return hout * np.exp(-x + s * np.log(x) - math.lgamma(s))


def gammainc(s: float, x):
    """Lower regularized incomplete gamma function P(s, x)."""
    if s <= 0.0:
        raise ValueError("gammainc requires s > 0")
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    xv = np.atleast_1d(x)
    if np.any(xv < 0.0):
        raise ValueError("gammainc requires x >= 0")
    out = np.empty_like(xv)
    series = xv < s + 1.0
    if np.any(series):
        out[series] = _gamma_p_series(s, xv[series])
    if np.any(~series):
        out[~series] = 1.0 - _gamma_q_contfrac(s, xv[~series])
    np.clip(out, 0.0, 1.0, out=out)
    return float(out[0]) if scalar else out


def gammainc_inv(s: float, p):
    """Inverse of P(s, x) in x."""
    if s <= 0.0:
        raise ValueError("gammainc_inv requires s > 0")
    p = np.asarray(p, dtype=float)
    scalar = p.ndim == 0
    pv = np.atleast_1d(p)
    if np.any((pv < 0.0) | (pv >= 1.0)):
        raise ValueError("gammainc_inv requires 0 <= p < 1")

    # Initial guess: Wilson-Hilferty for s > 1, small-shape power law otherwise.
    x = np.empty_like(pv)
    inner = (pv > 0.0) & (pv < 1.0)
    if s > 1.0:
        z = np.zeros_like(pv)
        if np.any(inner):
            z[inner] = norm_ppf(pv[inner])
        t = 1.0 - 1.0 / (9.0 * s) + z * math.sqrt(1.0 / (9.0 * s))
        x = s * t ** 3
        x = np.maximum(x, 1e-3)
    else:
        t = 1.0 - s * (0.253 + 0.12 * s)
        with np.errstate(divide="ignore"):
            x = np.where(pv < t,
                         np.exp((np.log(pv) - math.log(t)) / s),
                         1.0 - np.log1p(-(pv - t) / (1.0 - t)))
        x = np.maximum(x, 1e-300)

    gln = math.lgamma(s)
    s1 = s - 1.0

    def logpdf(xx):
        with np.errstate(divide="ignore", under="ignore", over="ignore"):
            return s1 * np.log(xx) - xx - gln

    x = _bracketed_newton(lambda xx: gammainc(s, xx), logpdf, pv, x,
                          np.zeros_like(x), np.full_like(x, np.inf))
    x[pv == 0.0] = 0.0
    return float(x[0]) if scalar else x
