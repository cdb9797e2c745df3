"""Kernel backend selection.

The compiled Cython extension is used when available; the pure-numpy
implementation is the fallback.  Set ``QRINEQ_BACKEND=pure`` (or ``ext``)
to force a choice; ``ext`` raises if the extension is missing.
"""

import os

from . import _pure

_requested = os.environ.get("QRINEQ_BACKEND", "auto").strip().lower()

if _requested in ("auto", "", "ext", "speedups"):
    try:
        from . import _speedups as _impl
        BACKEND = "ext"
    except ImportError:
        if _requested in ("ext", "speedups"):
            raise ImportError(
                "QRINEQ_BACKEND=ext requested but the compiled extension "
                "is not available") from None
        _impl = _pure
        BACKEND = "pure"
elif _requested in ("pure", "python"):
    _impl = _pure
    BACKEND = "pure"
else:
    raise ValueError(f"unrecognized QRINEQ_BACKEND value: {_requested!r}")

hf8 = _impl.hf8
sigma_matrix_sum = _impl.sigma_matrix_sum
gini_coeff = _impl.gini_coeff
gini_zsum = _impl.gini_zsum

__all__ = ["BACKEND", "hf8", "sigma_matrix_sum", "gini_coeff", "gini_zsum"]
