"""
Optional numba acceleration for the elliptic gamma product kernel

The numpy path in domains.gamma is always available; this module only
decides whether the compiled loop can replace it.
"""

import cmath
import logging
from typing import Optional, Tuple

import numpy as np

from core.config import get_config

logger = logging.getLogger(__name__)

try:
    from numba import njit
    NUMBA_AVAILABLE = True
except ImportError:
    NUMBA_AVAILABLE = False
    logger.debug("numba not installed, using numpy kernels")


_compiled_kernel = None
_kernel_disabled = False


def _build_kernel():
    @njit(cache=False)
    def gamma_log_kernel(z, c, pq):
        n = z.shape[0]
        acc = np.empty(n, dtype=np.complex128)
        min_den = np.empty(n, dtype=np.float64)
        min_num = np.empty(n, dtype=np.float64)
        for i in range(n):
            zi = z[i]
            w = pq / zi
            s = 0j
            md = np.inf
            mn = np.inf
            for k in range(c.shape[0]):
                num = 1.0 - w * c[k]
                den = 1.0 - zi * c[k]
                an = abs(num)
                ad = abs(den)
                if an < mn:
                    mn = an
                if ad < md:
                    md = ad
                if an > 0.0 and ad > 0.0:
                    s += cmath.log(num) - cmath.log(den)
            acc[i] = s
            min_den[i] = md
            min_num[i] = mn
        return acc, min_den, min_num

    return gamma_log_kernel


def gamma_log_kernel(z: np.ndarray, c: np.ndarray, pq: complex) -> Optional[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """
    Compiled log-sum of the elliptic gamma factors over a flat argument array

    Returns None when numba is unavailable, disabled by configuration, or
    failed to compile; callers then use the numpy path.
    """
    global _compiled_kernel, _kernel_disabled

    if not NUMBA_AVAILABLE or _kernel_disabled or not get_config().accel.use_numba:
        return None

    try:
        if _compiled_kernel is None:
            _compiled_kernel = _build_kernel()
        return _compiled_kernel(
            np.ascontiguousarray(z, dtype=np.complex128),
            np.ascontiguousarray(c, dtype=np.complex128),
            complex(pq),
        )
    except Exception as e:
        _kernel_disabled = True
        logger.warning(f"numba kernel unavailable ({e}), falling back to numpy")
        return None
