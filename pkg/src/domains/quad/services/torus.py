"""
Trapezoid quadrature on the unit torus T^n

    ∮_{T^n} f(z) ∏ dz_j/(2πi z_j) = (2π)^{−n} ∫ f(e^{iφ}) dφ

Nodes sit at φ_k = 2π(k + 1/2)/N. The grid is doubled from N0 until two
successive levels agree to tol. Values of one level are reduced with a fixed
pairwise tree, so chunked, threaded and serial evaluation agree bitwise.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from core.config import get_config
from core.errors import NonConvergenceError, PoleProximityError
from domains.quad.models.quadrature import PoleFamily, QuadratureResult, TorusIntegrand

logger = logging.getLogger(__name__)

# Points evaluated per chunk of axis 0
_CHUNK_POINTS = 1 << 16


def pairwise_sum(values: np.ndarray) -> complex:
    """Sum with a fixed balanced binary tree over the flattened array"""
    level = np.ascontiguousarray(values, dtype=np.complex128).reshape(-1)
    if level.size == 0:
        return 0j
    while level.size > 1:
        if level.size % 2:
            level = np.concatenate([level, np.zeros(1, dtype=np.complex128)])
        level = level[0::2] + level[1::2]
    return complex(level[0])


def torus_nodes(N: int) -> np.ndarray:
    """Offset nodes e^{2πi(k+1/2)/N}"""
    return np.exp(2j * np.pi * (np.arange(N) + 0.5) / N)


def screen_poles(f: TorusIntegrand, margin: Optional[float] = None) -> List[PoleFamily]:
    """
    Pole families with a lattice member on the wrong side of the unit circle
    or within margin of it
    """
    precision = get_config().precision
    margin = get_config().quadrature.screen_margin if margin is None else margin
    offending = []
    for family in f.poles:
        moduli = np.abs(family.members(f.p, f.q, precision.lattice_scan))
        if family.outward:
            bad = np.any(moduli < 1.0 + margin)
        else:
            bad = np.any(moduli > 1.0 - margin)
        if bad:
            offending.append(family)
    return offending


def _evaluate_rows(f: TorusIntegrand, nodes: np.ndarray, rows: slice) -> np.ndarray:
    n = f.dimension
    grids = []
    for axis in range(n):
        shape = [1] * n
        shape[axis] = -1
        points = nodes[rows] if axis == 0 else nodes
        grids.append(points.reshape(shape))
    shape = (rows.stop - rows.start,) + (nodes.size,) * (n - 1)
    return np.broadcast_to(np.asarray(f.evaluate(grids), dtype=np.complex128), shape)


def _evaluate_level(f: TorusIntegrand, N: int, workers: int) -> np.ndarray:
    nodes = torus_nodes(N)
    values = np.empty((N,) * f.dimension, dtype=np.complex128)
    rows_per_chunk = max(1, _CHUNK_POINTS // N ** (f.dimension - 1))
    chunks = [slice(start, min(start + rows_per_chunk, N)) for start in range(0, N, rows_per_chunk)]

    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [(rows, executor.submit(_evaluate_rows, f, nodes, rows)) for rows in chunks]
            for rows, future in futures:
                values[rows] = future.result()
    else:
        for rows in chunks:
            values[rows] = _evaluate_rows(f, nodes, rows)
    return values


def integrate_torus(
    f: TorusIntegrand,
    tol: Optional[float] = None,
    N0: Optional[int] = None,
    Nmax: Optional[int] = None,
    workers: Optional[int] = None,
    screen: bool = True,
) -> QuadratureResult:
    """
    Normalized torus integral (2π)^{−n} ∫ f dφ by grid doubling

    Raises:
        PoleProximityError: when screening finds a declared pole too close to the torus
        NonConvergenceError: when |I_{2N} − I_N| >= tol at Nmax points per dimension
    """
    quad_config = get_config().quadrature
    tol = quad_config.tol if tol is None else tol
    N = quad_config.n0 if N0 is None else N0
    Nmax = quad_config.nmax_for(f.dimension) if Nmax is None else Nmax
    workers = quad_config.workers if workers is None else workers

    if screen:
        offending = screen_poles(f)
        if offending:
            family = offending[0]
            raise PoleProximityError(
                f"{len(offending)} pole families of {f.label} reach the torus (first: {family.label or family.exponents})",
                location=family.anchor,
                bound=quad_config.screen_margin,
            )

    evaluations = N ** f.dimension
    previous = pairwise_sum(_evaluate_level(f, N, workers)) / evaluations
    history: List[float] = []
    while 2 * N <= Nmax:
        N *= 2
        count = N ** f.dimension
        current = pairwise_sum(_evaluate_level(f, N, workers)) / count
        evaluations += count
        err = abs(current - previous)
        history.append(err)
        logger.debug(f"{f.label}: N={N} value={current:.15g} err={err:.3e}")
        if err < tol:
            return QuadratureResult(value=current, err_est=err, N=N, evaluations=evaluations, history=history)
        previous = current

    raise NonConvergenceError(
        f"{f.label} did not converge to tol={tol:g} by N={N}", location=previous, bound=history[-1] if history else None
    )


def product_integrand(factors: Tuple[TorusIntegrand, ...], label: str = "product") -> TorusIntegrand:
    """f(z_1)·g(z_2)·… from one-dimensional integrands"""
    def evaluate(grids):
        value = 1.0 + 0.0j
        for factor, grid in zip(factors, grids):
            value = value * np.asarray(factor.evaluate([grid.reshape(-1)])).reshape(grid.shape)
        return value

    return TorusIntegrand(dimension=len(factors), evaluate=evaluate, label=label)
