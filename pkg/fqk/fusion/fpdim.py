#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
import math
from typing import Tuple, Union

import equinox as eqx
import jax
import numpy as np
from jax import numpy as jnp

from fqk.errors import FPdimConvergenceError, InvalidDimension
from fqk.fusion.ring import FusionRing, RingElement
from fqk.utils.misc import get_tol

POWER_TOL = 1e-10
POWER_MAX_ITER = 10**6

CoxeterLabel = Union[int, float]


class FPVector(eqx.Module):
    """
    Frobenius-Perron dimensions of the simple objects of a fusion ring, ``dims[unit] = 1``.
    """

    dims: np.ndarray
    tol: float

    def __getitem__(self, i):
        return self.dims[i]


def _power_iteration(A: np.ndarray, tol: float = POWER_TOL, max_iter: int = POWER_MAX_ITER) -> Tuple[np.ndarray, float]:
    """
    Perron eigenvector and eigenvalue of a non-negative matrix.

    Iterates on ``A + I``: the shift keeps the iteration aperiodic for bipartite or cyclic supports (McKay graphs
    often are) and for the zero matrix, without moving the eigenvector.

    :param A: square non-negative matrix
    :param tol: sup-norm change between iterates at which to stop
    :param max_iter:
    :return: (unit-norm eigenvector, eigenvalue of ``A``)
    """
    A = jnp.asarray(np.asarray(A, dtype=np.float64))
    n = A.shape[0]
    shifted = A + jnp.eye(n)

    def cond_fn(state):
        _, err, it = state
        return jnp.logical_and(err > tol, it < max_iter)

    def body_fn(state):
        x, _, it = state
        y = shifted @ x
        y = y / jnp.linalg.norm(y)
        return y, jnp.max(jnp.abs(y - x)), it + 1

    x0 = jnp.ones(n) / jnp.sqrt(n)
    x, err, it = jax.lax.while_loop(cond_fn, body_fn, (x0, jnp.array(jnp.inf), jnp.array(0)))

    if int(it) >= max_iter:
        raise FPdimConvergenceError(f"power iteration did not converge in {max_iter} steps (last change {float(err)})")

    x = np.asarray(x)
    eigenvalue = float(x @ (np.asarray(A) @ x) / (x @ x))
    return x, eigenvalue


def perron_eigenvalue(matrix) -> float:
    """Frobenius-Perron eigenvalue of a non-negative integer matrix"""
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.size == 0:
        return 0.0
    return _power_iteration(matrix)[1]


def perron_vector(matrix) -> np.ndarray:
    """Perron eigenvector, scaled so that its smallest positive entry is 1"""
    x, _ = _power_iteration(np.asarray(matrix, dtype=np.float64))
    x = np.abs(x)
    return x / x[x > POWER_TOL].min()


def fpdim(ring: FusionRing, tol: float = None) -> FPVector:
    """
    Computes the unique positive common eigenvector of the left multiplication matrices, by power iteration on their
    sum, then reads off the eigenvalue of each simple.

    Args:
        ring: a valid fusion ring
        tol: tolerance carried by the returned vector (``FQK_TOL`` by default)

    Returns:
        ``FPVector`` with ``dims[unit] = 1``

    """
    mats = [np.asarray(ring.left_mult(i), dtype=np.float64) for i in range(ring.rank)]
    d, _ = _power_iteration(sum(mats))
    d = d / d[ring.unit]
    dims = np.array([float(d @ (m @ d) / (d @ d)) for m in mats])
    return FPVector(dims=dims, tol=get_tol(tol))


def fpdim_of(ring: FusionRing, x: RingElement, fp: FPVector = None) -> float:
    if fp is None:
        fp = fpdim(ring)
    return float(np.dot(np.asarray(x, dtype=np.float64), fp.dims))


def angle_label(f: float, tol: float = None) -> CoxeterLabel:
    """
    Reads ``f = 2cos(pi/m)`` back as ``m``.

    :param f: a Frobenius-Perron dimension, non-negative
    :param tol:
    :return: ``m >= 2`` or ``math.inf`` when ``f >= 2``
    """
    tol = get_tol(tol)
    if f < -tol:
        raise InvalidDimension(f"negative dimension {f}")
    if f >= 2.0 - tol:
        return math.inf
    if abs(f) < tol:
        return 2
    m = int(round(math.pi / math.acos(f / 2.0)))
    if abs(2.0 * math.cos(math.pi / m) - f) >= tol:
        raise InvalidDimension(f"{f} is not 2cos(pi/m) for any integer m (nearest m = {m})")
    return m


def two_cos(m: CoxeterLabel) -> float:
    """Inverse of ``angle_label``"""
    if m == math.inf:
        return 2.0
    return 2.0 * math.cos(math.pi / m)
