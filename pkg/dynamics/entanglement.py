"""
Entanglement and Coherence Measures

Wootters concurrence of a general two-atom density matrix, its X-state
shortcut for single-excitation states, and the l1-norm of coherence.
"""

import numpy as np
import structlog

from core.exceptions import InvalidStateError
from schemas.results import SingleExcitationState, TwoAtomDensityMatrix

logger = structlog.get_logger(__name__)

# sigma_y (x) sigma_y in the basis |ee>, |eg>, |ge>, |gg>
SPIN_FLIP = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)

EIGENVALUE_TOLERANCE = 1e-10
RANK_CUTOFF = 1e-13


def spin_flipped(rho: TwoAtomDensityMatrix) -> np.ndarray:
    """rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y)"""
    return SPIN_FLIP @ rho.matrix.conj() @ SPIN_FLIP


def _check_product_spectrum(rho: TwoAtomDensityMatrix) -> np.ndarray:
    """Eigenvalues of rho rho~, clamped at zero; invalid inputs raise"""
    eigenvalues = np.linalg.eigvals(rho.matrix @ spin_flipped(rho))
    if np.any(np.abs(eigenvalues.imag) > EIGENVALUE_TOLERANCE) or np.any(
        eigenvalues.real < -EIGENVALUE_TOLERANCE
    ):
        logger.debug("invalid_product_spectrum", eigenvalues=eigenvalues.tolist())
        raise InvalidStateError("rho rho~ has eigenvalues off the non-negative real axis")
    return np.clip(eigenvalues.real, 0.0, None)


def _root_spectrum(rho: TwoAtomDensityMatrix) -> np.ndarray:
    """
    Square roots of the eigenvalues of rho rho~, largest first.

    With rho = W W^dagger they are the singular values of the symmetric
    matrix W^T (sigma_y x sigma_y) W, which carry no square-root
    amplification of rounding noise. Eigenvalues of rho below RANK_CUTOFF
    are treated as zero.
    """
    weights, vectors = np.linalg.eigh(rho.matrix)
    keep = weights > RANK_CUTOFF
    factor = vectors[:, keep] * np.sqrt(weights[keep])
    roots = np.zeros(4)
    if factor.shape[1]:
        singular = np.linalg.svd(factor.T @ SPIN_FLIP @ factor, compute_uv=False)
        roots[: singular.size] = singular
    return np.sort(roots)[::-1]


def concurrence_wootters(rho: TwoAtomDensityMatrix) -> float:
    """
    Wootters concurrence max(0, l1 - l2 - l3 - l4).

    Args:
        rho: Two-atom density matrix

    Returns:
        float: Concurrence in [0, 1]

    Raises:
        InvalidStateError: rho rho~ has an eigenvalue with real part below
            -1e-10 or imaginary part above 1e-10
    """
    _check_product_spectrum(rho)
    roots = _root_spectrum(rho)
    return float(max(0.0, roots[0] - roots[1] - roots[2] - roots[3]))


def concurrence_xstate(state: SingleExcitationState) -> float:
    """2 |b1 b2*| for a single-excitation state"""
    return float(2.0 * abs(state.b1 * state.b2.conjugate()))


def l1_coherence(rho: TwoAtomDensityMatrix) -> float:
    """Sum of the magnitudes of all off-diagonal entries"""
    magnitudes = np.abs(rho.matrix)
    return float(magnitudes.sum() - np.trace(magnitudes))
