"""
Dipole Kernel Building Blocks

Every closed-form rate is assembled from three radiation kernels:

    sinc(x)       = sin x / x
    kernel_a(x)   = 3 (sin x - x cos x) / x^3          (= 3 j1(x) / x)
    kernel_b(x)   = 3 ((x^2 - 1) sin x + x cos x) / (2 x^3)

together with the boundary complement 1 - kernel_b(x). Each loses its
significant digits to cancellation as x -> 0, so arguments strictly below
SERIES_THRESHOLD are evaluated from Maclaurin series carried through x^8.
The complement subtracts a quantity near 1 on top of that and keeps
cancelling well past SERIES_THRESHOLD; it has its own window strictly below
COMPLEMENT_THRESHOLD with the series carried through x^16.
All functions accept scalars or numpy arrays.
"""

from math import factorial
from typing import Callable, Union

import numpy as np
from numpy.polynomial import polynomial as P

ArrayLike = Union[float, np.ndarray]

SERIES_THRESHOLD = 1e-2
COMPLEMENT_THRESHOLD = 0.5


# ============================================================================
# MACLAURIN COEFFICIENTS (in powers of x^2)
# ============================================================================
SINC_COEFFS = np.array([(-1) ** n / factorial(2 * n + 1) for n in range(5)])
KERNEL_A_COEFFS = np.array([(-1) ** (n + 1) * 6 * n / factorial(2 * n + 1) for n in range(1, 6)])
KERNEL_B_COEFFS = np.array([(-1) ** (n + 1) * 6 * n * n / factorial(2 * n + 1) for n in range(1, 6)])
# 1 - kernel_b starts at x^2: coefficient of x^(2n-2) for n = 2..9
COMPLEMENT_B_COEFFS = np.array([0.0] + [(-1) ** n * 6 * n * n / factorial(2 * n + 1) for n in range(2, 10)])


def uses_series(x: ArrayLike) -> Union[bool, np.ndarray]:
    """True where the series path is taken (strictly below threshold)"""
    return np.asarray(x) < SERIES_THRESHOLD


def uses_complement_series(x: ArrayLike) -> Union[bool, np.ndarray]:
    return np.asarray(x) < COMPLEMENT_THRESHOLD


def _switch(x: ArrayLike, series: Callable, closed: Callable, threshold: float = SERIES_THRESHOLD) -> ArrayLike:
    arr = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        out = np.where(arr < threshold, series(arr), closed(arr))
    return float(out) if out.ndim == 0 else out


# ============================================================================
# SERIES PATHS
# ============================================================================
def sinc_series(x: ArrayLike) -> ArrayLike:
    return P.polyval(np.square(x), SINC_COEFFS)


def kernel_a_series(x: ArrayLike) -> ArrayLike:
    return P.polyval(np.square(x), KERNEL_A_COEFFS)


def kernel_b_series(x: ArrayLike) -> ArrayLike:
    return P.polyval(np.square(x), KERNEL_B_COEFFS)


def complement_b_series(x: ArrayLike) -> ArrayLike:
    return P.polyval(np.square(x), COMPLEMENT_B_COEFFS)


# ============================================================================
# CLOSED-FORM PATHS
# ============================================================================
def sinc_closed(x: ArrayLike) -> ArrayLike:
    return np.sin(x) / x


def kernel_a_closed(x: ArrayLike) -> ArrayLike:
    return 3.0 * (np.sin(x) - x * np.cos(x)) / x**3


def kernel_b_closed(x: ArrayLike) -> ArrayLike:
    return 3.0 * ((x * x - 1.0) * np.sin(x) + x * np.cos(x)) / (2.0 * x**3)


def complement_b_closed(x: ArrayLike) -> ArrayLike:
    return 1.0 - kernel_b_closed(x)


# ============================================================================
# STABLE KERNELS
# ============================================================================
def sinc(x: ArrayLike) -> ArrayLike:
    return _switch(x, sinc_series, sinc_closed)


def kernel_a(x: ArrayLike) -> ArrayLike:
    """Longitudinal kernel 3 j1(x)/x; equals 1 at x = 0"""
    return _switch(x, kernel_a_series, kernel_a_closed)


def kernel_b(x: ArrayLike) -> ArrayLike:
    """Transverse kernel (3/2) sinc(x) - kernel_a(x)/2; equals 1 at x = 0"""
    return _switch(x, kernel_b_series, kernel_b_closed)


def complement_b(x: ArrayLike) -> ArrayLike:
    """1 - kernel_b(x), which behaves as x^2/5 near zero"""
    return _switch(x, complement_b_series, complement_b_closed, COMPLEMENT_THRESHOLD)


# ============================================================================
# HILBERT-CONJUGATE KERNELS (sin -> -cos, cos -> sin)
# ============================================================================
def kernel_a_conjugate(x: ArrayLike) -> ArrayLike:
    return -3.0 * (np.cos(x) + x * np.sin(x)) / x**3


def kernel_b_conjugate(x: ArrayLike) -> ArrayLike:
    return 3.0 * ((1.0 - x * x) * np.cos(x) + x * np.sin(x)) / (2.0 * x**3)
