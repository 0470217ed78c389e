"""
Correlators package
Regularized vacuum field correlators with and without the mirror
"""
from correlators.wightman import (
    evaluate_correlator,
    wightman_reference,
    wightman_tensor,
    wightman_xx_cross,
    wightman_xx_same,
)

__all__ = [
    "evaluate_correlator",
    "wightman_reference",
    "wightman_tensor",
    "wightman_xx_cross",
    "wightman_xx_same",
]
