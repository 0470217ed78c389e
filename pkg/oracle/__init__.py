"""
Oracle package
Independent numerical checks of every closed-form rate
"""
from oracle.fourier import ft_rate
from oracle.modesum import modesum_rate
from oracle.principal_value import pv_shift
from oracle.report import run_validation

__all__ = [
    "ft_rate",
    "modesum_rate",
    "pv_shift",
    "run_validation",
]
