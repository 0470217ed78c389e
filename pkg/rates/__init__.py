"""
Rates package
Closed-form collective decay rates and dipole-dipole shift
"""
from rates.closed_form import (
    collective_rates,
    cross_rate_values,
    dipole_shift,
    gamma11,
    gamma12,
    quantity_values,
    rate_set_physical,
    self_rate_values,
    shift_values,
)
from rates.series import SERIES_THRESHOLD

__all__ = [
    "SERIES_THRESHOLD",
    "collective_rates",
    "cross_rate_values",
    "dipole_shift",
    "gamma11",
    "gamma12",
    "quantity_values",
    "rate_set_physical",
    "self_rate_values",
    "shift_values",
]
