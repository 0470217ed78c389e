"""
Commands package
Subcommands of the command-line front end
"""
from commands import dynamics_command, rates_command, sweep_command, validate_command
from commands.dynamics_command import cmd_dynamics
from commands.rates_command import cmd_rates
from commands.sweep_command import cmd_sweep
from commands.validate_command import cmd_validate

COMMAND_MODULES = (rates_command, sweep_command, dynamics_command, validate_command)

__all__ = [
    "COMMAND_MODULES",
    "cmd_dynamics",
    "cmd_rates",
    "cmd_sweep",
    "cmd_validate",
]
