"""Size limits that keep every computation at desk scale.

Defaults can be overridden with ``LATTICE_CUTS_CAPS=<lattice_cap>,<oracle_cap>``.
"""
import os
from dataclasses import dataclass

ENV_VAR = "LATTICE_CUTS_CAPS"
DEFAULT_LATTICE_CAP = 64
DEFAULT_ORACLE_CAP = 10**7


@dataclass(frozen=True)
class Caps:
    lattice_cap: int = DEFAULT_LATTICE_CAP
    oracle_cap: int = DEFAULT_ORACLE_CAP


def get_caps() -> Caps:
    """Read the caps, honouring the environment override on every call."""
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return Caps()
    try:
        lattice_cap, oracle_cap = (int(part) for part in raw.split(","))
    except ValueError:
        raise ValueError(
            f"{ENV_VAR} must be two comma-separated integers, got {raw!r}"
        ) from None
    if lattice_cap < 1 or oracle_cap < 1:
        raise ValueError(f"{ENV_VAR} values must be positive, got {raw!r}")
    return Caps(lattice_cap, oracle_cap)
