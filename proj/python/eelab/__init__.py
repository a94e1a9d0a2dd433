"""Extended-electron laboratory.

Geometric algebra of 3-D space, the extended-electron plane-wave model,
spin dynamics under a field ramp, rotor-model EPR correlations and the STM
uncertainty budget, backed by a C++ core.
"""

from ._core import (
    ConfigError,
    DomainError,
    IoError,
    ParseError,
    UnsupportedConfiguration,
    __version__,
    electron,
    epr,
    ga3,
    run_cli,
    spin,
    uncertainty,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "IoError",
    "ParseError",
    "UnsupportedConfiguration",
    "__version__",
    "electron",
    "epr",
    "ga3",
    "run_cli",
    "spin",
    "uncertainty",
]
