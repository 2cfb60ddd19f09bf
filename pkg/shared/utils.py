"""
Shared utility functions for the lattice-mobius engine
"""

import logging
import math
import os
import sys
from typing import Any, List, Optional

import structlog

from shared.constants import SystemConfig

_STRUCTLOG_CONFIGURED = False
_PROJECT_PACKAGES = ("client", "engines", "shared")


def _configure_structlog() -> None:
    global _STRUCTLOG_CONFIGURED
    if _STRUCTLOG_CONFIGURED:
        return
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt=SystemConfig.LOG_DATE_FORMAT),
            structlog.processors.KeyValueRenderer(key_order=["timestamp", "logger", "level", "event"]),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
    _STRUCTLOG_CONFIGURED = True


# Logging setup
def setup_logger(name: str, level: Optional[str] = None, log_file: Optional[str] = None) -> Any:
    """
    Setup structured logging for components.

    Records go to stderr so that command output on stdout stays deterministic.

    Args:
        name: Logger name, usually the module ``__name__``
        level: Level name; defaults to ``LATTICE_LOG_LEVEL`` or ``SystemConfig.LOG_LEVEL``
        log_file: Optional file receiving a copy of every record

    Returns:
        A structlog bound logger
    """
    _configure_structlog()
    level_name = (level or load_env_var(SystemConfig.LOG_LEVEL_ENV, SystemConfig.LOG_LEVEL)).upper()

    std_logger = logging.getLogger(name)
    std_logger.setLevel(getattr(logging, level_name, logging.WARNING))

    if not std_logger.handlers:
        formatter = logging.Formatter("%(message)s")
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        std_logger.addHandler(console_handler)

        if log_file:
            directory = os.path.dirname(log_file)
            if directory:
                os.makedirs(directory, exist_ok=True)
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(formatter)
            std_logger.addHandler(file_handler)
        std_logger.propagate = False

    return structlog.get_logger(name)


def configure_log_level(level: str, log_file: Optional[str] = None) -> None:
    """Apply ``level`` to every logger already created under the project packages"""
    numeric = getattr(logging, level.upper(), logging.WARNING)
    for name, candidate in logging.root.manager.loggerDict.items():
        if isinstance(candidate, logging.Logger) and name.split(".")[0] in _PROJECT_PACKAGES:
            candidate.setLevel(numeric)
            if log_file and not any(isinstance(h, logging.FileHandler) for h in candidate.handlers):
                directory = os.path.dirname(log_file)
                if directory:
                    os.makedirs(directory, exist_ok=True)
                handler = logging.FileHandler(log_file)
                handler.setFormatter(logging.Formatter("%(message)s"))
                candidate.addHandler(handler)


# Environment and Configuration
def load_env_var(key: str, default: Any = None, required: bool = False) -> Any:
    """Load environment variable with type conversion"""
    value = os.getenv(key, default)

    if required and value is None:
        raise ValueError(f"Required environment variable {key} is not set")

    # Type conversion based on default type
    if default is not None and value is not None:
        if isinstance(default, bool):
            if isinstance(value, bool):
                return value
            return str(value).lower() in ('true', '1', 'yes', 'on')
        elif isinstance(default, int):
            return int(value)
        elif isinstance(default, float):
            return float(value)
        elif isinstance(default, list):
            return value.split(',') if value else []

    return value


# Atom-set bit masks
def bits_of(mask: int) -> List[int]:
    """Positions of the set bits of ``mask``, ascending"""
    positions = []
    position = 0
    while mask:
        if mask & 1:
            positions.append(position)
        mask >>= 1
        position += 1
    return positions


# Combinatorial numbers
def catalan(n: int) -> int:
    """Catalan number C_n"""
    return math.comb(2 * n, n) // (n + 1)


def parse_int_list(text: str, field_name: str = "value") -> List[int]:
    """Parse a comma-separated integer list; the empty string gives []"""
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as e:
        raise ValueError(f"{field_name} must be a comma-separated list of integers, got {text!r}") from e
