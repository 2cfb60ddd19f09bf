"""
Shared type definitions for the lattice-mobius engine
"""

from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from shared.constants import Enumeration, SystemConfig
from shared.exceptions import ErrorCategory, ErrorSeverity


class MobiusMethod(str, Enum):
    RECURSIVE = "recursive"
    CROSSCUT = "crosscut"
    NBB = "nbb"
    CORELESS = "coreless"
    NBC = "nbc"


class Subcommand(str, Enum):
    BUILD = "build"
    MOBIUS = "mobius"
    BASES = "bases"
    CHARPOLY = "charpoly"
    CHECK = "check"
    PERFECT_ORDER = "perfect-order"
    DOMINANCE_MU = "dominance-mu"


class CheckProperty(str, Enum):
    RANKED = "ranked"
    ATOMIC = "atomic"
    SEMIMODULAR = "semimodular"
    GEOMETRIC = "geometric"
    LEFT_MODULAR = "left-modular"
    LEVEL = "level"
    LL = "ll"
    SUPERSOLVABLE = "supersolvable"


# Error Models
class ErrorDetail(BaseModel):
    """One failed command, as reported on stderr"""
    code: str
    message: str
    severity: ErrorSeverity
    category: ErrorCategory
    details: Dict[str, Any] = {}
    timestamp: datetime

    def diagnostic(self, prog: str) -> str:
        return f"{prog}: [{self.code}] {self.message}"


# Input Models
class CoverList(BaseModel):
    """Hasse-diagram input: element count plus (lower, upper) index pairs"""
    size: int = Field(..., ge=1)
    covers: List[Tuple[int, int]] = []
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def _indices_in_range(self) -> "CoverList":
        for lo, up in self.covers:
            if not (0 <= lo < self.size and 0 <= up < self.size):
                raise ValueError(f"cover ({lo}, {up}) references an element outside 0..{self.size - 1}")
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError(f"expected {self.size} labels, got {len(self.labels)}")
        return self


# Report Models
class PropertyReportRow(BaseModel):
    """One line of the structural check report"""
    property: CheckProperty
    holds: Optional[bool]  # None when the check was skipped
    witness: str = "-"

    def as_fields(self) -> List[str]:
        if self.holds is None:
            holds = "skipped"
        else:
            holds = "true" if self.holds else "false"
        return [self.property.value, holds, self.witness or "-"]


# Command Models
class CommandRequest(BaseModel):
    """A parsed command-line invocation"""
    subcommand: Subcommand
    source: Optional[str] = None
    out: Optional[str] = None
    method: MobiusMethod = MobiusMethod.RECURSIVE
    order_file: Optional[str] = None
    canonical: bool = False
    verify: bool = False
    element: Optional[str] = None
    chain: str = "auto"
    properties: List[CheckProperty] = []
    budget: int = Field(Enumeration.DEFAULT_PERFECT_ORDER_BUDGET, ge=1)
    beta: Optional[str] = None
    lam: Optional[str] = None

    @model_validator(mode="after")
    def _options_match_subcommand(self) -> "CommandRequest":
        if self.subcommand == Subcommand.DOMINANCE_MU:
            if self.beta is None or self.lam is None:
                raise ValueError("dominance-mu needs two partitions")
            if self.source is not None:
                raise ValueError("dominance-mu takes no lattice source")
        elif not self.source:
            raise ValueError(f"{self.subcommand.value} needs exactly one lattice source")
        if self.order_file and self.canonical:
            raise ValueError("--order and --canonical are mutually exclusive")
        if self.subcommand == Subcommand.BASES and self.element is None:
            raise ValueError("bases needs --element")
        if self.subcommand == Subcommand.CHECK and not self.properties:
            raise ValueError("check needs at least one property flag")
        return self


# Configuration Models
class MobiusSettings(BaseModel):
    default_method: MobiusMethod = MobiusMethod.RECURSIVE
    verify: bool = False


class PerfectOrderSettings(BaseModel):
    budget: int = Field(Enumeration.DEFAULT_PERFECT_ORDER_BUDGET, ge=1)


class LoggingSettings(BaseModel):
    level: str = SystemConfig.LOG_LEVEL
    file: Optional[str] = None

    @field_validator("level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        if value.upper() not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return value.upper()


class CliSettings(BaseModel):
    mobius: MobiusSettings = MobiusSettings()
    perfect_order: PerfectOrderSettings = PerfectOrderSettings()
    logging: LoggingSettings = LoggingSettings()

