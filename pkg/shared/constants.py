"""
Constants module for the lattice-mobius engine.

This module centralizes every limit and literal used throughout the
engine packages and the command-line client.

Categories:
- CAPACITY: Size guards for lattices, atom-subset enumeration and families
- ENUMERATION: Search budgets
- FILE_FORMATS: Keywords of the lattice and atom-order text formats
- LABELS: Display conventions for family elements
- EXIT_CODES: Command-line exit statuses
- SYSTEM: Logging and configuration defaults
"""


# =============================================================================
# CAPACITY CONSTANTS
# =============================================================================


class Capacity:
    """Size guards for tables and enumerations"""

    # Generic lattice guard
    MAX_LATTICE_ELEMENTS = 50_000  # O(n^2) order/join/meet tables

    # Atom-subset enumeration
    MAX_ENUMERATION_ATOMS = 22  # 2^22 subsets

    # Structure scans
    MAX_SUPERSOLVABLE_ELEMENTS = 200  # full maximal-chain scan

    # Family bounds
    PARTITION_MAX_N = 8  # Bell(8) = 4140 elements
    NONCROSSING_MAX_N = 8  # Catalan(8) = 1430 elements
    NCBD_MAX_N = 4  # signed partitions of 8 letters
    SHUFFLE_MAX_LETTERS = 7  # m + n
    DOMINANCE_MAX_N = 12  # 77 partitions
    TAMARI_MAX_N = 9  # Catalan(9) = 4862 elements
    BOOLEAN_MAX_N = 16
    CHAIN_MAX_LENGTH = 10_000


# =============================================================================
# ENUMERATION CONSTANTS
# =============================================================================


class Enumeration:
    """Search budgets"""

    DEFAULT_PERFECT_ORDER_BUDGET = 10_000  # candidate orders tested
    PERFECT_ORDER_LOG_INTERVAL = 500  # progress log every N candidates


# =============================================================================
# FILE FORMAT CONSTANTS
# =============================================================================


class FileFormats:
    """Keywords of the flat text formats"""

    LATTICE_HEADER = "lattice"
    LABELS_KEYWORD = "labels"
    COVER_KEYWORD = "cover"
    ORDER_RELATION_KEYWORD = "rel"
    COMMENT_PREFIX = "#"
    FIELD_SEPARATOR = "\t"
    EMPTY_FIELD = "-"


# =============================================================================
# LABEL CONSTANTS
# =============================================================================


class Labels:
    """Display conventions for family elements"""

    SHUFFLE_X_LETTERS = "defghij"  # x = x_1 x_2 ...
    SHUFFLE_Y_LETTERS = "DEFGHIJ"  # y = y_1 y_2 ...
    EMPTY_WORD = "∅"
    BLOCK_SEPARATOR = "/"
    SIGNED_MEMBER_SEPARATOR = ","


# =============================================================================
# EXIT CODES
# =============================================================================


class ExitCodes:
    """Command-line exit statuses"""

    SUCCESS = 0
    DOMAIN_ERROR = 1
    USAGE_ERROR = 2
    VERIFICATION_MISMATCH = 3


# =============================================================================
# SYSTEM CONFIGURATION
# =============================================================================


class SystemConfig:
    """Logging and configuration defaults"""

    LOG_LEVEL = "WARNING"
    LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
    LOG_LEVEL_ENV = "LATTICE_LOG_LEVEL"
    CONFIG_PATH_ENV = "LATTICE_CONFIG"
    DEFAULT_CONFIG_PATH = "client/config.yaml"


# Export commonly used constants
__all__ = [
    'Capacity',
    'Enumeration',
    'FileFormats',
    'Labels',
    'ExitCodes',
    'SystemConfig',
]
