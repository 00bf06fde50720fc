"""Project-wide constants (e.g., enumeration bounds, search budgets)."""

DEFAULT_N_BOUND: int = 16

DEFAULT_SEARCH_BUDGET: int = 10**6
DEFAULT_FACTORIZATION_BUDGET: int = 200_000

XW_BOUND_RETRIES: int = 4

DEFAULT_LETTER: str = "a"
DEFAULT_SEED: int = 0

DEFAULT_CORPUS_SIZE: int = 100
DEFAULT_CORPUS_MAX_ORDER: int = 6
DEFAULT_CORPUS_MAX_WORDS: int = 10

SCHEMA_VERSION: str = "1.0"

PROJECT_PACKAGES: tuple[str, ...] = (
    "common",
    "algebra",
    "cyclic",
    "arrangements",
    "codes",
    "analysis",
    "cli",
)
