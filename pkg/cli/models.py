"""Command request and result data types for the CLI."""

from dataclasses import dataclass
from typing import Literal, Optional

from pydantic import BaseModel

from cli.constants import EXIT_OK


@dataclass(frozen=True)
class FactorizeCommand:
    """Enumerate factorizations of Z_n."""

    n: int
    kind: Literal["all", "krasner", "hajos"] = "all"
    command: Literal["factorize"] = "factorize"


@dataclass(frozen=True)
class CheckCommand:
    """Run code predicates on a code file."""

    path: str
    checks: tuple[str, ...]
    command: Literal["check"] = "check"


@dataclass(frozen=True)
class AnalyzeCommand:
    """Left/right-set analysis of a maximal code."""

    path: str
    letter: str
    corollary: Optional[str] = None
    command: Literal["analyze"] = "analyze"


@dataclass(frozen=True)
class ScanCommand:
    """Evidence scan over a generated corpus."""

    mode: Literal["krasner-in-system", "omega2", "pair2", "triangle"]
    corpus_size: int
    max_order: int
    max_words: int
    letter: str
    command: Literal["scan"] = "scan"


CommandRequest = FactorizeCommand | CheckCommand | AnalyzeCommand | ScanCommand


@dataclass(frozen=True)
class RunOptions:
    """Global flags as given on the command line; None means not given."""

    n_bound: Optional[int] = None
    budget: Optional[int] = None
    seed: Optional[int] = None
    output_format: Optional[str] = None
    out_path: Optional[str] = None
    config_path: Optional[str] = None
    debug: bool = False


@dataclass(frozen=True)
class RunConfig:
    """Effective settings of one run, echoed in every output."""

    command: str
    inputs: tuple[str, ...]
    n_bound: int
    budget: int
    seed: int
    output_format: Literal["json", "text"]
    out_path: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": list(self.inputs),
            "n_bound": self.n_bound,
            "budget": self.budget,
            "seed": self.seed,
            "format": self.output_format,
        }


@dataclass(frozen=True)
class CommandResult:
    """Exit code and response model of a handled command."""

    response: BaseModel
    exit_code: int = EXIT_OK
