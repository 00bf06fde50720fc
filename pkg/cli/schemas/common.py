"""Common schemas shared by every command output."""

from typing import Any, List, Literal, Optional

from pydantic import BaseModel, Field

from common.constants import SCHEMA_VERSION


class RunConfigSchema(BaseModel):
    """Effective run settings echoed in every output."""
    command: str
    inputs: List[str]
    n_bound: int
    budget: int
    seed: int
    format: Literal["json", "text"]


class CodeSchema(BaseModel):
    """A finite code: alphabet and words in length-then-lexicographic order."""
    alphabet: str
    words: List[str]


class ErrorResponse(BaseModel):
    """Response model for a failed command."""
    schema_version: str = SCHEMA_VERSION
    run: Optional[RunConfigSchema] = None
    error: str
    detail: str
    exit_code: int
    bundle: dict[str, Any] = Field(default_factory=dict)
