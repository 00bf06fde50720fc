"""Schemas for the factorize command."""

from typing import List, Literal, Optional

from pydantic import BaseModel

from cli.schemas.common import RunConfigSchema
from common.constants import SCHEMA_VERSION


class PairSchema(BaseModel):
    """A factorization pair of Z_n, optionally annotated with its chain."""
    n: int
    left: List[int]
    right: List[int]
    kind: Literal["factorization", "krasner", "hajos"]
    chain: Optional[List[int]] = None


class FactorizeResponse(BaseModel):
    """Response model for an enumeration of factorizations."""
    schema_version: str = SCHEMA_VERSION
    run: RunConfigSchema
    n: int
    kind: Literal["all", "krasner", "hajos"]
    count: int
    pairs: List[PairSchema]
