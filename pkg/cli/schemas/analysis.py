"""Schemas for the analyze and scan commands."""

from typing import Any, List, Optional

from pydantic import BaseModel

from cli.schemas.common import CodeSchema, RunConfigSchema
from common.constants import SCHEMA_VERSION


class SeparatorSchema(BaseModel):
    """X_w of one separator with its arrangement and triangle status."""
    w: str
    Xw: List[List[int]]
    triangle: bool
    violating_k: Optional[int] = None
    arrangement: Optional[dict[str, Any]] = None
    krasner: Optional[dict[str, List[int]]] = None
    layout: Optional[dict[str, Any]] = None
    injection_verified: bool = False
    note: str = ""


class CorollarySchema(BaseModel):
    mode: str
    n: int
    applicable: bool
    ok: bool
    separators: List[SeparatorSchema]


class AnalyzeResponse(BaseModel):
    """Response model for the analysis of a maximal code."""
    schema_version: str = SCHEMA_VERSION
    run: RunConfigSchema
    code: CodeSchema
    letter: str
    n: int
    lefts: List[List[int]]
    rights: List[List[int]]
    krasner_in_system: List[dict[str, List[int]]]
    separators: List[SeparatorSchema]
    triangle: bool
    corollary: Optional[CorollarySchema] = None


class CorpusHeader(BaseModel):
    """Parameters of a generated corpus."""
    seed: int
    size: int
    max_order: int
    max_words: int
    generated: int


class ScanResponse(BaseModel):
    """Response model for a corpus scan; only tallies, never a verdict."""
    schema_version: str = SCHEMA_VERSION
    run: RunConfigSchema
    corpus: CorpusHeader
    mode: str
    codes: int
    counts: dict[str, int]
    partial: bool
    items: List[dict[str, Any]]
