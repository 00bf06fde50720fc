"""Schemas for the check command."""

from typing import List, Optional

from pydantic import BaseModel

from cli.schemas.common import CodeSchema, RunConfigSchema
from common.constants import SCHEMA_VERSION


class CodeCheckSchema(BaseModel):
    """Sardinas–Patterson verdict with a shortest ambiguous word."""
    is_code: bool
    witness: Optional[str] = None
    factorizations: Optional[List[List[str]]] = None


class CodeClassSchema(BaseModel):
    prefix: bool
    suffix: bool
    bifix: bool


class FactorizationSchema(BaseModel):
    """Word sets P, S with C - 1 = P(A - 1)S."""
    P: List[str]
    S: List[str]


class CheckResponse(BaseModel):
    """Response model for code predicates."""
    schema_version: str = SCHEMA_VERSION
    run: RunConfigSchema
    code: CodeSchema
    checks: List[str]
    passed: bool
    failures: List[str]
    is_code: Optional[CodeCheckSchema] = None
    code_class: Optional[CodeClassSchema] = None
    maximal: Optional[bool] = None
    measure: Optional[str] = None
    factorization: Optional[FactorizationSchema] = None
