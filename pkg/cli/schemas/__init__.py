"""Pydantic schemas for command outputs."""

from cli.schemas.analysis import AnalyzeResponse, CorollarySchema, CorpusHeader, ScanResponse, SeparatorSchema
from cli.schemas.codes import CheckResponse, CodeCheckSchema, CodeClassSchema, FactorizationSchema
from cli.schemas.common import CodeSchema, ErrorResponse, RunConfigSchema
from cli.schemas.factorize import FactorizeResponse, PairSchema

__all__ = [
    "AnalyzeResponse",
    "CheckResponse",
    "CodeCheckSchema",
    "CodeClassSchema",
    "CodeSchema",
    "CorollarySchema",
    "CorpusHeader",
    "ErrorResponse",
    "FactorizationSchema",
    "FactorizeResponse",
    "PairSchema",
    "RunConfigSchema",
    "ScanResponse",
    "SeparatorSchema",
]
