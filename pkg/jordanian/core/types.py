"""
Jordanian Type Definitions
==========================

TypedDict definitions for reports, certificates and pipeline results.
"""

from typing import TypedDict, Optional, Literal, Any, Dict, List
from typing_extensions import NotRequired


Status = Literal['pass', 'fail']
OutputFormat = Literal['json', 'latex', 'plain']
ScalarStyle = Literal['plain', 'latex']
SpanRelation = Literal['equal', 'left_subset', 'right_subset', 'incomparable']
LogLevel = Literal['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


class MatrixJSON(TypedDict):
    """Matrix in the JSON exchange format"""
    rows: int
    cols: int
    entries: List[List[str]]


class ReportEntry(TypedDict):
    """One verified identity"""
    identity: str
    status: Status
    residual: Optional[MatrixJSON]
    suite: NotRequired[str]
    details: NotRequired[Dict[str, Any]]


class CertificateTerm(TypedDict):
    """One summand coeff * left * relation * right"""
    left: str
    relation: int
    right: str
    coeff: str
    side: NotRequired[str]
    cofactor: NotRequired[str]


class Certificate(TypedDict):
    """Membership certificate"""
    target: str
    combination: List[CertificateTerm]


class SpanResult(TypedDict):
    """Outcome of comparing two spans inside one sector"""
    relation: SpanRelation
    rank_left: int
    rank_right: int
    rank_union: int
    sector_dim: int
    guard_ranks: NotRequired[List[Dict[str, Any]]]
    guard_consistent: NotRequired[bool]


class MembershipResult(TypedDict):
    """Outcome of a two-sided ideal membership test"""
    member: bool
    sector_dim: int
    rank: int
    certificate: NotRequired[Certificate]
    certificate_verified: NotRequired[bool]
    residual: NotRequired[str]
    method: NotRequired[str]
    points: NotRequired[List[Dict[str, Any]]]
    consistent: NotRequired[bool]


class SuiteInfo(TypedDict):
    """Summary of a suite run"""
    name: str
    passed: int
    failed: int
    seconds: float


class RunResult(TypedDict):
    """Final pipeline result"""
    success: bool
    reports: Dict[str, List[ReportEntry]]
    errors: NotRequired[List[str]]
    warnings: NotRequired[List[str]]
    metadata: NotRequired[Dict[str, Any]]
