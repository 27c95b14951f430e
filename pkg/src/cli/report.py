"""
Report models emitted by every command
"""

from typing import Any, Dict, List, Optional

import orjson
from pydantic import BaseModel, Field

from verification.base_suite import CaseResult

_JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_SERIALIZE_NUMPY


def complex_pair(value: complex) -> List[float]:
    """[re, im] encoding of a complex number"""
    value = complex(value)
    return [value.real, value.imag]


class CaseRecord(BaseModel):
    """One checked residual"""
    name: str = Field(..., description="Check label")
    residual: Optional[float] = Field(None, description="Residual; missing when the check raised")
    threshold: float = Field(..., description="Residual bound the check must stay below")
    passed: bool = Field(..., serialization_alias="pass", description="Whether the residual is below threshold")
    detail: Dict[str, Any] = Field(default_factory=dict, description="Inputs and intermediate values")
    error: Optional[str] = Field(None, description="Evaluation error of a failed check")

    @classmethod
    def from_case(cls, case: CaseResult) -> "CaseRecord":
        return cls(
            name=case.name,
            residual=case.residual,
            threshold=case.threshold,
            passed=case.passed,
            detail=case.detail,
            error=case.error,
        )


class Report(BaseModel):
    """Outcome of one command"""
    command: str = Field(..., description="Command echo")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Parsed inputs")
    outputs: Dict[str, Any] = Field(default_factory=dict, description="Values with error estimates")
    suite: Optional[str] = Field(None, description="Verification suite name")
    cases: List[CaseRecord] = Field(default_factory=list, description="Checked residuals")
    passed: bool = Field(True, description="All checks passed and no evaluation error occurred")
    exit_code: int = Field(0, description="Process exit code")
    error: Optional[Dict[str, Any]] = Field(None, description="Evaluation error, if any")
    elapsed_ms: Optional[float] = Field(None, description="Wall time")

    def to_json(self, timing: bool = True) -> bytes:
        """Deterministic JSON bytes; timing=False drops the wall time"""
        exclude = None if timing else {"elapsed_ms"}
        return orjson.dumps(self.model_dump(by_alias=True, exclude=exclude), option=_JSON_OPTIONS)

    def to_text(self, timing: bool = True) -> str:
        """Human-readable summary"""
        lines = [f"{self.command}: {'PASS' if self.passed else 'FAIL'} (exit {self.exit_code})"]
        for key in sorted(self.outputs):
            lines.append(f"  {key} = {self.outputs[key]}")
        for case in self.cases:
            residual = "error" if case.residual is None else f"{case.residual:.3e}"
            status = "ok" if case.passed else "FAILED"
            lines.append(f"  [{status}] {case.name}: {residual} (< {case.threshold:g})")
            if case.error:
                lines.append(f"      {case.error}")
        if self.error:
            lines.append(f"  error: {self.error.get('kind')}: {self.error.get('detail')}")
        if timing and self.elapsed_ms is not None:
            lines.append(f"  elapsed: {self.elapsed_ms:.1f} ms")
        return "\n".join(lines)
