from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Any, Dict, List

import orjson


@dataclass(frozen=True)
class CheckResult:
    """검증 항목 하나의 결과."""

    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    """검증 묶음 결과. 불일치는 모아두고 끝까지 진행한다."""

    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    def record(self, name: str, passed: bool, detail: str = "") -> bool:
        """
        @param name 항목 이름.
        @param passed 통과 여부.
        @param detail 비교값 요약.
        @returns passed 그대로.
        """
        self.checks.append(CheckResult(name=name, passed=bool(passed), detail=detail))
        return bool(passed)

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def digest(self) -> str:
        """
        @returns 항목 목록 JSON 의 SHA-256.
        """
        canonical = orjson.dumps([[c.name, c.passed, c.detail] for c in self.checks])
        return hashlib.sha256(canonical).hexdigest()

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "check_count": len(self.checks),
            "failure_count": len(self.failures),
            "digest": self.digest(),
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f" :: {c.detail}" if c.detail else "") for c in self.checks]
        lines.append(f"suite={self.suite} checks={len(self.checks)} failures={len(self.failures)} digest={self.digest()}")
        return "\n".join(lines)
