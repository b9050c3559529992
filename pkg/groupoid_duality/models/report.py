"""
校验报告模型。公理校验不抛异常，而是把每条违反记录成 Violation。
"""

from typing import Any, Dict, List, Optional, Sequence


def _plain(value: Any) -> Any:
    """把见证中的元组、集合转换成可以写入 JSON 的列表。"""
    if isinstance(value, (tuple, list, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_plain(v) for v in items]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


class Violation:
    """一条公理违反，带见证。"""

    def __init__(self, axiom: str, witness: Any = None, message: str = "", severity: str = "error"):
        """
        初始化违反记录。

        Args:
            axiom: 公理名称，例如 "associativity"
            witness: 见证元组（箭头、对象或基元素编号）
            message: 说明
            severity: "error" 或 "warning"
        """
        self.axiom = axiom
        self.witness = _plain(witness)
        self.message = message
        self.severity = severity

    def to_dict(self) -> Dict[str, Any]:
        return {
            "axiom": self.axiom,
            "witness": self.witness,
            "message": self.message,
            "severity": self.severity,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Violation":
        return cls(
            axiom=data["axiom"],
            witness=data.get("witness"),
            message=data.get("message", ""),
            severity=data.get("severity", "error"),
        )

    def __repr__(self) -> str:
        return f"Violation({self.axiom!r}, {self.witness!r})"


class CheckReport:
    """一次校验的结果：是否通过、违反列表以及附加数据。"""

    def __init__(self, subject: str, violations: Optional[List[Violation]] = None, details: Optional[Dict[str, Any]] = None):
        self.subject = subject
        self.violations = list(violations or [])
        self.details = dict(details or {})

    @property
    def ok(self) -> bool:
        """没有 error 级别的违反即为通过，warning 不影响结果。"""
        return not any(v.severity == "error" for v in self.violations)

    @property
    def errors(self) -> List[Violation]:
        return [v for v in self.violations if v.severity == "error"]

    @property
    def warnings(self) -> List[Violation]:
        return [v for v in self.violations if v.severity == "warning"]

    def add(self, axiom: str, witness: Any = None, message: str = "", severity: str = "error") -> Violation:
        violation = Violation(axiom, witness, message, severity)
        self.violations.append(violation)
        return violation

    def merge(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        """把另一个报告的违反并入本报告，公理名加上前缀。"""
        for v in other.violations:
            axiom = f"{prefix}{v.axiom}" if prefix else v.axiom
            self.violations.append(Violation(axiom, v.witness, v.message, v.severity))
        return self

    def failed_axioms(self) -> List[str]:
        """出错的公理名称，按首次出现的顺序去重。"""
        seen: List[str] = []
        for v in self.errors:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return seen

    def first(self, axiom: str) -> Optional[Violation]:
        for v in self.violations:
            if v.axiom == axiom:
                return v
        return None

    def has(self, axioms: Sequence[str]) -> bool:
        return any(v.axiom in axioms for v in self.violations)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
            "details": _plain(self.details),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckReport":
        return cls(
            subject=data["subject"],
            violations=[Violation.from_dict(v) for v in data.get("violations", [])],
            details=data.get("details", {}),
        )

    def get_summary(self) -> str:
        """
        获取报告摘要。

        Returns:
            报告的文本摘要
        """
        status = "通过" if self.ok else "失败"
        lines = [f"{self.subject}: {status}"]
        for v in self.violations:
            tag = "错误" if v.severity == "error" else "警告"
            text = f"  [{tag}] {v.axiom} 见证={v.witness}"
            if v.message:
                text += f" ({v.message})"
            lines.append(text)
        return "\n".join(lines)

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"CheckReport({self.subject!r}, ok={self.ok}, violations={len(self.violations)})"
