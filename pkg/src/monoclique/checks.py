"""Report types shared by the lemma checkers and the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Violation:
    check: str
    where: str
    lhs: str
    rhs: str
    relation: str

    def to_json(self) -> dict:
        return {"check": self.check, "where": self.where, "lhs": self.lhs,
                "relation": self.relation, "rhs": self.rhs}


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    skipped: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, holds: bool, where: str, lhs, relation: str, rhs) -> None:
        self.checked += 1
        if not holds:
            self.violations.append(Violation(self.name, where, str(lhs), str(rhs), relation))

    def merge(self, other: "CheckReport") -> None:
        self.checked += other.checked
        self.skipped += other.skipped
        self.violations.extend(other.violations)


class TreeInvariantError(AssertionError):
    """A proven tree property failed; this signals a construction bug."""
