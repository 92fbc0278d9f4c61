"""Result objects for the verification harness.

A failed comparison always carries its first mismatch: the location plus the
two disagreeing values.  A bare boolean is useless when a thousand-term
series differs in one coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Mismatch:
    """First point where two supposedly equal objects differ."""

    location: tuple[int, ...]
    lhs: int
    rhs: int
    kind: str = "index"  # "index", "q,z" or "n" -- how to render location

    def describe(self) -> str:
        if self.kind == "q,z":
            q, z = self.location
            where = f"q^{q} z^{z}"
        elif self.kind == "n":
            where = f"n={self.location[0]}"
        else:
            where = f"index {self.location[0]}"
        return f"first mismatch at {where}: {self.lhs} != {self.rhs}"


@dataclass
class CheckReport:
    """Outcome of one verification, possibly aggregating sub-checks."""

    name: str
    bound: int | None
    passed: bool
    mismatch: Mismatch | None = None
    elapsed: float = 0.0
    children: list["CheckReport"] = field(default_factory=list)
    note: str = ""

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        status = "PASS" if self.passed else "FAIL"
        bits = [f"{pad}{status}  {self.name}"]
        if self.bound is not None:
            bits.append(f"(bound={self.bound})")
        if indent == 0:
            bits.append(f"[{self.elapsed:.2f}s]")
        if self.note:
            bits.append(f"- {self.note}")
        lines = [" ".join(bits)]
        if self.mismatch is not None:
            lines.append(f"{pad}      {self.mismatch.describe()}")
        for child in self.children:
            lines.append(child.render(indent + 1))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "bound": self.bound,
            "passed": self.passed,
            "elapsed": self.elapsed,
        }
        if self.note:
            out["note"] = self.note
        if self.mismatch is not None:
            out["mismatch"] = {
                "location": list(self.mismatch.location),
                "lhs": self.mismatch.lhs,
                "rhs": self.mismatch.rhs,
            }
        if self.children:
            out["children"] = [child.to_dict() for child in self.children]
        return out


def combine(name: str, bound: int | None, children: list[CheckReport]) -> CheckReport:
    """Aggregate sub-reports; fails iff any child fails, carries first mismatch."""
    passed = all(child.passed for child in children)
    mismatch = next((c.mismatch for c in children if c.mismatch is not None), None)
    return CheckReport(name, bound, passed, mismatch=mismatch, children=children)
