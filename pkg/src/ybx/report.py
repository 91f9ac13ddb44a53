"""Verification verdicts with deterministic first-failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linmap import LinMap, first_difference


@dataclass
class Check:
    name: str
    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return bool(self.ok)

    def to_dict(self):
        d = {"name": self.name, "ok": bool(self.ok)}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail:
            d["detail"] = self.detail
        return d


def equation(name: str, lhs: LinMap, rhs: LinMap, label=None) -> Check:
    """Exact map equality; the witness is the first differing domain basis index."""
    j = first_difference(lhs, rhs)
    if j is None:
        return Check(name, True)
    w = {"index": j}
    if label is not None:
        w["basis"] = label(j)
    return Check(name, False, w)


@dataclass
class Report:
    title: str = ""
    checks: list = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def eq(self, name, lhs, rhs, label=None) -> Check:
        return self.add(equation(name, lhs, rhs, label))

    def flag(self, name, ok, witness=None, detail="") -> Check:
        return self.add(Check(name, bool(ok), witness, detail))

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name):
        return any(c.name == name for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def first_failure(self):
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def to_dict(self):
        return {"title": self.title, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}

    def table(self) -> str:
        width = max([len(c.name) for c in self.checks] + [8])
        lines = [self.title] if self.title else []
        for c in self.checks:
            mark = "PASS" if c.ok else "FAIL"
            line = f"  {c.name:<{width}}  {mark}"
            if not c.ok and c.witness is not None:
                line += f"  witness={c.witness}"
            lines.append(line)
        return "\n".join(lines)

    __str__ = table
