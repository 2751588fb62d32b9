"""Structured results of identity checks."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, WARN = "pass", "fail", "warn"


@dataclass
class CheckItem:
    label: str
    ok: bool
    residual: str | float | None = None
    warn: bool = False


@dataclass
class CheckReport:
    name: str
    params: dict[str, Any] = field(default_factory=dict)
    items: list[CheckItem] = field(default_factory=list)
    wall_time: float = 0.0
    note: str = ""

    def add(self, label: str, ok: bool, residual=None, warn: bool = False) -> CheckItem:
        item = CheckItem(label, ok, residual, warn)
        self.items.append(item)
        return item

    def add_exact(self, label: str, residual) -> CheckItem:
        """Record a symbolic identity; ``residual`` is a LaurentPoly."""
        ok = residual.is_zero()
        return self.add(label, ok, None if ok else str(residual))

    def add_numeric(self, label: str, rel_error: float, tol: float) -> CheckItem:
        return self.add(label, bool(rel_error <= tol), float(rel_error))

    @property
    def passed(self) -> bool:
        return all(i.ok or i.warn for i in self.items)

    @property
    def status(self) -> str:
        if not self.passed:
            return FAIL
        return WARN if any(i.warn and not i.ok for i in self.items) else PASS

    @property
    def first_failure(self) -> CheckItem | None:
        return next((i for i in self.items if not i.ok and not i.warn), None)

    @property
    def max_residual(self) -> float | None:
        vals = [i.residual for i in self.items if isinstance(i.residual, float)]
        return max(vals) if vals else None

    def merge(self, other: CheckReport, prefix: str = "") -> None:
        for i in other.items:
            self.items.append(CheckItem(prefix + i.label, i.ok, i.residual, i.warn))

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "params": self.params,
            "status": self.status,
            "max_residual": self.max_residual,
            "items": [
                {"label": i.label, "ok": i.ok, "residual": i.residual, "warn": i.warn}
                for i in self.items
            ],
            "note": self.note,
            "wall_time": round(self.wall_time, 4),
        }

    def summary(self) -> str:
        fails = [i for i in self.items if not i.ok]
        line = f"[{self.status.upper()}] {self.name} ({len(self.items)} items"
        if fails:
            line += f", {len(fails)} not ok"
        line += f", {self.wall_time:.2f}s)"
        lines = [line]
        for i in fails[:5]:
            res = i.residual
            if isinstance(res, str) and len(res) > 200:
                res = res[:200] + "..."
            lines.append(f"    {'warn' if i.warn else 'FAIL'} {i.label}: {res}")
        if self.note:
            lines.append(f"    note: {self.note}")
        return "\n".join(lines)


class timed:
    """Context manager filling ``report.wall_time``."""

    def __init__(self, report: CheckReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.wall_time = time.perf_counter() - self.t0
        return False
