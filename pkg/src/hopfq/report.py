"""Verification reports shared by every checker and the CLI.

A report never stops at the first failure: each law gets one entry with its
outcome and, when it fails, the least witness found.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable


@dataclass
class Entry:
    name: str
    holds: bool
    witness: Any = None
    # required laws must hold; probes only record an observation, optionally
    # against an expected outcome
    required: bool = True
    expect: bool | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        if self.required:
            return self.holds
        if self.expect is not None:
            return self.holds == self.expect
        return True

    def status(self) -> str:
        if self.required:
            return "PASS" if self.holds else "FAIL"
        word = "holds" if self.holds else "fails"
        if self.expect is None:
            return f"probe:{word}"
        return f"probe:{word}" + ("" if self.ok else " (UNEXPECTED)")


@dataclass
class Report:
    title: str
    entries: list[Entry] = field(default_factory=list)
    info: dict[str, str] = field(default_factory=dict)

    def add(self, name: str, holds: bool, witness: Any = None, **kw) -> Entry:
        e = Entry(name, bool(holds), witness, **kw)
        self.entries.append(e)
        return e

    def probe(self, name: str, holds: bool, witness: Any = None, expect: bool | None = None,
              **kw) -> Entry:
        return self.add(name, holds, witness, required=False, expect=expect, **kw)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for e in other.entries:
            self.entries.append(Entry(prefix + e.name, e.holds, e.witness, e.required, e.expect, e.detail))

    def __getitem__(self, name: str) -> Entry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(e.name == name for e in self.entries)

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.ok]

    def render(self, verbose: bool = False, fmt: Callable[[Any], str] = repr) -> str:
        lines = [f"== {self.title}"]
        width = max((len(e.name) for e in self.entries), default=0)
        for e in self.entries:
            line = f"  {e.name.ljust(width)}  {e.status()}"
            if e.witness is not None and (not e.holds or verbose):
                line += f"  witness={fmt(e.witness)}"
            if e.detail and (verbose or not e.ok):
                line += f"  [{e.detail}]"
            lines.append(line)
        return "\n".join(lines)

    def trailer(self) -> str:
        lines = ["--- summary"]
        for k, v in self.info.items():
            lines.append(f"{k}={v}")
        lines.append(f"entries={len(self.entries)}")
        lines.append(f"failed={len(self.failures)}")
        lines.append(f"status={'pass' if self.passed else 'fail'}")
        return "\n".join(lines)


def first_failure(cases: Iterable[tuple[Any, bool]]) -> tuple[bool, Any]:
    """Scan ``(witness, ok)`` pairs in order; return (all ok, first failing witness)."""
    for w, ok in cases:
        if not ok:
            return False, w
    return True, None
