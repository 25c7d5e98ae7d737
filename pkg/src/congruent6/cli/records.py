"""Batch curve files: a JSON array of {label?, a, b} with fraction strings."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ..elliptic.curve import Curve
from ..errors import SingularCurveError
from ..exact.rat import format_rat, parse_rat


class RecordError(ValueError):
    """A batch file that cannot be ingested; the message names the position."""


@dataclass(frozen=True)
class CurveRecord:
    a: Fraction
    b: Fraction
    label: str | None = None

    @property
    def curve(self) -> Curve:
        return Curve(self.a, self.b)

    def to_json(self) -> dict:
        out = {"a": format_rat(self.a), "b": format_rat(self.b)}
        if self.label is not None:
            out = {"label": self.label, **out}
        return out


def _line_of(text: str, needle_index: int) -> int:
    return text.count("\n", 0, needle_index) + 1


def parse_records(text: str, source: str = "<input>") -> list[CurveRecord]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RecordError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON ({exc.msg})") from None
    if not isinstance(data, list):
        raise RecordError(f"{source}: expected a JSON array of curve records")
    # approximate line of each record, for diagnostics
    starts, pos = [], 0
    for _ in data:
        pos = text.find("{", pos)
        starts.append(_line_of(text, pos) if pos >= 0 else 0)
        pos = text.find("}", pos) + 1 if pos >= 0 else pos
    records = []
    for i, item in enumerate(data):
        where = f"{source}: record {i} (line {starts[i]})"
        if not isinstance(item, dict) or "a" not in item or "b" not in item:
            raise RecordError(f"{where}: expected an object with string fields 'a' and 'b'")
        label = item.get("label")
        if label is not None and not isinstance(label, str):
            raise RecordError(f"{where}: label must be a string")
        for k in ("a", "b"):
            if not isinstance(item[k], str):
                raise RecordError(f"{where}: field {k!r} must be a fraction string, not {item[k]!r}")
        try:
            a, b = parse_rat(item["a"]), parse_rat(item["b"])
        except ValueError as exc:
            raise RecordError(f"{where}: {exc}") from None
        try:
            Curve(a, b)
        except SingularCurveError:
            raise RecordError(f"{where}: singular curve (discriminant is 0)") from None
        records.append(CurveRecord(a, b, label))
    return records


def batch_ingest(path: str | Path) -> list[CurveRecord]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise RecordError(f"{path}: {exc.strerror}") from None
    return parse_records(text, str(path))


def serialize(records: list[CurveRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=2)
