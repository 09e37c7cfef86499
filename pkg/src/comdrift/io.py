"""Parsing and serialization for membership records, reports, and sweeps.

Membership input comes as CSV ``time,member,community`` (header optional) or
JSON lines ``{"t": ..., "member": ..., "community": ...}``.  Ids are opaque
strings: nothing is trimmed or case-folded, so distinct spellings stay
distinct.  All output uses LF line endings and UTF-8.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateMember, EmptyInput, InvalidParameter, ParseError
from .indices import IndexBreakdown, Trend
from .migration import ReportEntry, Snapshot, TransitionReport
from .simulation import SweepRow

REPORT_SCHEMA_VERSION = 1

REPORT_CSV_COLUMNS = [
    "from_time",
    "to_time",
    "direction",
    "community",
    "size",
    "eta",
    "m",
    "entropy",
    "max_entropy",
    "sigma",
    "split",
    "shrink",
    "trend",
]

SWEEP_CSV_COLUMNS = ["mode", "m", "eta", "seed", "split", "shrink"]

_MEMBERSHIP_HEADER = ["time", "member", "community"]


@dataclass(frozen=True)
class MembershipRecord:
    """One parsed input row: member belonged to community at a time step."""

    time: int
    member: str
    community: str


def _fmt(value: float) -> str:
    """Render a number with 12 significant digits (stable across platforms)."""
    return format(value, ".12g")


def _records_to_snapshots(records: list[MembershipRecord]) -> list[Snapshot]:
    grouped: dict[int, dict[str, str]] = {}
    for record in records:
        grouped.setdefault(record.time, {})[record.member] = record.community
    return [Snapshot(time=t, assignment=grouped[t]) for t in sorted(grouped)]


def _iter_csv_rows(text: str):
    reader = csv.reader(io.StringIO(text, newline=""))
    while True:
        try:
            row = next(reader)
        except StopIteration:
            return
        except csv.Error as exc:
            raise ParseError(f"malformed CSV: {exc}", line=reader.line_num) from None
        yield reader.line_num, row


def _parse_membership_csv(text: str) -> list[MembershipRecord]:
    records: list[MembershipRecord] = []
    seen: dict[tuple[int, str], int] = {}
    saw_row = False
    for line, row in _iter_csv_rows(text):
        if not row:
            continue
        if not saw_row:
            saw_row = True
            if [field.strip().lower() for field in row] == _MEMBERSHIP_HEADER:
                continue
        if len(row) != 3:
            raise ParseError(f"expected 3 fields, got {len(row)}", line=line)
        time_raw, member, community = row
        try:
            time = int(time_raw)
        except ValueError:
            raise ParseError(f"time {time_raw!r} is not an integer", line=line) from None
        if not member:
            raise ParseError("member id is empty", line=line)
        if not community:
            raise ParseError("community id is empty", line=line)
        if (time, member) in seen:
            raise DuplicateMember(
                f"member {member!r} already assigned at time {time} "
                f"(first seen on line {seen[(time, member)]})",
                line=line,
            )
        seen[(time, member)] = line
        records.append(MembershipRecord(time, member, community))
    return records


def _parse_membership_jsonl(text: str) -> list[MembershipRecord]:
    records: list[MembershipRecord] = []
    seen: dict[tuple[int, str], int] = {}
    for line, raw in enumerate(text.split("\n"), start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=line) from None
        if not isinstance(obj, dict):
            raise ParseError("record must be a JSON object", line=line)
        time = obj.get("t")
        member = obj.get("member")
        community = obj.get("community")
        if isinstance(time, bool) or not isinstance(time, int):
            raise ParseError(f"field 't' must be an integer, got {time!r}", line=line)
        if not isinstance(member, str) or not member:
            raise ParseError("field 'member' must be a non-empty string", line=line)
        if not isinstance(community, str) or not community:
            raise ParseError("field 'community' must be a non-empty string", line=line)
        if (time, member) in seen:
            raise DuplicateMember(
                f"member {member!r} already assigned at time {time} "
                f"(first seen on line {seen[(time, member)]})",
                line=line,
            )
        seen[(time, member)] = line
        records.append(MembershipRecord(time, member, community))
    return records


def parse_membership(text: str, format: str = "csv") -> list[Snapshot]:
    """Parse membership records into snapshots, grouped by time, ascending.

    ``format`` is ``"csv"`` or ``"jsonl"``.  Raises ParseError (with a line
    number), DuplicateMember for a repeated (time, member) pair, or
    EmptyInput when nothing parses.
    """
    if format == "csv":
        records = _parse_membership_csv(text)
    elif format == "jsonl":
        records = _parse_membership_jsonl(text)
    else:
        raise InvalidParameter(f"unknown membership format {format!r}")
    if not records:
        raise EmptyInput("input contains no membership records")
    return _records_to_snapshots(records)


def write_membership(snapshots: Iterable[Snapshot], format: str = "csv") -> str:
    """Serialize snapshots back to membership records (inverse of parsing)."""
    rows = [
        (snapshot.time, member, snapshot.assignment[member])
        for snapshot in snapshots
        for member in sorted(snapshot.assignment)
    ]
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(_MEMBERSHIP_HEADER)
        for time, member, community in rows:
            writer.writerow([time, member, community])
        return buffer.getvalue()
    if format == "jsonl":
        lines = [
            json.dumps({"t": time, "member": member, "community": community})
            for time, member, community in rows
        ]
        return "".join(line + "\n" for line in lines)
    raise InvalidParameter(f"unknown membership format {format!r}")


def _entry_dict(entry: ReportEntry) -> dict:
    b = entry.breakdown
    return {
        "community": entry.community,
        "size": entry.size,
        "eta": b.eta,
        "m": b.m,
        "entropy": b.entropy,
        "max_entropy": b.max_entropy,
        "sigma": b.sigma,
        "split": b.split,
        "shrink": b.shrink,
        "trend": entry.trend.label,
    }


def report_document(reports: Sequence[TransitionReport]) -> dict:
    """The JSON-ready tree form of a report list."""
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "reports": [
            {
                "from_time": report.from_time,
                "to_time": report.to_time,
                "n": report.n,
                "m": report.m,
                "forward": [_entry_dict(e) for e in report.forward],
                "backward": [_entry_dict(e) for e in report.backward],
            }
            for report in reports
        ],
    }


def write_report(reports: Sequence[TransitionReport], format: str = "csv") -> str:
    """Serialize transition reports.

    CSV holds one row per (direction, community) with numbers at 12
    significant digits; JSON keeps full float precision so it round-trips
    losslessly through read_report.
    """
    if format == "json":
        return json.dumps(report_document(reports), indent=2) + "\n"
    if format != "csv":
        raise InvalidParameter(f"unknown report format {format!r}")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(REPORT_CSV_COLUMNS)
    for report in reports:
        for direction, entries in (("forward", report.forward), ("backward", report.backward)):
            for entry in entries:
                b = entry.breakdown
                writer.writerow(
                    [
                        report.from_time,
                        report.to_time,
                        direction,
                        entry.community,
                        entry.size,
                        _fmt(b.eta),
                        b.m,
                        _fmt(b.entropy),
                        _fmt(b.max_entropy),
                        _fmt(b.sigma),
                        _fmt(b.split),
                        _fmt(b.shrink),
                        entry.trend.label,
                    ]
                )
    return buffer.getvalue()


def _entry_from_dict(obj: dict) -> ReportEntry:
    breakdown = IndexBreakdown(
        eta=obj["eta"],
        m=obj["m"],
        entropy=obj["entropy"],
        max_entropy=obj["max_entropy"],
        sigma=obj["sigma"],
        split=obj["split"],
        shrink=obj["shrink"],
    )
    trend = Trend(
        label=obj["trend"], split_value=obj["split"], shrink_value=obj["shrink"]
    )
    return ReportEntry(
        community=obj["community"], size=obj["size"], breakdown=breakdown, trend=trend
    )


def read_report(text: str) -> list[TransitionReport]:
    """Parse the JSON form produced by write_report back into reports."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict) or doc.get("schema_version") != REPORT_SCHEMA_VERSION:
        raise ParseError(
            f"expected a report document with schema_version {REPORT_SCHEMA_VERSION}"
        )
    try:
        return [
            TransitionReport(
                from_time=entry["from_time"],
                to_time=entry["to_time"],
                n=entry["n"],
                m=entry["m"],
                forward=tuple(_entry_from_dict(e) for e in entry["forward"]),
                backward=tuple(_entry_from_dict(e) for e in entry["backward"]),
            )
            for entry in doc["reports"]
        ]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed report document: {exc}") from None


def write_sweep(rows: Iterable[SweepRow]) -> str:
    """Serialize sweep rows as plot-ready CSV, preserving input order."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SWEEP_CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.mode,
                row.m,
                _fmt(row.eta),
                "" if row.seed is None else row.seed,
                _fmt(row.split),
                _fmt(row.shrink),
            ]
        )
    return buffer.getvalue()
