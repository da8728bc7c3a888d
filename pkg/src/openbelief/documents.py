"""Evidence documents (.evj) and deterministic table emission.

An evidence document is UTF-8 JSON carrying one frame and any number of
named bodies of evidence:

    {
      "frame": ["a", "b", "c"],
      "bodies": [
        {"id": "m1",
         "masses": [{"focal": ["a"], "mass": 0.6},
                    {"focal": [], "mass": 0.4}]}
      ]
    }

``"focal": []`` addresses the empty set, which may carry mass. Body masses
must total 1; a document-level ``"renormalize": true`` (or the parser's
``renormalize=True`` override, surfaced as a CLI flag) opts in to rescaling
instead, for sensor dumps whose sums have drifted. Masses are serialized
with 12 significant digits, comfortably beyond the 4 decimals evidence is
usually reported with.

Result tables are emitted as CSV (RFC 4180 quoting, LF line endings,
floats fixed to 6 decimals) or as a JSON array of objects; both forms are
byte-deterministic.
"""

from __future__ import annotations

import csv
import io
import json
from math import fsum
from typing import Iterable, Mapping, Sequence

from .errors import DocumentError, DomainError, EvidenceError
from .frames import Frame, Gbpa, Subset

TABLE_FORMATS = ("csv", "json")


class EvidenceDocument:
    """A frame plus an ordered list of (body id, mass assignment) pairs."""

    __slots__ = ("_frame", "_bodies", "_by_id")

    def __init__(self, frame: Frame, bodies: Iterable[tuple[str, Gbpa]]):
        bodies = tuple(bodies)
        by_id: dict[str, Gbpa] = {}
        for body_id, gbpa in bodies:
            if not isinstance(body_id, str) or not body_id:
                raise DocumentError(f"body id must be a non-empty string, got {body_id!r}")
            if body_id in by_id:
                raise DocumentError(f'duplicate body id "{body_id}"')
            if gbpa.frame != frame:
                raise DocumentError(f'body "{body_id}" uses a different frame')
            by_id[body_id] = gbpa
        self._frame = frame
        self._bodies = bodies
        self._by_id = by_id

    @property
    def frame(self) -> Frame:
        return self._frame

    @property
    def bodies(self) -> tuple[tuple[str, Gbpa], ...]:
        return self._bodies

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(body_id for body_id, _ in self._bodies)

    def body(self, body_id: str) -> Gbpa:
        try:
            return self._by_id[body_id]
        except KeyError:
            raise DomainError(f'unknown body id "{body_id}"') from None

    def __len__(self) -> int:
        return len(self._bodies)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EvidenceDocument)
            and self._frame == other._frame
            and self._bodies == other._bodies
        )


def parse_evidence_document(
    data: bytes | str, *, renormalize: bool | None = None
) -> EvidenceDocument:
    """Parse and fully validate an evidence document.

    ``renormalize=None`` honours the document's own flag (default off);
    ``True``/``False`` override it. Error messages carry the JSON location
    for syntax problems and the body id / field path for semantic ones.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"document is not valid UTF-8: {exc}") from exc
    else:
        text = data
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(raw, dict):
        raise DocumentError("top level must be a JSON object")

    labels = raw.get("frame")
    if not isinstance(labels, list) or not all(isinstance(l, str) for l in labels):
        raise DocumentError('"frame" must be a list of strings')
    try:
        frame = Frame(labels)
    except EvidenceError as exc:
        raise DocumentError(f"frame: {exc}") from exc

    flag = raw.get("renormalize", False)
    if not isinstance(flag, bool):
        raise DocumentError('"renormalize" must be a boolean')
    rescale = flag if renormalize is None else renormalize

    bodies_raw = raw.get("bodies")
    if not isinstance(bodies_raw, list):
        raise DocumentError('"bodies" must be a list')
    bodies: list[tuple[str, Gbpa]] = []
    seen_ids: set[str] = set()
    for i, entry in enumerate(bodies_raw):
        where = f"bodies[{i}]"
        if not isinstance(entry, dict):
            raise DocumentError(f"{where}: body must be an object")
        body_id = entry.get("id")
        if not isinstance(body_id, str) or not body_id:
            raise DocumentError(f'{where}: "id" must be a non-empty string')
        if body_id in seen_ids:
            raise DocumentError(f'{where}: duplicate body id "{body_id}"')
        seen_ids.add(body_id)
        where = f'{where} (id "{body_id}")'
        bodies.append((body_id, _parse_body(frame, entry, where, rescale)))
    return EvidenceDocument(frame, bodies)


def _parse_body(frame: Frame, entry: dict, where: str, rescale: bool) -> Gbpa:
    masses_raw = entry.get("masses")
    if not isinstance(masses_raw, list) or not masses_raw:
        raise DocumentError(f'{where}: "masses" must be a non-empty list')
    assignments: list[tuple[Subset, float]] = []
    seen_bits: set[int] = set()
    for j, item in enumerate(masses_raw):
        spot = f"{where}.masses[{j}]"
        if not isinstance(item, dict):
            raise DocumentError(f"{spot}: entry must be an object")
        focal = item.get("focal")
        if not isinstance(focal, list) or not all(isinstance(l, str) for l in focal):
            raise DocumentError(f'{spot}: "focal" must be a list of frame labels')
        try:
            subset = frame.subset(focal)
        except EvidenceError as exc:
            raise DocumentError(f"{spot}: {exc}") from exc
        if subset.bits in seen_bits:
            raise DocumentError(
                f"{spot}: duplicate focal set {{{','.join(subset.members())}}}"
            )
        seen_bits.add(subset.bits)
        mass = item.get("mass")
        if isinstance(mass, bool) or not isinstance(mass, (int, float)):
            raise DocumentError(f'{spot}: "mass" must be a number')
        assignments.append((subset, float(mass)))

    if rescale:
        total = fsum(mass for _, mass in assignments)
        if total <= 0.0:
            raise DocumentError(f"{where}: cannot renormalize, masses sum to {total!r}")
        assignments = [(subset, mass / total) for subset, mass in assignments]
    try:
        return Gbpa(frame, assignments)
    except EvidenceError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


def serialize_evidence_document(document: EvidenceDocument) -> bytes:
    """Canonical .evj bytes; parsing them back recovers the document."""
    payload = {
        "frame": list(document.frame.labels),
        "bodies": [
            {
                "id": body_id,
                "masses": [
                    {"focal": list(subset.members()), "mass": _round12(mass)}
                    for subset, mass in gbpa.items()
                ],
            }
            for body_id, gbpa in document.bodies
        ],
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _round12(value: float) -> float:
    return float(f"{value:.12g}")


def emit_table(
    rows: Sequence[Mapping[str, object]],
    fmt: str = "csv",
    *,
    columns: Sequence[str] | None = None,
) -> bytes:
    """Render homogeneous records as deterministic CSV or JSON bytes.

    Column order follows ``columns`` when given, otherwise the key order of
    the first record; an empty table needs explicit columns. CSV floats are
    fixed to 6 decimals.
    """
    if fmt not in TABLE_FORMATS:
        raise DomainError(f"unknown table format {fmt!r}; expected one of {TABLE_FORMATS}")
    if columns is None:
        if not rows:
            raise DomainError("columns are required to emit an empty table")
        columns = list(rows[0].keys())
    else:
        columns = list(columns)
    for i, row in enumerate(rows):
        if set(row.keys()) != set(columns):
            raise DomainError(f"row {i} does not match columns {columns}")

    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row[col]) for col in columns])
        return out.getvalue().encode("utf-8")
    payload = [{col: row[col] for col in columns} for row in rows]
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)
