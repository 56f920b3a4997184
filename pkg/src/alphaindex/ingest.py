"""File parsing, validation, and serialization of datasets.

Two tabular schemas are first-class because public bibliometric data comes
both ways: *long form* with one row per paper (h-indexes are then computed
here) and *summary form* with one row per researcher.  A JSON document
format round-trips datasets losslessly.  Parsers never raise on bad content;
every problem is collected into the returned :class:`IngestReport` with its
row number or document path.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .metrics import h_index
from .model import Dataset, Group, ResearcherProfile, validate

LONG_FORM_HEADER = ("group_id", "researcher_id", "paper_id", "citations")
SUMMARY_FORM_HEADER = ("group_id", "researcher_id", "h_index", "total_citations")


@dataclass(frozen=True)
class IngestReport:
    """Outcome of one ingest: a dataset iff no errors, plus diagnostics."""

    dataset: Dataset | None
    warnings: tuple[str, ...] = field(default_factory=tuple)
    errors: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.dataset is not None


def _open_rows(source, delimiter: str):
    """Yield CSV rows from a path or an open file/line iterable."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8", newline="") as fh:
            yield from csv.reader(fh, delimiter=delimiter)
    else:
        yield from csv.reader(source, delimiter=delimiter)


def _check_header(row, expected, errors) -> dict[str, int] | None:
    names = [c.strip() for c in row]
    unknown = [c for c in names if c not in expected]
    missing = [c for c in expected if c not in names]
    dupes = [c for c in set(names) if names.count(c) > 1]
    if unknown:
        errors.append(f"row 1: unknown column(s) {unknown}; expected {list(expected)}")
    if missing:
        errors.append(f"row 1: missing column(s) {missing}")
    if dupes:
        errors.append(f"row 1: duplicated column(s) {sorted(dupes)}")
    if unknown or missing or dupes:
        return None
    return {name: names.index(name) for name in expected}


def read_long_form(source, delimiter: str = ",") -> IngestReport:
    """Parse per-paper rows ``group_id,researcher_id,paper_id,citations``.

    Rows are grouped by (group, researcher) in first-appearance order;
    each member's h-index and citation total are computed from its papers.
    """
    errors: list[str] = []
    warnings: list[str] = []
    papers: dict[tuple[str, str], list[int]] = {}
    seen_papers: set[tuple[str, str, str]] = set()

    rows = iter(_open_rows(source, delimiter))
    header = next(rows, None)
    if header is None:
        return IngestReport(None, errors=("no rows",))
    columns = _check_header(header, LONG_FORM_HEADER, errors)
    if columns is None:
        return IngestReport(None, errors=tuple(errors))

    n_rows = 0
    for lineno, row in enumerate(rows, start=2):
        n_rows += 1
        if len(row) != len(LONG_FORM_HEADER):
            errors.append(f"row {lineno}: expected {len(LONG_FORM_HEADER)} fields, got {len(row)}")
            continue
        gid = row[columns["group_id"]].strip()
        rid = row[columns["researcher_id"]].strip()
        pid = row[columns["paper_id"]].strip()
        raw = row[columns["citations"]].strip()
        if not gid or not rid or not pid:
            errors.append(f"row {lineno}: blank group_id, researcher_id, or paper_id")
            continue
        try:
            cites = int(raw)
        except ValueError:
            errors.append(f"row {lineno}: citations {raw!r} is not an integer")
            continue
        if cites < 0:
            errors.append(f"row {lineno}: negative citations {cites}")
            continue
        if (gid, rid, pid) in seen_papers:
            errors.append(f"row {lineno}: duplicate paper {pid!r} for {rid!r} in {gid!r}")
            continue
        seen_papers.add((gid, rid, pid))
        papers.setdefault((gid, rid), []).append(cites)

    if n_rows == 0:
        errors.append("no data rows")
    if errors:
        return IngestReport(None, warnings=tuple(warnings), errors=tuple(errors))

    groups: dict[str, list[ResearcherProfile]] = {}
    for (gid, rid), cites in papers.items():
        groups.setdefault(gid, []).append(
            ResearcherProfile(
                id=rid,
                h_index=h_index(cites),
                total_citations=sum(cites),
                paper_citations=tuple(cites),
            )
        )
    dataset = Dataset(tuple(Group(id=gid, members=tuple(ms)) for gid, ms in groups.items()))
    return IngestReport(dataset, warnings=tuple(warnings))


def read_summary_form(source, delimiter: str = ",") -> IngestReport:
    """Parse per-researcher rows ``group_id,researcher_id,h_index,total_citations``.

    ``total_citations`` may be empty; such members are kept with a warning
    since citation-distribution analyses will have to exclude them.
    """
    errors: list[str] = []
    warnings: list[str] = []
    members: dict[str, list[ResearcherProfile]] = {}
    seen: set[tuple[str, str]] = set()

    rows = iter(_open_rows(source, delimiter))
    header = next(rows, None)
    if header is None:
        return IngestReport(None, errors=("no rows",))
    columns = _check_header(header, SUMMARY_FORM_HEADER, errors)
    if columns is None:
        return IngestReport(None, errors=tuple(errors))

    n_rows = 0
    for lineno, row in enumerate(rows, start=2):
        n_rows += 1
        if len(row) != len(SUMMARY_FORM_HEADER):
            errors.append(f"row {lineno}: expected {len(SUMMARY_FORM_HEADER)} fields, got {len(row)}")
            continue
        gid = row[columns["group_id"]].strip()
        rid = row[columns["researcher_id"]].strip()
        h_raw = row[columns["h_index"]].strip()
        total_raw = row[columns["total_citations"]].strip()
        if not gid or not rid:
            errors.append(f"row {lineno}: blank group_id or researcher_id")
            continue
        try:
            h = int(h_raw)
        except ValueError:
            errors.append(f"row {lineno}: h_index {h_raw!r} is not an integer")
            continue
        if h < 0:
            errors.append(f"row {lineno}: negative h_index {h}")
            continue
        total: int | None = None
        if total_raw:
            try:
                total = int(total_raw)
            except ValueError:
                errors.append(f"row {lineno}: total_citations {total_raw!r} is not an integer")
                continue
            if total < 0:
                errors.append(f"row {lineno}: negative total_citations {total}")
                continue
            if h > total:
                errors.append(
                    f"row {lineno}: h_index {h} exceeds total_citations {total}"
                )
                continue
        else:
            warnings.append(
                f"row {lineno}: {rid!r} has no total_citations; "
                "citation-distribution analyses will exclude this member"
            )
        if (gid, rid) in seen:
            errors.append(f"row {lineno}: duplicate researcher {rid!r} in group {gid!r}")
            continue
        seen.add((gid, rid))
        members.setdefault(gid, []).append(
            ResearcherProfile(id=rid, h_index=h, total_citations=total)
        )

    if n_rows == 0:
        errors.append("no data rows")
    if errors:
        return IngestReport(None, warnings=tuple(warnings), errors=tuple(errors))
    dataset = Dataset(tuple(Group(id=gid, members=tuple(ms)) for gid, ms in members.items()))
    return IngestReport(dataset, warnings=tuple(warnings))


# ---------------------------------------------------------------------------
# structured (JSON) document format

_GROUP_KEYS = {"id", "label", "quality_tag", "members"}
_MEMBER_KEYS = {"id", "h_index", "total_citations", "paper_citations"}


def write_dataset(dataset: Dataset) -> dict:
    """Lossless document form of a dataset; see :func:`read_dataset`."""
    groups = []
    for g in dataset.groups:
        doc: dict = {"id": g.id, "label": g.label}
        if g.quality_tag is not None:
            doc["quality_tag"] = g.quality_tag
        doc["members"] = [_member_doc(m) for m in g.members]
        groups.append(doc)
    return {"groups": groups}


def _member_doc(m: ResearcherProfile) -> dict:
    doc: dict = {"id": m.id, "h_index": m.h_index}
    if m.total_citations is not None:
        doc["total_citations"] = m.total_citations
    if m.paper_citations is not None:
        doc["paper_citations"] = list(m.paper_citations)
    return doc


def read_dataset(document: dict) -> IngestReport:
    """Parse a document produced by :func:`write_dataset`.

    Unknown keys are rejected; every schema problem is reported with the
    path to the offending node.  A structurally valid document is then run
    through model validation, and any violations are reported as errors.
    """
    errors: list[str] = []
    if not isinstance(document, dict):
        return IngestReport(None, errors=("document: expected an object",))
    unknown = set(document) - {"groups"}
    if unknown:
        errors.append(f"document: unknown key(s) {sorted(unknown)}")
    raw_groups = document.get("groups")
    if not isinstance(raw_groups, list):
        errors.append("groups: expected a list")
        return IngestReport(None, errors=tuple(errors))

    groups = []
    for gi, raw in enumerate(raw_groups):
        path = f"groups[{gi}]"
        group = _parse_group(raw, path, errors)
        if group is not None:
            groups.append(group)
    if errors:
        return IngestReport(None, errors=tuple(errors))

    dataset = Dataset(tuple(groups))
    violations = validate(dataset)
    if violations:
        return IngestReport(None, errors=tuple(str(v) for v in violations))
    return IngestReport(dataset)


def _parse_group(raw, path: str, errors: list[str]) -> Group | None:
    if not isinstance(raw, dict):
        errors.append(f"{path}: expected an object")
        return None
    unknown = set(raw) - _GROUP_KEYS
    if unknown:
        errors.append(f"{path}: unknown key(s) {sorted(unknown)}")
        return None
    if "id" not in raw or not isinstance(raw["id"], str) or not raw["id"]:
        errors.append(f"{path}: missing or invalid 'id'")
        return None
    if "members" not in raw:
        errors.append(f"{path}: missing 'members'")
        return None
    if not isinstance(raw["members"], list) or not raw["members"]:
        errors.append(f"{path}.members: expected a non-empty list")
        return None
    label = raw.get("label")
    if label is not None and not isinstance(label, str):
        errors.append(f"{path}.label: expected a string")
        return None
    tag = raw.get("quality_tag")
    if tag is not None and not isinstance(tag, str):
        errors.append(f"{path}.quality_tag: expected a string")
        return None

    members = []
    ok = True
    for mi, member_raw in enumerate(raw["members"]):
        member = _parse_member(member_raw, f"{path}.members[{mi}]", errors)
        if member is None:
            ok = False
        else:
            members.append(member)
    if not ok:
        return None
    return Group(id=raw["id"], members=tuple(members), label=label, quality_tag=tag)


def _parse_member(raw, path: str, errors: list[str]) -> ResearcherProfile | None:
    if not isinstance(raw, dict):
        errors.append(f"{path}: expected an object")
        return None
    unknown = set(raw) - _MEMBER_KEYS
    if unknown:
        errors.append(f"{path}: unknown key(s) {sorted(unknown)}")
        return None
    if "id" not in raw or not isinstance(raw["id"], str) or not raw["id"]:
        errors.append(f"{path}: missing or invalid 'id'")
        return None
    if "h_index" not in raw or not _is_int(raw["h_index"]) or raw["h_index"] < 0:
        errors.append(f"{path}.h_index: expected a non-negative integer")
        return None
    total = raw.get("total_citations")
    if total is not None and (not _is_int(total) or total < 0):
        errors.append(f"{path}.total_citations: expected a non-negative integer")
        return None
    papers = raw.get("paper_citations")
    if papers is not None:
        if not isinstance(papers, list) or not all(_is_int(c) and c >= 0 for c in papers):
            errors.append(f"{path}.paper_citations: expected a list of non-negative integers")
            return None
        papers = tuple(papers)
    return ResearcherProfile(
        id=raw["id"], h_index=raw["h_index"], total_citations=total, paper_citations=papers
    )


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


# ---------------------------------------------------------------------------
# format sniffing for file-based workflows


def read_dataset_file(path: str | os.PathLike, delimiter: str = ",") -> IngestReport:
    """Load a dataset from a JSON document or a tabular file.

    ``.json`` files are parsed as structured documents; anything else is
    treated as tabular and dispatched on its header row.
    """
    path = Path(path)
    if path.suffix.lower() == ".json":
        try:
            with open(path, encoding="utf-8") as fh:
                document = json.load(fh)
        except json.JSONDecodeError as exc:
            return IngestReport(None, errors=(f"invalid JSON: {exc}",))
        return read_dataset(document)

    with open(path, encoding="utf-8", newline="") as fh:
        header_line = fh.readline()
        names = {c.strip() for c in next(csv.reader([header_line], delimiter=delimiter), [])}
        fh.seek(0)
        if names == set(LONG_FORM_HEADER):
            return read_long_form(fh, delimiter)
        if names == set(SUMMARY_FORM_HEADER):
            return read_summary_form(fh, delimiter)
        return IngestReport(
            None,
            errors=(
                "unrecognized header; expected "
                f"{','.join(LONG_FORM_HEADER)} or {','.join(SUMMARY_FORM_HEADER)}",
            ),
        )
