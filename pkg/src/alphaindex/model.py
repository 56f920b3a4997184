"""Domain model: researcher profiles, groups, datasets, and validation.

All types are immutable after construction and therefore safe to share
across threads.  Construction enforces only structural sanity (non-negative
counts, non-empty groups); cross-field consistency is checked by
:func:`validate`, which reports violations as data rather than raising.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


@dataclass(frozen=True)
class ResearcherProfile:
    """One group member.

    ``paper_citations`` (citations per paper) is optional: public datasets
    often publish only the summary fields.  When it is present, ``h_index``
    and ``total_citations`` are expected to be consistent with it, which
    :func:`validate` checks.
    """

    id: str
    h_index: int
    total_citations: int | None = None
    paper_citations: tuple[int, ...] | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("researcher id must be non-empty")
        if self.h_index < 0:
            raise ValueError(f"{self.id}: h_index must be non-negative")
        if self.total_citations is not None and self.total_citations < 0:
            raise ValueError(f"{self.id}: total_citations must be non-negative")
        if self.paper_citations is not None:
            papers = tuple(int(c) for c in self.paper_citations)
            if any(c < 0 for c in papers):
                raise ValueError(f"{self.id}: paper citation counts must be non-negative")
            object.__setattr__(self, "paper_citations", papers)


@dataclass(frozen=True)
class Group:
    """A named committee or board.  Must have at least one member."""

    id: str
    members: tuple[ResearcherProfile, ...]
    label: str | None = None
    quality_tag: str | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("group id must be non-empty")
        members = tuple(self.members)
        if not members:
            raise ValueError(f"group {self.id!r} has no members")
        object.__setattr__(self, "members", members)
        if self.label is None:
            object.__setattr__(self, "label", self.id)

    def h_values(self) -> tuple[int, ...]:
        """Member h-indexes, in member order."""
        return tuple(m.h_index for m in self.members)


@dataclass(frozen=True)
class Dataset:
    """A collection of groups to analyze together."""

    groups: tuple[Group, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))


@dataclass(frozen=True)
class Violation:
    """One invariant violation found by :func:`validate`."""

    group_id: str | None
    member_id: str | None
    reason: str

    def __str__(self) -> str:
        where = []
        if self.group_id is not None:
            where.append(f"group {self.group_id!r}")
        if self.member_id is not None:
            where.append(f"member {self.member_id!r}")
        prefix = ", ".join(where)
        return f"{prefix}: {self.reason}" if prefix else self.reason


def validate(dataset: Dataset) -> list[Violation]:
    """Check every cross-field invariant; empty result means the dataset is valid.

    The checks are order-insensitive: permuting groups or members yields the
    same violation multiset.
    """
    from .metrics import h_index  # deferred to avoid a module cycle

    violations: list[Violation] = []

    group_ids = Counter(g.id for g in dataset.groups)
    for gid in sorted(gid for gid, cnt in group_ids.items() if cnt > 1):
        violations.append(
            Violation(gid, None, f"group id appears {group_ids[gid]} times; ids must be unique")
        )

    for group in dataset.groups:
        member_ids = Counter(m.id for m in group.members)
        for mid in sorted(mid for mid, cnt in member_ids.items() if cnt > 1):
            violations.append(
                Violation(
                    group.id,
                    mid,
                    f"member id appears {member_ids[mid]} times within the group",
                )
            )
        for member in group.members:
            violations.extend(
                Violation(group.id, member.id, reason) for reason in _profile_issues(member, h_index)
            )
    return violations


def _profile_issues(member: ResearcherProfile, h_index) -> list[str]:
    issues = []
    if member.paper_citations is not None:
        true_h = h_index(member.paper_citations)
        if member.h_index != true_h:
            issues.append(
                f"declared h_index {member.h_index} but per-paper citations give {true_h}"
            )
        true_total = sum(member.paper_citations)
        if member.total_citations != true_total:
            issues.append(
                f"declared total_citations {member.total_citations} but per-paper "
                f"citations sum to {true_total}"
            )
    if member.total_citations is not None and member.h_index > member.total_citations:
        issues.append(
            f"h_index {member.h_index} exceeds total_citations {member.total_citations}"
        )
    return issues
