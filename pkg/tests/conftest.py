"""Shared helpers for the test suite."""

import numpy as np
import pytest

from alphaindex.model import Dataset, Group, ResearcherProfile
from alphaindex.synth import synth_group


def random_group(rng: np.random.Generator, max_n: int = 50, max_h: int = 100) -> Group:
    """Random group with at least one positive h-index."""
    n = int(rng.integers(1, max_n + 1))
    hs = rng.integers(0, max_h + 1, size=n)
    if hs.max() == 0:
        hs[int(rng.integers(0, n))] = int(rng.integers(1, max_h + 1))
    return synth_group(f"g{rng.integers(1_000_000)}", [int(h) for h in hs])


def random_dataset(rng: np.random.Generator) -> Dataset:
    """Random valid dataset mixing per-paper and summary-only members."""
    groups = []
    for gi in range(int(rng.integers(1, 6))):
        members = []
        for mi in range(int(rng.integers(1, 9))):
            rid = f"r{gi}-{mi}"
            if rng.random() < 0.5:
                papers = tuple(int(c) for c in rng.integers(0, 60, size=int(rng.integers(1, 12))))
                h = _h_of(papers)
                members.append(
                    ResearcherProfile(
                        id=rid, h_index=h, total_citations=sum(papers), paper_citations=papers
                    )
                )
            else:
                h = int(rng.integers(0, 20))
                total = None if rng.random() < 0.3 else int(h * h + rng.integers(0, 500))
                members.append(ResearcherProfile(id=rid, h_index=h, total_citations=total))
        label = None if rng.random() < 0.5 else f"Group {gi}"
        tag = None if rng.random() < 0.5 else rng.choice(["A", "B", "C"])
        groups.append(
            Group(id=f"g{gi}", members=tuple(members), label=label, quality_tag=tag)
        )
    return Dataset(tuple(groups))


def _h_of(citations) -> int:
    h = 0
    for rank, c in enumerate(sorted(citations, reverse=True), start=1):
        if c >= rank:
            h = rank
    return h


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
