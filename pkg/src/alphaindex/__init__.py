"""Rank researcher groups by the alpha-index.

The alpha-index weighs a group's Monte Carlo size-normalized h-index
("relative h-group") by the homogeneity of its members' h-indexes (the
complement of the Gini amplifier), producing comparable quality weights for
committees or boards of different sizes.  Supporting statistics for citation
and h-index distributions live in :mod:`alphaindex.distribution`.
"""

from .distribution import (
    GiddingsFit,
    Histogram,
    NormalityReport,
    PowerLawFit,
    StretchedExpFit,
    build_histogram,
    empirical_moment_ratio,
    fit_beta,
    fit_giddings,
    giddings_eval,
    kurtosis,
    power_law_slope,
    shapiro_wilk,
    skewness,
    theoretical_moment_ratio,
)
from .errors import (
    AlphaIndexError,
    BinSpecError,
    DegenerateGroupError,
    FitDivergedError,
    InsufficientDataError,
    SampleSizeError,
    SampleTooLargeError,
    TooFewGroupsError,
    ZeroVarianceError,
)
from .ingest import (
    IngestReport,
    read_dataset,
    read_dataset_file,
    read_long_form,
    read_summary_form,
    write_dataset,
)
from .metrics import (
    GroupMetrics,
    LorenzCurve,
    gini,
    group_metrics,
    group_summary,
    h_group,
    h_index,
    lorenz_curve,
    psi_curve,
)
from .model import Dataset, Group, ResearcherProfile, Violation, validate
from .ranking import (
    RankingConfig,
    RankingReport,
    RankingRow,
    SubsetStream,
    rank,
    rank_from_precomputed,
    relative_h_group,
)
from .special import bessel_i1
from .synth import StretchedExpParams, sample_stretched_exp, synth_group

__version__ = "0.1.0"

__all__ = [
    "AlphaIndexError",
    "BinSpecError",
    "Dataset",
    "DegenerateGroupError",
    "FitDivergedError",
    "GiddingsFit",
    "Group",
    "GroupMetrics",
    "Histogram",
    "IngestReport",
    "InsufficientDataError",
    "LorenzCurve",
    "NormalityReport",
    "PowerLawFit",
    "RankingConfig",
    "RankingReport",
    "RankingRow",
    "ResearcherProfile",
    "SampleSizeError",
    "SampleTooLargeError",
    "StretchedExpFit",
    "StretchedExpParams",
    "SubsetStream",
    "TooFewGroupsError",
    "Violation",
    "ZeroVarianceError",
    "bessel_i1",
    "build_histogram",
    "empirical_moment_ratio",
    "fit_beta",
    "fit_giddings",
    "giddings_eval",
    "gini",
    "group_metrics",
    "group_summary",
    "h_group",
    "h_index",
    "kurtosis",
    "lorenz_curve",
    "power_law_slope",
    "psi_curve",
    "rank",
    "rank_from_precomputed",
    "read_dataset",
    "read_dataset_file",
    "read_long_form",
    "read_summary_form",
    "relative_h_group",
    "sample_stretched_exp",
    "shapiro_wilk",
    "skewness",
    "synth_group",
    "theoretical_moment_ratio",
    "validate",
    "write_dataset",
]
