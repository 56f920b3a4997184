"""Citation and h-index distribution analyses.

Covers the statistical toolbox used around group ranking: the log-log
citations-vs-h slope, stretched-exponential shape estimation by moment
ratios, a Giddings peak-shape fit for h-index histograms, excess kurtosis
and skewness, a Shapiro-Wilk normality test in Royston's extended form
(3 <= n <= 5000), and histogram construction with linear or geometric bins.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize
from scipy.special import ndtri

from .errors import (
    BinSpecError,
    FitDivergedError,
    InsufficientDataError,
    SampleSizeError,
    ZeroVarianceError,
)
from .special import bessel_i1_scaled

# ---------------------------------------------------------------------------
# histograms

BINNING_MODES = ("linear", "geometric")
_MAX_BINS = 1_000_000


@dataclass(frozen=True)
class Histogram:
    """Binned counts with strictly increasing edges; bins are half-open.

    ``build_histogram`` always produces integer counts.  Real-valued counts
    are accepted so that noiseless synthetic targets can be fitted without
    rounding artifacts.
    """

    bin_edges: tuple[float, ...]
    counts: tuple[float, ...]
    binning_mode: str

    def __post_init__(self):
        if len(self.bin_edges) != len(self.counts) + 1:
            raise ValueError("need exactly one more edge than counts")
        if any(b >= a for a, b in zip(self.bin_edges[1:], self.bin_edges)):
            raise ValueError("bin edges must be strictly increasing")

    def centers(self) -> tuple[float, ...]:
        return tuple(
            0.5 * (lo + hi) for lo, hi in zip(self.bin_edges, self.bin_edges[1:])
        )

    def widths(self) -> tuple[float, ...]:
        return tuple(hi - lo for lo, hi in zip(self.bin_edges, self.bin_edges[1:]))


def build_histogram(
    data: Sequence[float], mode: str, bin_width_or_ratio: float
) -> Histogram:
    """Histogram of ``data`` with linear (fixed width) or geometric (fixed
    ratio) bins anchored at the data minimum.

    Geometric bins suit citation-scale data spanning orders of magnitude and
    require strictly positive values.
    """
    if mode not in BINNING_MODES:
        raise BinSpecError(f"unknown binning mode {mode!r}")
    xs = np.asarray(list(data), dtype=float)
    if xs.size == 0:
        raise BinSpecError("no data to bin")
    lo = float(xs.min())
    hi = float(xs.max())

    if mode == "linear":
        width = float(bin_width_or_ratio)
        if width <= 1e-12:
            raise BinSpecError(f"bin width must exceed 1e-12, got {width}")
        n_bins = int((hi - lo) / width) + 1
        if n_bins > _MAX_BINS:
            raise BinSpecError(f"{n_bins} bins exceed the {_MAX_BINS} limit")
        edges = [lo + j * width for j in range(n_bins + 1)]
        while edges[-1] <= hi:  # guard against float shortfall on the last edge
            edges.append(lo + len(edges) * width)
    else:
        ratio = float(bin_width_or_ratio)
        if ratio <= 1.0:
            raise BinSpecError(f"geometric bin ratio must exceed 1, got {ratio}")
        if lo <= 0:
            raise BinSpecError("geometric binning requires positive data")
        edges = [lo]
        while edges[-1] <= hi:
            edges.append(lo * ratio ** len(edges))
            if len(edges) > _MAX_BINS:
                raise BinSpecError(f"more than {_MAX_BINS} bins; increase the ratio")

    edge_arr = np.asarray(edges)
    idx = np.searchsorted(edge_arr, xs, side="right") - 1
    counts = np.bincount(idx, minlength=len(edges) - 1)
    return Histogram(
        bin_edges=tuple(float(e) for e in edges),
        counts=tuple(int(c) for c in counts),
        binning_mode=mode,
    )


# ---------------------------------------------------------------------------
# log-log slope of citations against h-index


class PowerLawFit(NamedTuple):
    slope: float
    intercept: float
    points_used: int
    points_dropped: int


def power_law_slope(pairs: Sequence[tuple[int, int]]) -> PowerLawFit:
    """Least-squares slope of log(citations) on log(h-index).

    Pairs with a zero on either side are dropped (their logs are undefined)
    and reported in ``points_dropped``.  The intercept is in natural-log
    units.
    """
    usable = [(h, x) for h, x in pairs if h >= 1 and x >= 1]
    dropped = len(pairs) - len(usable)
    if len(usable) < 2:
        raise InsufficientDataError(
            f"log-log fit needs at least 2 usable pairs, got {len(usable)}"
        )
    log_h = np.log([h for h, _ in usable])
    log_x = np.log([x for _, x in usable])
    dh = log_h - log_h.mean()
    denom = float(dh @ dh)
    if denom == 0.0:
        raise InsufficientDataError("all h values identical; slope is undefined")
    slope = float(dh @ (log_x - log_x.mean())) / denom
    intercept = float(log_x.mean() - slope * log_h.mean())
    return PowerLawFit(slope, intercept, len(usable), dropped)


# ---------------------------------------------------------------------------
# stretched-exponential shape via moment ratios
#
# For the density ~ exp(-(x/x0)^beta) the ratio <x^k>/<x>^k is independent
# of the scale x0, which lets beta be estimated without fitting x0.

DEFAULT_BETA_GRID = tuple(round(0.20 + 0.02 * i, 2) for i in range(8))
DEFAULT_K_GRID = tuple(round(1.0 + 0.1 * i, 1) for i in range(21))


def _ln_theoretical_moment_ratio(k: float, beta: float) -> float:
    return (
        math.lgamma((k + 1) / beta)
        + (k - 1) * math.lgamma(1 / beta)
        - k * math.lgamma(2 / beta)
    )


def theoretical_moment_ratio(k: float, beta: float) -> float:
    """Scale-free moment ratio of the stretched exponential:

        M_k = Gamma((k+1)/beta) * Gamma(1/beta)^(k-1) / Gamma(2/beta)^k.

    M_1 is identically 1.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if beta <= 0:
        raise ValueError(f"beta must be positive, got {beta}")
    return math.exp(_ln_theoretical_moment_ratio(k, beta))


def empirical_moment_ratio(k: float, data: Sequence[float]) -> float:
    """Sample analog of :func:`theoretical_moment_ratio`:

        R_k = n^(k-1) * sum(x_i^k) / (sum x_i)^k  =  <x^k> / <x>^k.

    Requires strictly positive data (fractional powers of zero-citation
    entries are meaningless here; callers exclude them and report it).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    xs = np.asarray(list(data), dtype=float)
    if xs.size == 0:
        raise InsufficientDataError("moment ratio of an empty sample")
    if np.any(xs <= 0):
        raise ValueError("moment ratios require strictly positive data")
    n = xs.size
    return float(n ** (k - 1) * (xs**k).sum() / xs.sum() ** k)


@dataclass(frozen=True)
class StretchedExpFit:
    """Grid-search result for the stretched-exponential shape parameter."""

    beta: float
    grid: tuple[float, ...]
    objective_per_beta: tuple[float, ...]
    k_grid: tuple[float, ...]


def fit_beta(
    data: Sequence[float],
    beta_grid: Sequence[float] = DEFAULT_BETA_GRID,
    k_grid: Sequence[float] = DEFAULT_K_GRID,
    log_residuals: bool = True,
) -> StretchedExpFit:
    """Pick the grid beta whose theoretical moment ratios best match the
    sample's, summing squared residuals over the k grid.

    Residuals are taken in log space by default: the ratios span orders of
    magnitude across k, and raw residuals would let the largest k dominate.
    Pass ``log_residuals=False`` for a raw-space sensitivity check.
    """
    xs = np.asarray(list(data), dtype=float)
    if xs.size < 10:
        raise InsufficientDataError(f"shape fit needs n >= 10, got {xs.size}")
    if np.any(xs <= 0):
        raise ValueError("shape fit requires strictly positive data")
    beta_grid = tuple(float(b) for b in beta_grid)
    k_grid = tuple(float(k) for k in k_grid)
    if not beta_grid or not k_grid:
        raise ValueError("beta_grid and k_grid must be non-empty")
    if any(b <= 0 for b in beta_grid):
        raise ValueError("beta grid values must be positive")
    if any(k < 1 for k in k_grid):
        raise ValueError("k grid values must be >= 1")

    n = xs.size
    ln_sum = math.log(float(xs.sum()))
    ln_r = np.array(
        [
            (k - 1) * math.log(n) + math.log(float((xs**k).sum())) - k * ln_sum
            for k in k_grid
        ]
    )
    objectives = []
    for beta in beta_grid:
        ln_m = np.array([_ln_theoretical_moment_ratio(k, beta) for k in k_grid])
        if log_residuals:
            resid = ln_m - ln_r
        else:
            resid = np.exp(ln_m) - np.exp(ln_r)
        objectives.append(float(resid @ resid))
    best = int(np.argmin(objectives))
    return StretchedExpFit(
        beta=beta_grid[best],
        grid=beta_grid,
        objective_per_beta=tuple(objectives),
        k_grid=k_grid,
    )


# ---------------------------------------------------------------------------
# Giddings peak-shape fit for h-index histograms


@dataclass(frozen=True)
class GiddingsFit:
    """Parameters of the Giddings peak shape (see :func:`giddings_eval`)."""

    baseline: float
    amplitude: float
    width: float
    center: float
    residual_ss: float = 0.0
    converged: bool = True

    def __post_init__(self):
        if self.amplitude < 0:
            raise ValueError(f"amplitude must be non-negative, got {self.amplitude}")
        if self.width <= 0:
            raise ValueError(f"width must be positive, got {self.width}")
        if self.center <= 0:
            raise ValueError(f"center must be positive, got {self.center}")
        if self.residual_ss < 0:
            raise ValueError(f"residual_ss must be non-negative, got {self.residual_ss}")


def giddings_eval(h: float, params: GiddingsFit) -> float:
    """Giddings peak shape at ``h > 0``:

        baseline + (amplitude/width) * sqrt(center/h)
                 * I1(2*sqrt(center*h)/width) * exp(-(h + center)/width).

    Evaluated with the exponentially scaled Bessel function, so the value is
    finite for any positive parameters even where I1 alone would overflow.
    """
    if h <= 0:
        raise ValueError(f"peak shape is defined for h > 0, got {h}")
    return params.baseline + _giddings_peak(
        h, params.amplitude, params.width, params.center
    )


def _giddings_peak(h: float, amplitude: float, width: float, center: float) -> float:
    arg = 2.0 * math.sqrt(center * h) / width
    exponent = -((math.sqrt(h) - math.sqrt(center)) ** 2) / width
    return (
        (amplitude / width)
        * math.sqrt(center / h)
        * bessel_i1_scaled(arg)
        * math.exp(exponent)
    )


def fit_giddings(
    hist: Histogram,
    restarts: int = 8,
    jitter: float = 0.5,
    tol: float = 1e-9,
    seed: int = 0,
) -> GiddingsFit:
    """Least-squares Giddings fit of bin counts at bin centers.

    The peak shape is multimodal in parameter space, so a derivative-free
    simplex search is run from a data-driven start plus ``restarts - 1``
    jittered copies; the restart with the lowest residual wins, ties broken
    by restart index.  ``converged`` reflects whether that restart's simplex
    collapsed below ``tol``.
    """
    centers = np.asarray(hist.centers())
    counts = np.asarray(hist.counts, dtype=float)
    widths = np.asarray(hist.widths())
    if np.any(centers <= 0):
        raise ValueError("peak-shape fit needs bins at positive h")
    if int((counts > 0).sum()) < 6:
        raise InsufficientDataError(
            "peak-shape fit needs at least 6 non-empty bins "
            "(4 parameters + 2 degrees of freedom)"
        )

    x0 = np.array(_initial_guess(centers, counts, widths))
    scale = np.where(np.abs(x0) > 1e-6, np.abs(x0), 1.0)

    def objective(theta):
        baseline, amplitude, width, center = theta * scale
        if amplitude <= 0 or width <= 0 or center <= 0:
            return 1e300
        resid = (
            baseline
            + np.array([_giddings_peak(h, amplitude, width, center) for h in centers])
            - counts
        )
        return float(resid @ resid)

    rng = np.random.default_rng(seed)
    candidates = []
    for r in range(restarts):
        start = x0 if r == 0 else x0 * (1.0 + rng.uniform(-jitter, jitter, size=4))
        result = minimize(
            objective,
            start / scale,
            method="Nelder-Mead",
            options={"xatol": tol, "fatol": tol, "maxiter": 20000, "maxfev": 40000},
        )
        candidates.append((float(result.fun), r, result))
    best_ss, _, best = min(candidates, key=lambda c: (c[0], c[1]))
    if not any(c[2].success for c in candidates):
        raise FitDivergedError(f"no restart converged within tolerance {tol}")

    baseline, amplitude, width, center = best.x * scale
    return GiddingsFit(
        baseline=float(baseline),
        amplitude=float(amplitude),
        width=float(width),
        center=float(center),
        residual_ss=best_ss,
        converged=bool(best.success),
    )


def _initial_guess(centers, counts, widths):
    mode = int(np.argmax(counts))
    peak = counts[mode]
    above_half = np.nonzero(counts >= 0.5 * peak)[0]
    span = centers[above_half[-1]] - centers[above_half[0]]
    width0 = span / 2.0 if span > 0 else float(widths.mean())
    amplitude0 = float((counts * widths).sum())
    if amplitude0 <= 0:
        amplitude0 = 1.0
    return float(counts.min()), amplitude0, width0, float(centers[mode])


# ---------------------------------------------------------------------------
# shape statistics of a sample


def _central_moment(xs: np.ndarray, order: int) -> float:
    return float(((xs - xs.mean()) ** order).mean())


def kurtosis(data: Sequence[float]) -> float:
    """Excess kurtosis, ``mu4 / mu2^2 - 3`` with population central moments.

    Zero for a normal distribution; positive values flag heavy tails.
    """
    xs = np.asarray(list(data), dtype=float)
    if xs.size < 2:
        raise ValueError(f"kurtosis needs n >= 2, got {xs.size}")
    m2 = _central_moment(xs, 2)
    if m2 == 0.0:
        raise ZeroVarianceError("kurtosis of constant data is undefined")
    return _central_moment(xs, 4) / m2**2 - 3.0


def skewness(data: Sequence[float]) -> float:
    """Skewness, ``mu3 / mu2^1.5`` with population central moments."""
    xs = np.asarray(list(data), dtype=float)
    if xs.size < 2:
        raise ValueError(f"skewness needs n >= 2, got {xs.size}")
    m2 = _central_moment(xs, 2)
    if m2 == 0.0:
        raise ZeroVarianceError("skewness of constant data is undefined")
    return _central_moment(xs, 3) / m2**1.5


# ---------------------------------------------------------------------------
# Shapiro-Wilk normality test (Royston's approximation, 3 <= n <= 5000)

_SW_TOP1 = (0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056)
_SW_TOP2 = (0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633)
_SW_MU_SMALL = (0.5440, -0.39978, 0.025054, -6.714e-4)  # in n, 4 <= n <= 11
_SW_SIGMA_SMALL = (1.3822, -0.77857, 0.062767, -0.0020322)
_SW_MU_LARGE = (-1.5861, -0.31082, -0.083751, 0.0038915)  # in ln n, n >= 12
_SW_SIGMA_LARGE = (-0.4803, -0.082676, 0.0030302)


def _poly(coeffs, x: float) -> float:
    total = 0.0
    for c in reversed(coeffs):
        total = total * x + c
    return total


@dataclass(frozen=True)
class NormalityReport:
    """Shapiro-Wilk verdict plus the tail/symmetry statistics of the sample."""

    statistic: float
    p_value: float
    kurtosis: float
    skewness: float
    normal_at_5pct: bool


def _sw_weights(n: int) -> np.ndarray:
    if n == 3:
        return np.array([-math.sqrt(0.5), 0.0, math.sqrt(0.5)])
    m = ndtri((np.arange(1, n + 1) - 0.375) / (n + 0.25))
    ssq = float(m @ m)
    u = 1.0 / math.sqrt(n)
    a = np.empty(n)
    a_top = m[-1] / math.sqrt(ssq) + _poly(_SW_TOP1, u)
    if n > 5:
        a_top2 = m[-2] / math.sqrt(ssq) + _poly(_SW_TOP2, u)
        fac = math.sqrt(
            (ssq - 2.0 * m[-1] ** 2 - 2.0 * m[-2] ** 2)
            / (1.0 - 2.0 * a_top**2 - 2.0 * a_top2**2)
        )
        a[2 : n - 2] = m[2 : n - 2] / fac
        a[-2], a[1] = a_top2, -a_top2
    else:
        fac = math.sqrt((ssq - 2.0 * m[-1] ** 2) / (1.0 - 2.0 * a_top**2))
        a[1 : n - 1] = m[1 : n - 1] / fac
    a[-1], a[0] = a_top, -a_top
    return a


def shapiro_wilk(data: Sequence[float]) -> NormalityReport:
    """W statistic and p-value for the hypothesis that the sample is normal.

    Weights come from normal order-statistic approximations and the p-value
    from the normalizing transformation of W, valid for 3 <= n <= 5000.
    ``normal_at_5pct`` is True when p > 0.05.
    """
    xs = sorted(float(v) for v in data)
    n = len(xs)
    if not 3 <= n <= 5000:
        raise SampleSizeError(f"normality test supports 3 <= n <= 5000, got {n}")
    if xs[0] == xs[-1]:
        raise ZeroVarianceError("normality test of constant data is undefined")

    arr = np.asarray(xs)
    a = _sw_weights(n)
    centered = arr - arr.mean()
    w = float(a @ arr) ** 2 / float(centered @ centered)
    w = min(w, 1.0)

    if n == 3:
        p = (6.0 / math.pi) * (math.asin(math.sqrt(w)) - math.asin(math.sqrt(0.75)))
        p = min(max(p, 0.0), 1.0)
    elif w >= 1.0:
        p = 1.0
    elif n <= 11:
        gamma = 0.459 * n - 2.273
        y = math.log(1.0 - w)
        if y >= gamma:
            p = 0.0
        else:
            z = (-math.log(gamma - y) - _poly(_SW_MU_SMALL, n)) / math.exp(
                _poly(_SW_SIGMA_SMALL, n)
            )
            p = 0.5 * math.erfc(z / math.sqrt(2.0))
    else:
        ln_n = math.log(n)
        z = (math.log(1.0 - w) - _poly(_SW_MU_LARGE, ln_n)) / math.exp(
            _poly(_SW_SIGMA_LARGE, ln_n)
        )
        p = 0.5 * math.erfc(z / math.sqrt(2.0))

    return NormalityReport(
        statistic=w,
        p_value=p,
        kurtosis=kurtosis(xs),
        skewness=skewness(xs),
        normal_at_5pct=p > 0.05,
    )
