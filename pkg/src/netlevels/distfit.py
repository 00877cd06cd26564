"""Degree CCDFs and regression fits of power-law and Weibull models.

Both fits are ordinary least squares in the model's linearizing
coordinates: ``log10 F`` against ``log10 k`` for the power law and
``ln(-ln F)`` against ``ln k`` for the Weibull CCDF ``exp(-(k/b)^c)``.
Goodness is ``r_percent = 100 * |pearson r|`` in those coordinates.
"""

from __future__ import annotations

import io
import math
import os
import warnings
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

import numpy as np

from netlevels.classifier import EdgeClassification, split_degree_sequences
from netlevels.graph import Graph


class FitError(ValueError):
    """A fit's preconditions are not met."""


class FitWarning(UserWarning):
    pass


@dataclass(frozen=True)
class CCDFTable:
    k: np.ndarray
    F: np.ndarray
    n_samples: int

    @property
    def points(self) -> list[tuple[int, float]]:
        return list(zip(self.k.tolist(), self.F.tolist()))

    def __len__(self) -> int:
        return len(self.k)


def build_ccdf(degrees: Iterable[int] | np.ndarray) -> CCDFTable:
    """``F(k) = P(degree >= k)`` at each distinct degree ``k >= 1``.

    Zero-degree samples are dropped before normalizing.
    """
    d = np.asarray(list(degrees) if not isinstance(degrees, np.ndarray) else degrees)
    d = d.astype(np.int64, copy=False)
    if d.size and d.min() < 0:
        raise ValueError("negative degree")
    d = d[d >= 1]
    if d.size == 0:
        raise ValueError("no samples with degree >= 1")
    k, counts = np.unique(d, return_counts=True)
    at_least = np.cumsum(counts[::-1])[::-1]
    return CCDFTable(k, at_least / d.size, int(d.size))


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Sample Pearson correlation, accumulated in one pass (Welford co-moments)."""
    if len(xs) != len(ys):
        raise ValueError("length mismatch")
    if len(xs) < 2:
        raise ValueError("need at least two pairs")
    n = 0
    mx = my = 0.0
    sxx = syy = sxy = 0.0
    for x, y in zip(xs, ys):
        n += 1
        dx = x - mx
        mx += dx / n
        dy = y - my
        my += dy / n
        sxx += dx * (x - mx)
        syy += dy * (y - my)
        sxy += dx * (y - my)
    if sxx <= 0.0 or syy <= 0.0:
        raise ValueError("zero variance")
    r = sxy / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def _ols(x: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    xm, ym = x.mean(), y.mean()
    sxx = float(((x - xm) ** 2).sum())
    if sxx == 0.0:
        raise FitError("zero variance in log k")
    slope = float(((x - xm) * (y - ym)).sum()) / sxx
    return slope, float(ym - slope * xm)


def _r_percent(x: np.ndarray, y: np.ndarray) -> float:
    try:
        return 100.0 * abs(pearson(x.tolist(), y.tolist()))
    except ValueError as exc:
        raise FitError(str(exc)) from None


@dataclass(frozen=True)
class PowerLawFit:
    ccdf_slope: float
    intercept: float
    r_percent: float
    points_used: int

    @property
    def gamma(self) -> float:
        """Exponent of the density ``P(k) ~ k^-gamma`` implied by the CCDF slope."""
        return 1.0 - self.ccdf_slope

    def to_dict(self) -> dict:
        return {
            "ccdf_slope": self.ccdf_slope,
            "gamma": self.gamma,
            "intercept": self.intercept,
            "r_percent": self.r_percent,
            "points_used": self.points_used,
        }


@dataclass(frozen=True)
class WeibullFit:
    scale_b: float
    shape_c: float
    r_percent: float
    points_used: int
    degenerate: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def fit_power_law(ccdf: CCDFTable) -> PowerLawFit:
    ok = (ccdf.k >= 1) & (ccdf.F > 0)
    if ok.sum() < 3:
        raise FitError(f"power-law fit needs >= 3 points, have {int(ok.sum())}")
    x = np.log10(ccdf.k[ok].astype(float))
    y = np.log10(ccdf.F[ok])
    slope, intercept = _ols(x, y)
    return PowerLawFit(slope, intercept, _r_percent(x, y), int(ok.sum()))


def fit_weibull(ccdf: CCDFTable) -> WeibullFit:
    """Fit ``F(k) = exp(-(k/b)^c)``; points with F == 1 are not admissible."""
    ok = (ccdf.k >= 1) & (ccdf.F > 0) & (ccdf.F < 1)
    if ok.sum() < 3:
        raise FitError(f"Weibull fit needs >= 3 points with 0 < F < 1, have {int(ok.sum())}")
    x = np.log(ccdf.k[ok].astype(float))
    y = np.log(-np.log(ccdf.F[ok]))
    slope, intercept = _ols(x, y)
    r = _r_percent(x, y)
    if slope <= 0:
        warnings.warn(f"nonpositive Weibull shape {slope:.6g}", FitWarning, stacklevel=2)
        scale = math.exp(-intercept / slope) if slope < 0 else math.nan
        return WeibullFit(scale, slope, r, int(ok.sum()), degenerate=True)
    return WeibullFit(math.exp(-intercept / slope), slope, r, int(ok.sum()))


# ---------------------------------------------------------------- CCDF files


def format_ccdf(ccdf: CCDFTable) -> str:
    rows = ["k\tF\n"]
    rows += [f"{k}\t{f:.6g}\n" for k, f in ccdf.points]
    return "".join(rows)


def parse_ccdf(text: str | Iterable[str]) -> CCDFTable:
    """Read a ``k<TAB>F`` table (header optional)."""
    if isinstance(text, str):
        text = io.StringIO(text)
    ks: list[int] = []
    fs: list[float] = []
    for line_no, raw in enumerate(text, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {line_no}: expected 'k F', got {line!r}")
        if line_no == 1 and parts[0] == "k":
            continue
        try:
            ks.append(int(parts[0]))
            fs.append(float(parts[1]))
        except ValueError:
            raise ValueError(f"line {line_no}: bad number in {line!r}") from None
    if not ks:
        raise ValueError("empty CCDF table")
    k = np.array(ks, dtype=np.int64)
    F = np.array(fs)
    if np.any(np.diff(k) <= 0) or np.any(F <= 0) or np.any(F > 1):
        raise ValueError("CCDF table needs increasing k and F in (0, 1]")
    return CCDFTable(k, F, 0)


# ---------------------------------------------------------------- reports

TABLE_COLUMNS = ("dataset", "N", "E", "P2C", "P2P", "R_PL_t", "R_PL_p2c", "R_W_p2p", "R_W_t")


def sig6(x: float | None) -> float | None:
    """Round to 6 significant digits; non-finite values become None."""
    if x is None or not math.isfinite(x):
        return None
    return float(f"{x:.6g}")


@dataclass
class AnalysisReport:
    dataset_name: str
    n: int
    e: int
    p2c: int
    p2p: int
    r_pl_total: float | None
    r_pl_p2c: float | None
    r_w_p2p: float | None
    r_w_total: float | None
    fit_params: dict = field(default_factory=dict)
    ccdfs: dict = field(default_factory=dict, repr=False)
    provenance: dict = field(default_factory=dict)
    agreement: dict | None = None

    def table_row(self) -> tuple:
        return (
            self.dataset_name, self.n, self.e, self.p2c, self.p2p,
            self.r_pl_total, self.r_pl_p2c, self.r_w_p2p, self.r_w_total,
        )

    def fit_failures(self) -> list[str]:
        return [
            name for name, p in self.fit_params.items()
            if p is None or p.get("degenerate", False)
        ]

    def to_dict(self) -> dict:
        def clean(obj):
            if isinstance(obj, dict):
                return {k: clean(v) for k, v in obj.items()}
            if isinstance(obj, float):
                return sig6(obj)
            return obj

        out = {
            "dataset": self.dataset_name,
            "N": self.n,
            "E": self.e,
            "P2C": self.p2c,
            "P2P": self.p2p,
            "R_PL_t": self.r_pl_total,
            "R_PL_p2c": self.r_pl_p2c,
            "R_W_p2p": self.r_w_p2p,
            "R_W_t": self.r_w_total,
            "fit_params": self.fit_params,
            "provenance": self.provenance,
        }
        if self.agreement is not None:
            out["agreement"] = self.agreement
        return clean(out)


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def csv_header() -> str:
    return ",".join(TABLE_COLUMNS) + "\n"


def csv_row(report: AnalysisReport) -> str:
    return ",".join(_cell(x) for x in report.table_row()) + "\n"


def _try(fit, ccdf):
    if ccdf is None:
        return None
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", FitWarning)
            return fit(ccdf)
    except FitError:
        return None


def fit_report(g: Graph, c: EdgeClassification, name: str = "graph") -> AnalysisReport:
    """One summary row: counts plus the four headline fit correlations.

    Power law is also fitted to p2p and Weibull to p2c as diagnostics; those
    appear in ``fit_params`` only. A fit that cannot run leaves a None cell.
    """
    seqs = split_degree_sequences(g, c)
    ccdfs = {}
    for cls_name in ("total", "p2c", "p2p"):
        deg = getattr(seqs, cls_name)
        ccdfs[cls_name] = build_ccdf(deg) if deg.max(initial=0) >= 1 else None

    fits = {
        "power_law_total": _try(fit_power_law, ccdfs["total"]),
        "power_law_p2c": _try(fit_power_law, ccdfs["p2c"]),
        "power_law_p2p": _try(fit_power_law, ccdfs["p2p"]),
        "weibull_total": _try(fit_weibull, ccdfs["total"]),
        "weibull_p2c": _try(fit_weibull, ccdfs["p2c"]),
        "weibull_p2p": _try(fit_weibull, ccdfs["p2p"]),
    }

    def r(key):
        f = fits[key]
        return None if f is None else f.r_percent

    return AnalysisReport(
        dataset_name=name,
        n=g.node_count,
        e=g.edge_count,
        p2c=c.p2c_count,
        p2p=c.p2p_count,
        r_pl_total=r("power_law_total"),
        r_pl_p2c=r("power_law_p2c"),
        r_w_p2p=r("weibull_p2p"),
        r_w_total=r("weibull_total"),
        fit_params={k: (None if f is None else f.to_dict()) for k, f in fits.items()},
        ccdfs=ccdfs,
    )


def write_ccdfs(report: AnalysisReport, out_dir: str | os.PathLike) -> list[str]:
    written = []
    for cls_name in ("total", "p2c", "p2p"):
        path = os.path.join(out_dir, f"{cls_name}.ccdf.tsv")
        ccdf = report.ccdfs.get(cls_name)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(format_ccdf(ccdf) if ccdf is not None else "k\tF\n")
        written.append(path)
    return written
