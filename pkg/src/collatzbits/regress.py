"""Least-squares line through (input size, expanded size) points."""

from __future__ import annotations

import json
import math
import statistics
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .experiments import CSV_HEADER, ExperimentRecord


class DegenerateInputError(ValueError):
    pass


@dataclass(frozen=True)
class RegressionFit:
    slope: float
    intercept: float
    r_squared: float
    residual_min: float
    residual_q1: float
    residual_median: float
    residual_q3: float
    residual_max: float
    n_points: int

    def as_dict(self) -> dict:
        return asdict(self)


def fit_ols(points: Iterable[Sequence[float]]) -> RegressionFit:
    """Ordinary least squares fit of ``y = slope * x + intercept``.

    Sums are taken over centred values. The residual quartiles interpolate
    linearly between order statistics (the "inclusive" / type 7 rule).
    """
    pts = [(float(x), float(y)) for x, y in points]
    n = len(pts)
    if n < 2:
        raise DegenerateInputError(f"need at least 2 points, got {n}")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    # fsum keeps the result independent of point order
    x_bar = math.fsum(xs) / n
    y_bar = math.fsum(ys) / n
    sxx = math.fsum((x - x_bar) ** 2 for x in xs)
    if sxx == 0.0:
        raise DegenerateInputError("all x values are equal")
    sxy = math.fsum((x - x_bar) * (y - y_bar) for x, y in pts)
    slope = sxy / sxx
    intercept = y_bar - slope * x_bar

    residuals = [y - (slope * x + intercept) for x, y in pts]
    ss_res = math.fsum(r * r for r in residuals)
    ss_tot = math.fsum((y - y_bar) ** 2 for y in ys)
    if ss_tot == 0.0:
        r_squared = 1.0
    else:
        r_squared = min(1.0, max(0.0, 1.0 - ss_res / ss_tot))

    ordered = sorted(residuals)
    q1, med, q3 = statistics.quantiles(ordered, n=4, method="inclusive")
    return RegressionFit(
        slope=slope,
        intercept=intercept,
        r_squared=r_squared,
        residual_min=ordered[0],
        residual_q1=q1,
        residual_median=med,
        residual_q3=q3,
        residual_max=ordered[-1],
        n_points=n,
    )


def predict(fit: RegressionFit, x: float) -> float:
    return fit.slope * x + fit.intercept


def points_from_records(
    records: Iterable[ExperimentRecord], x: str = "integer_size", y: str = "expanded_size"
) -> list[tuple[int, int]]:
    for col in (x, y):
        if col not in CSV_HEADER:
            raise ValueError(f"unknown column {col!r}; choose from {', '.join(CSV_HEADER)}")
    return [(getattr(r, x), getattr(r, y)) for r in records]


def fit_records(
    records: Iterable[ExperimentRecord], x: str = "integer_size", y: str = "expanded_size"
) -> RegressionFit:
    return fit_ols(points_from_records(records, x, y))


def report_json(fit: RegressionFit) -> str:
    return json.dumps(fit.as_dict(), sort_keys=True)


def report_text(fit: RegressionFit, x: str = "x", y: str = "y") -> str:
    """Plain-text summary laid out like a console regression printout."""
    lines = [
        f"Fit: {y} ~ {x}",
        "",
        "Residuals:",
        "      Min        1Q    Median        3Q       Max",
        "{:9.5f} {:9.5f} {:9.5f} {:9.5f} {:9.5f}".format(
            fit.residual_min,
            fit.residual_q1,
            fit.residual_median,
            fit.residual_q3,
            fit.residual_max,
        ),
        "",
        "Coefficients:",
        f"  (Intercept) {fit.intercept:.6f}",
        f"  {x:<11} {fit.slope:.6f}",
        "",
        f"R-squared: {fit.r_squared:.6f}   points: {fit.n_points}",
    ]
    return "\n".join(lines) + "\n"
