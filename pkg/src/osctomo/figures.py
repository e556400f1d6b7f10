"""Reference figure surfaces: Fock tomograms of the parametric resonance.

Six standard surfaces are produced (all with the weak-resonance profile,
zero force, and eps from the closed-form approximation of
:func:`osctomo.dynamics.parametric_resonance_epsilon`):

    1   w_0(x, t)   frame (mu, nu) = (1, 0)
    2   w_0(x, t)   frame (1/sqrt2, 1/sqrt2)
    3   w_0(x, t)   frame (0, 1)
    4   w_2(x, t)   frame (1/sqrt2, 1/sqrt2)
    5   w_0(x, t_fixed)  optical sweep mu in (0, 1), nu = sqrt(1 - mu^2)
    6   w_0(x_fixed, t)  optical sweep mu in (0, 1)

Each figure is written as a plain CSV (comment header recording the
configuration, then a column-name row, then rows of three values) plus a
gnuplot script for a quick surface rendering.  Grid extents and counts
are package choices, recorded in the CSV header; they are not part of
any published reference.

Every written surface is validated structurally before the file is
accepted: all values must be finite and non-negative; w_0 slices along x
must be exact Gaussians (log-parabola fit residual below 1e-8); w_2
slices must show exactly the two interior zeros of the second Hermite
polynomial; and at k = 0 the frame-(1,0) surface must be independent of
time to 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .dynamics import parametric_resonance_epsilon
from .errors import ConsistencyError
from .states import fock_mdf

__all__ = [
    "FigureConfig",
    "FIGURE_IDS",
    "figure_table",
    "write_figure",
    "gaussian_slice_residual",
    "count_near_zero_minima",
    "time_independence_residual",
    "GAUSSIAN_FIT_TOL",
    "T_INDEPENDENCE_TOL",
]

GAUSSIAN_FIT_TOL = 1e-8
T_INDEPENDENCE_TOL = 1e-12
#: Interior minima below this fraction of the slice maximum count as zeros.
ZERO_MINIMUM_REL = 0.05

FIGURE_IDS = (1, 2, 3, 4, 5, 6)

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

#: figure id -> (Fock n, frame or None for the optical sweep)
_FIGURES = {
    1: (0, (1.0, 0.0)),
    2: (0, (_INV_SQRT2, _INV_SQRT2)),
    3: (0, (0.0, 1.0)),
    4: (2, (_INV_SQRT2, _INV_SQRT2)),
    5: (0, None),
    6: (0, None),
}


@dataclass(frozen=True)
class FigureConfig:
    """Grid/profile choices and validation tolerances for the figures."""

    k: float = 0.01
    t_max: float = 10.0
    t_count: int = 101
    x_min: float = -4.0
    x_max: float = 4.0
    x_count: int = 161
    mu_count: int = 101
    t_fixed: float = 4.0
    x_fixed: float = 0.0
    gaussian_fit_tol: float = GAUSSIAN_FIT_TOL
    t_independence_tol: float = T_INDEPENDENCE_TOL

    def __post_init__(self):
        for name in ("t_count", "x_count", "mu_count"):
            count = getattr(self, name)
            if int(count) != count or count < 2:
                raise ValueError(f"{name} must be an integer >= 2, got {count!r}")
        for name in ("k", "t_max", "x_min", "x_max", "t_fixed", "x_fixed"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not -0.5 < self.k < 0.5:
            raise ValueError(f"k must lie in (-0.5, 0.5), got {self.k}")
        if self.x_max <= self.x_min:
            raise ValueError("x_max must exceed x_min")
        if self.t_max <= 0:
            raise ValueError("t_max must be positive")
        if self.gaussian_fit_tol <= 0 or self.t_independence_tol <= 0:
            raise ValueError("validation tolerances must be positive")

    @classmethod
    def from_mapping(cls, mapping: dict) -> "FigureConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(mapping) - known
        if unknown:
            raise ValueError(f"unknown figure option(s): {', '.join(sorted(unknown))}")
        return cls(**{k: (int(v) if k.endswith("_count") else float(v)) for k, v in mapping.items()})


def _sweep_mu(cfg: FigureConfig) -> np.ndarray:
    # open interval (0, 1): drop both endpoints of a uniform subdivision
    return np.linspace(0.0, 1.0, cfg.mu_count + 2)[1:-1]


def figure_table(fig_id: int, cfg: FigureConfig | None = None):
    """Compute one figure.

    Returns ``(columns, first, second, values)`` where ``values`` has
    shape (len(second), len(first)): rows vary along the second (outer)
    coordinate, columns along the first.
    """
    cfg = cfg or FigureConfig()
    if fig_id not in _FIGURES:
        raise ValueError(f"figure id must be one of {FIGURE_IDS}, got {fig_id!r}")
    n, frame = _FIGURES[fig_id]
    x = np.linspace(cfg.x_min, cfg.x_max, cfg.x_count)
    t = np.linspace(0.0, cfg.t_max, cfg.t_count)

    if frame is not None:
        mu, nu = frame
        values = np.empty((cfg.t_count, cfg.x_count))
        for i, ti in enumerate(t):
            eps, eps_dot = parametric_resonance_epsilon(cfg.k, ti)
            values[i] = fock_mdf(n, eps, eps_dot, 0.0, x, mu, nu)
        return ("x", "t", "value"), x, t, values

    mus = _sweep_mu(cfg)
    nus = np.sqrt(1.0 - mus**2)
    if fig_id == 5:
        eps, eps_dot = parametric_resonance_epsilon(cfg.k, cfg.t_fixed)
        values = np.empty((len(mus), cfg.x_count))
        for j, (m, nu_) in enumerate(zip(mus, nus)):
            values[j] = fock_mdf(n, eps, eps_dot, 0.0, x, m, nu_)
        return ("x", "mu", "value"), x, mus, values

    values = np.empty((len(mus), cfg.t_count))
    for i, ti in enumerate(t):
        eps, eps_dot = parametric_resonance_epsilon(cfg.k, ti)
        values[:, i] = fock_mdf(n, eps, eps_dot, 0.0, cfg.x_fixed, mus, nus)
    return ("t", "mu", "value"), t, mus, values


def gaussian_slice_residual(x: np.ndarray, values: np.ndarray) -> float:
    """Worst sup-residual of a log-parabola fit over the rows of ``values``."""
    design = np.vander(x, 3)
    worst = 0.0
    for row in np.atleast_2d(values):
        logs = np.log(row)
        coef, *_ = np.linalg.lstsq(design, logs, rcond=None)
        worst = max(worst, float(np.max(np.abs(design @ coef - logs))))
    return worst


def count_near_zero_minima(row: np.ndarray, rel_threshold: float = ZERO_MINIMUM_REL) -> int:
    """Interior local minima sitting below rel_threshold * max(row)."""
    row = np.asarray(row, dtype=float)
    cut = rel_threshold * row.max()
    interior = (row[1:-1] < row[:-2]) & (row[1:-1] < row[2:]) & (row[1:-1] < cut)
    return int(np.count_nonzero(interior))


def time_independence_residual(values: np.ndarray) -> float:
    """Largest deviation of any row from the first row."""
    return float(np.max(np.abs(values - values[0])))


def _validate(fig_id: int, cfg: FigureConfig, first, second, values) -> None:
    if not np.all(np.isfinite(values)):
        raise ConsistencyError(f"figure {fig_id}: non-finite tomogram values")
    if np.any(values < 0):
        raise ConsistencyError(f"figure {fig_id}: negative tomogram values")
    if fig_id in (1, 2, 3, 5):
        residual = gaussian_slice_residual(first, values)
        if residual > cfg.gaussian_fit_tol:
            raise ConsistencyError(
                f"figure {fig_id}: ground-state slice deviates from a Gaussian "
                f"(log-parabola residual {residual:.3e} > {cfg.gaussian_fit_tol})"
            )
    if fig_id == 4:
        for i, row in enumerate(values):
            zeros = count_near_zero_minima(row)
            if zeros != 2:
                raise ConsistencyError(
                    f"figure 4: slice t = {second[i]:g} shows {zeros} interior "
                    "zeros, expected the 2 of the second Hermite polynomial"
                )
    if fig_id == 1 and cfg.k == 0.0:
        residual = time_independence_residual(values)
        if residual > cfg.t_independence_tol:
            raise ConsistencyError(
                f"figure 1: k = 0 surface varies in time by {residual:.3e}"
            )


_FIG_TITLES = {
    1: "w_0(x, t), frame mu=1 nu=0",
    2: "w_0(x, t), frame mu=nu=1/sqrt(2)",
    3: "w_0(x, t), frame mu=0 nu=1",
    4: "w_2(x, t), frame mu=nu=1/sqrt(2)",
    5: "w_0(x, t_fixed), optical sweep mu in (0, 1)",
    6: "w_0(x_fixed, t), optical sweep mu in (0, 1)",
}


def write_figure(fig_id: int, out_dir, cfg: FigureConfig | None = None) -> tuple[Path, Path]:
    """Compute, validate and write ``fig<N>.csv`` and ``fig<N>.gp``.

    Identical configuration yields byte-identical CSV output.
    """
    cfg = cfg or FigureConfig()
    columns, first, second, values = figure_table(fig_id, cfg)
    _validate(fig_id, cfg, first, second, values)

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"fig{fig_id}.csv"
    gp_path = out_dir / f"fig{fig_id}.gp"

    lines = [
        f"# osctomo figure {fig_id}: {_FIG_TITLES[fig_id]}",
        "# profile: parametric resonance k=%.12g, force=0, "
        "epsilon from the closed-form resonance approximation" % cfg.k,
        "# grid: %s in [%.12g, %.12g] (%d points), %s over %d points"
        % (columns[0], first[0], first[-1], len(first), columns[1], len(second)),
        ",".join(columns),
    ]
    for j, b in enumerate(second):
        for i, a in enumerate(first):
            lines.append(f"{a:.12g},{b:.12g},{values[j, i]:.12g}")
    csv_path.write_text("\n".join(lines) + "\n")

    gp_path.write_text(
        "\n".join(
            [
                f"# gnuplot surface script for fig{fig_id}.csv",
                'set datafile separator ","',
                "set key autotitle columnhead",
                f"set dgrid3d {len(second)},{len(first)}",
                "set hidden3d",
                f'set xlabel "{columns[0]}"',
                f'set ylabel "{columns[1]}"',
                'set zlabel "w"',
                f'splot "fig{fig_id}.csv" using 1:2:3 with lines notitle',
            ]
        )
        + "\n"
    )
    return csv_path, gp_path
