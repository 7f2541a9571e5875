"""Parameter grid over intricacy shape (p, q) and improvement rate gamma.

Every cell recalibrates the machine intercept so the year-zero automated
share hits the same initial target under its own Beta(p, q) intricacy law,
then lets the swept gamma drive the boundary for the full horizon.  Reported
per cell: the calibrated intercept, the final share, and the first calendar
year the share reaches one half.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boundary import ContinuousParams, automated_share
from .errors import ParamError
from .numerics import BetaShape, inv_reg_inc_beta

__all__ = [
    "GridSpec",
    "GridCell",
    "run_grid",
    "cross50",
    "DEFAULT_GRID",
]


def _require_ascending(name: str, values: tuple) -> None:
    if not values:
        raise ParamError(f"{name} must be non-empty")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ParamError(f"{name} must be strictly ascending, got {values!r}")
    if any(not v > 0 for v in values):
        raise ParamError(f"{name} must be positive, got {values!r}")


@dataclass(frozen=True)
class GridSpec:
    """Sweep axes plus the quantities held fixed across cells."""

    p_values: tuple[float, ...]
    q_values: tuple[float, ...]
    gamma_values: tuple[float, ...]
    horizon_years: int
    initial_share_target: float
    alpha_h: float = 1.0
    beta_h: float = 1.5
    beta_m: float = 2.5
    start_year: int = 2025

    def __post_init__(self) -> None:
        _require_ascending("p_values", self.p_values)
        _require_ascending("q_values", self.q_values)
        _require_ascending("gamma_values", self.gamma_values)
        if self.horizon_years < 1:
            raise ParamError(
                f"horizon_years must be >= 1, got {self.horizon_years}"
            )
        if not 0.0 < self.initial_share_target < 1.0:
            raise ParamError(
                "initial_share_target must lie in (0, 1), got "
                f"{self.initial_share_target}"
            )


@dataclass(frozen=True)
class GridCell:
    """Outcome of one (p, q, gamma) cell."""

    p: float
    q: float
    gamma: float
    alpha_m_used: float
    final_share: float
    cross50_year: int | None


def cross50(params: ContinuousParams, horizon: int) -> int | None:
    """First calendar year with automated share >= 0.5, scanning whole years.

    Returns None when the share stays below one half through the horizon.
    """
    if horizon < 1:
        raise ParamError(f"horizon must be >= 1, got {horizon}")
    for t in range(horizon + 1):
        if automated_share(t, params) >= 0.5:
            return params.start_year + t
    return None


def run_grid(grid: GridSpec) -> list[GridCell]:
    """Evaluate every cell, emitted row-major: p outer, q middle, gamma inner."""
    cells = []
    for p in grid.p_values:
        for q in grid.q_values:
            shape = BetaShape(float(p), float(q))
            theta_start = inv_reg_inc_beta(grid.initial_share_target, shape)
            alpha_m = grid.alpha_h + (grid.beta_m + grid.beta_h) * theta_start
            for gamma in grid.gamma_values:
                params = ContinuousParams(
                    alpha_h=grid.alpha_h,
                    beta_h=grid.beta_h,
                    alpha_m=alpha_m,
                    beta_m=grid.beta_m,
                    gamma=float(gamma),
                    shape=shape,
                    start_year=grid.start_year,
                )
                cells.append(
                    GridCell(
                        p=p,
                        q=q,
                        gamma=gamma,
                        alpha_m_used=alpha_m,
                        final_share=automated_share(grid.horizon_years, params),
                        cross50_year=cross50(params, grid.horizon_years),
                    )
                )
    return cells


#: Default sweep: five intricacy shapes crossed with five improvement rates,
#: every cell pinned to a 10% automated share in the start year.
DEFAULT_GRID = GridSpec(
    p_values=(1.5, 2.0, 2.5, 3.0, 3.5),
    q_values=(5,),
    gamma_values=(0.03, 0.04, 0.05, 0.06, 0.07),
    horizon_years=20,
    initial_share_target=0.10,
)
