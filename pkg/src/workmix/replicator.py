"""Two-category replicator benchmark with linearly improving machine payoffs.

Routine and complex assignments evolve independently under the discrete
replicator rule

    x_next = x + r * x * (1 - x) * (machine_payoff(t) - human_payoff)

where the machine payoff for a category grows linearly in t, the number of
years elapsed since the start year.  The headline series is the weighted
total across the two categories.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParamError, RangeError

__all__ = [
    "CategoryParams",
    "ReplicatorParams",
    "ReplicatorPoint",
    "replicator_step",
    "simulate_replicator",
    "DEFAULT_REPLICATOR",
]


@dataclass(frozen=True)
class CategoryParams:
    """One task category: initial share plus its payoff schedule.

    The machine side earns machine_intercept + machine_growth * t at year
    offset t; the human side earns the constant human_payoff.
    """

    x0: float
    machine_intercept: float
    machine_growth: float
    human_payoff: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.x0 <= 1.0:
            raise ParamError(f"x0 must lie in [0, 1], got {self.x0}")

    def payoff_gap(self, t: int) -> float:
        """Machine payoff advantage at year offset t."""
        return self.machine_intercept + self.machine_growth * t - self.human_payoff


@dataclass(frozen=True)
class ReplicatorParams:
    routine: CategoryParams
    complex: CategoryParams
    sensitivity: float
    w_routine: float
    start_year: int = 2025

    def __post_init__(self) -> None:
        if not self.sensitivity > 0:
            raise ParamError(f"sensitivity must be positive, got {self.sensitivity}")
        if not 0.0 <= self.w_routine <= 1.0:
            raise ParamError(f"w_routine must lie in [0, 1], got {self.w_routine}")

    @property
    def w_complex(self) -> float:
        return 1.0 - self.w_routine


@dataclass(frozen=True)
class ReplicatorPoint:
    year: int
    x_routine: float
    x_complex: float
    x_total: float


def replicator_step(x: float, t: int, cat: CategoryParams, r: float) -> float:
    """One replicator update for a single category at year offset t.

    The result must stay inside [0, 1]; leaving it signals parameter misuse
    (an oversized sensitivity or payoff gap) and raises rather than clamps.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"share must lie in [0, 1], got {x}")
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    x_next = x + r * x * (1.0 - x) * cat.payoff_gap(t)
    if not 0.0 <= x_next <= 1.0:
        raise RangeError(
            f"replicator step left [0, 1]: x={x}, t={t} gave {x_next}"
        )
    return x_next


def simulate_replicator(
    params: ReplicatorParams, horizon_years: int
) -> list[ReplicatorPoint]:
    """Run both categories for horizon_years, including the initial state.

    Payoff time is calendar time: the step producing the point for year
    y + 1 uses the payoff gap at t = y - start_year, so the very first step
    is taken with t = 0.
    """
    if horizon_years < 1:
        raise DomainError(f"horizon_years must be >= 1, got {horizon_years}")
    x_r = params.routine.x0
    x_c = params.complex.x0

    def total(a: float, b: float) -> float:
        return params.w_routine * a + params.w_complex * b

    points = [ReplicatorPoint(params.start_year, x_r, x_c, total(x_r, x_c))]
    for t in range(horizon_years):
        x_r = replicator_step(x_r, t, params.routine, params.sensitivity)
        x_c = replicator_step(x_c, t, params.complex, params.sensitivity)
        points.append(
            ReplicatorPoint(params.start_year + t + 1, x_r, x_c, total(x_r, x_c))
        )
    return points


#: Default two-category scenario: routine work starts at 30% automated with a
#: machine payoff already near parity; complex work starts at 5% with a large
#: persistent human advantage.
DEFAULT_REPLICATOR = ReplicatorParams(
    routine=CategoryParams(
        x0=0.30, machine_intercept=1.0, machine_growth=0.05, human_payoff=0.8
    ),
    complex=CategoryParams(
        x0=0.05, machine_intercept=0.5, machine_growth=0.02, human_payoff=1.2
    ),
    sensitivity=0.2,
    w_routine=0.6,
    start_year=2025,
)
