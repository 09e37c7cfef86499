"""Parameter sweeps and randomized verification of the index properties.

The sweep reproduces the characteristic index curves: the even distribution
traces the split maximum / shrink minimum, a single-target distribution the
opposite extreme, and seeded random distributions scatter in between.  The
property suite and gradient check re-derive, numerically, what the closed
forms promise; any violation they return is an implementation bug.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import InvalidParameter
from .indices import (
    Distribution,
    d_shrink_d_eta,
    d_shrink_d_m,
    d_split_d_eta,
    d_split_d_m,
    entropy,
    index_bounds,
    index_breakdown,
    shrink_index,
    split_index,
)

# Strict monotonicity is asserted as "grows by more than this", absorbing
# float noise without accepting ties.
MONOTONIC_SLACK = 1e-12

_BOUND_SLACK = 1e-12

SWEEP_MODES = ("even", "single", "random")

DEFAULT_GRADIENT_ETA_GRID = tuple(i / 10 for i in range(1, 10))
DEFAULT_GRADIENT_M_GRID = (1, 2, 4, 8)
DEFAULT_GRADIENT_STEP = 1e-6
GRADIENT_RELATIVE_TOLERANCE = 1e-5


@dataclass(frozen=True)
class SweepRow:
    """One (mode, m, eta) evaluation; ``seed`` is set for random rows only."""

    mode: str
    m: int
    eta: float
    seed: int | None
    split: float
    shrink: float


@dataclass(frozen=True)
class PropertyViolation:
    """A check that failed beyond tolerance, with everything needed to replay it."""

    property: str
    inputs: dict = field(default_factory=dict)
    observed: float = 0.0
    expected: float = 0.0


class AnalyticDerivatives(NamedTuple):
    """The analytic slopes the gradient check compares against.

    Swappable so tests can corrupt one on purpose and confirm the detector
    actually fires.
    """

    split_by_m: Callable[[float, float], float]
    shrink_by_m: Callable[[float, float], float]
    split_by_eta: Callable[[float], float]
    shrink_by_eta: Callable[[float, float, int], float]


REFERENCE_DERIVATIVES = AnalyticDerivatives(
    split_by_m=d_split_d_m,
    shrink_by_m=d_shrink_d_m,
    split_by_eta=d_split_d_eta,
    shrink_by_eta=d_shrink_d_eta,
)


def even_distribution(m: int) -> Distribution:
    """m equal weights 1/m."""
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"community count must be an integer >= 1, got {m!r}")
    return (1.0 / m,) * m


def single_target_distribution(m: int, target: int) -> Distribution:
    """All weight on one community; ``target`` is a 1-based position."""
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"community count must be an integer >= 1, got {m!r}")
    if not 1 <= target <= m:
        raise InvalidParameter(f"target position {target} out of range 1..{m}")
    return tuple(1.0 if j == target - 1 else 0.0 for j in range(m))


def random_distribution(m: int, seed: int) -> Distribution:
    """m normalized uniform(0, 1) draws from a Mersenne Twister seeded with ``seed``.

    Deterministic for a given (m, seed) on every platform.
    """
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"community count must be an integer >= 1, got {m!r}")
    rng = random.Random(seed)
    while True:
        draws = [rng.random() for _ in range(m)]
        total = math.fsum(draws)
        if total > 0.0:
            return tuple(d / total for d in draws)


def sweep(
    m_values: Iterable[int],
    eta_grid: Iterable[float],
    mode: str,
    seed: int = 0,
) -> list[SweepRow]:
    """Evaluate both indices over the (m, eta) grid for one distribution mode.

    Random rows derive their own seed as ``seed + row_index`` and carry it,
    so any single row can be regenerated in isolation.
    """
    if mode not in SWEEP_MODES:
        raise InvalidParameter(f"mode must be one of {SWEEP_MODES}, got {mode!r}")
    m_list = list(m_values)
    eta_list = list(eta_grid)
    if not m_list or not eta_list:
        raise InvalidParameter("sweep needs at least one m value and one eta value")
    rows: list[SweepRow] = []
    index = 0
    for m in m_list:
        for eta in eta_list:
            row_seed: int | None = None
            if mode == "even":
                dist = even_distribution(m)
            elif mode == "single":
                dist = single_target_distribution(m, 1)
            else:
                row_seed = seed + index
                dist = random_distribution(m, row_seed)
            b = index_breakdown(eta, dist, m)
            rows.append(
                SweepRow(mode=mode, m=m, eta=eta, seed=row_seed, split=b.split, shrink=b.shrink)
            )
            index += 1
    return rows


def standard_sweep(
    mode: str = "all",
    m_max: int = 10,
    eta_steps: int = 20,
    seed: int = 0,
) -> list[SweepRow]:
    """The conventional curve-family sweep: m = 1..m_max, eta = 0..1 in
    ``eta_steps`` equal steps, one block per mode ("all" runs every mode)."""
    if not isinstance(m_max, int) or m_max < 1:
        raise InvalidParameter(f"m_max must be an integer >= 1, got {m_max!r}")
    if not isinstance(eta_steps, int) or eta_steps < 1:
        raise InvalidParameter(f"eta_steps must be an integer >= 1, got {eta_steps!r}")
    modes = SWEEP_MODES if mode == "all" else (mode,)
    m_values = range(1, m_max + 1)
    eta_grid = [i / eta_steps for i in range(eta_steps + 1)]
    rows: list[SweepRow] = []
    for one_mode in modes:
        rows.extend(sweep(m_values, eta_grid, one_mode, seed))
    return rows


def _central_difference(f: Callable[[float], float], x: float, step: float) -> float:
    return (f(x + step) - f(x - step)) / (2.0 * step)


def gradient_check(
    eta_grid: Sequence[float] | None = None,
    m_grid: Sequence[int] | None = None,
    step: float = DEFAULT_GRADIENT_STEP,
    analytic: AnalyticDerivatives | None = None,
) -> list[PropertyViolation]:
    """Compare analytic index slopes against central finite differences.

    In the even-distribution regime the indices have smooth closed forms in
    both the leave fraction and a continuous community count; each analytic
    slope must match its numeric estimate within a relative 1e-5.  Returns
    the (normally empty) list of mismatches.
    """
    if not 0.0 < step <= 1e-3:
        raise InvalidParameter(f"step must be in (0, 1e-3], got {step!r}")
    if eta_grid is None:
        eta_grid = DEFAULT_GRADIENT_ETA_GRID
    if m_grid is None:
        m_grid = DEFAULT_GRADIENT_M_GRID
    for eta in eta_grid:
        if not step <= eta <= 1.0 - step:
            raise InvalidParameter(
                f"eta grid values must lie in [step, 1-step], got {eta!r}"
            )
    if analytic is None:
        analytic = REFERENCE_DERIVATIVES

    violations: list[PropertyViolation] = []

    def compare(check: str, eta: float, m: int, observed: float, expected: float) -> None:
        if not math.isclose(
            observed, expected, rel_tol=GRADIENT_RELATIVE_TOLERANCE, abs_tol=1e-12
        ):
            violations.append(
                PropertyViolation(
                    property="gradient",
                    inputs={"check": check, "eta": eta, "m": m, "step": step},
                    observed=observed,
                    expected=expected,
                )
            )

    for eta in eta_grid:
        for m in m_grid:
            if not isinstance(m, int) or m < 1:
                raise InvalidParameter(f"m grid values must be integers >= 1, got {m!r}")
            even = even_distribution(m)
            even_entropy = entropy(even)
            # Continuous-m closed forms of the even-distribution curves.
            split_of_m = lambda x, e=eta: (1.0 - e) * math.log2(x)
            shrink_of_m = lambda x, e=eta: e * e * math.log2(x)
            compare(
                "split/dm",
                eta,
                m,
                _central_difference(split_of_m, float(m), step),
                analytic.split_by_m(eta, m),
            )
            compare(
                "shrink/dm",
                eta,
                m,
                _central_difference(shrink_of_m, float(m), step),
                analytic.shrink_by_m(eta, m),
            )
            # The eta direction differentiates the real implementation.
            compare(
                "split/deta",
                eta,
                m,
                _central_difference(lambda e: split_index(e, even, m), eta, step),
                analytic.split_by_eta(even_entropy),
            )
            compare(
                "shrink/deta",
                eta,
                m,
                _central_difference(lambda e: shrink_index(e, even, m), eta, step),
                analytic.shrink_by_eta(eta, even_entropy, m),
            )
    return violations


def _random_weights(rng: random.Random, m: int) -> Distribution:
    while True:
        draws = [rng.random() for _ in range(m)]
        total = math.fsum(draws)
        if total <= 0.0:
            continue
        weights = tuple(d / total for d in draws)
        if entropy(weights) > 1e-6:
            return weights


def property_suite(trials: int, seed: int = 0) -> list[PropertyViolation]:
    """Randomized verification of the four index properties plus their range.

    Each trial draws (m, eta, distribution) from a substream seeded with
    ``seed + trial`` and checks: both indices strictly grow with the
    community count under an even distribution (P1); split falls and shrink
    rises as the leave fraction grows (P2); the even / single-target
    extremes and bounds of the split index (P3) and of the shrink index
    (P4); and that both indices stay inside [0, log2(m)].  Returns every
    violation found, normally none.
    """
    if trials < 1:
        raise InvalidParameter(f"trials must be >= 1, got {trials!r}")
    violations: list[PropertyViolation] = []

    for trial in range(trials):
        rng = random.Random(seed + trial)
        m = rng.randint(2, 16)
        eta = rng.random()
        while eta == 0.0:
            eta = rng.random()
        weights = _random_weights(rng, m)
        max_e = math.log2(m)
        inputs = {"trial": trial, "m": m, "eta": eta, "dist": list(weights)}

        def record(prop: str, observed: float, expected: float, **extra) -> None:
            violations.append(
                PropertyViolation(
                    property=prop,
                    inputs={**inputs, **extra},
                    observed=observed,
                    expected=expected,
                )
            )

        b = index_breakdown(eta, weights, m)
        b_even = index_breakdown(eta, even_distribution(m), m)
        b_even_next = index_breakdown(eta, even_distribution(m + 1), m + 1)
        b_single = index_breakdown(eta, single_target_distribution(m, rng.randint(1, m)), m)

        # P1: even-distribution indices strictly grow with the community count.
        if not b_even_next.split - b_even.split > MONOTONIC_SLACK:
            record("P1", b_even_next.split, b_even.split, compared="split")
        if not b_even_next.shrink - b_even.shrink > MONOTONIC_SLACK:
            record("P1", b_even_next.shrink, b_even.shrink, compared="shrink")

        # P2: at a fixed distribution, split falls and shrink rises in eta.
        eta_lo = rng.uniform(0.001, 0.49)
        eta_hi = eta_lo + rng.uniform(0.01, 0.5)
        lo = index_breakdown(eta_lo, weights, m)
        hi = index_breakdown(eta_hi, weights, m)
        if not lo.split - hi.split > MONOTONIC_SLACK:
            record("P2", hi.split, lo.split, eta_lo=eta_lo, eta_hi=eta_hi, compared="split")
        if not hi.shrink - lo.shrink > MONOTONIC_SLACK:
            record("P2", hi.shrink, lo.shrink, eta_lo=eta_lo, eta_hi=eta_hi, compared="shrink")

        # P3: split maximum at the even distribution, zero at a single target.
        split_cap = (1.0 - eta) * max_e
        if b.split > split_cap + _BOUND_SLACK:
            record("P3", b.split, split_cap)
        if abs(b_even.split - split_cap) > _BOUND_SLACK:
            record("P3", b_even.split, split_cap, compared="even-maximum")
        if b_single.split != 0.0:
            record("P3", b_single.split, 0.0, compared="single-minimum")

        # P4: shrink between eta^2*log2(m) and eta*log2(m), extremes attained.
        shrink_floor = eta * eta * max_e
        shrink_cap = eta * max_e
        if not shrink_floor - _BOUND_SLACK <= b.shrink <= shrink_cap + _BOUND_SLACK:
            record("P4", b.shrink, shrink_floor)
        if abs(b_single.shrink - shrink_cap) > _BOUND_SLACK:
            record("P4", b_single.shrink, shrink_cap, compared="single-maximum")
        if abs(b_even.shrink - shrink_floor) > _BOUND_SLACK:
            record("P4", b_even.shrink, shrink_floor, compared="even-minimum")
        single_community = index_breakdown(eta, (1.0,), 1)
        if single_community.shrink != 0.5 * eta * eta:
            record("P4", single_community.shrink, 0.5 * eta * eta, compared="m=1")

        # Common range: both indices inside [0, log2(m)] and index_bounds.
        bounds = index_bounds(eta, m)
        for name, value in (("split", b.split), ("shrink", b.shrink)):
            if not -_BOUND_SLACK <= value <= max_e + _BOUND_SLACK:
                record("range", value, max_e, compared=name)
        if not bounds.split_min - _BOUND_SLACK <= b.split <= bounds.split_max + _BOUND_SLACK:
            record("range", b.split, bounds.split_max, compared="split-bounds")
        if not bounds.shrink_min - _BOUND_SLACK <= b.shrink <= bounds.shrink_max + _BOUND_SLACK:
            record("range", b.shrink, bounds.shrink_max, compared="shrink-bounds")

    return violations
