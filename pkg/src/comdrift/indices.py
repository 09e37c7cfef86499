"""Closed-form community evolution indices.

A community's change between two consecutive snapshots is summarised by two
numbers, both measured in bits: the *split* index, which grows when the
members who stayed scatter across many communities, and the *shrink* index,
which grows when members leave the project outright.  The same formulas run
time-reversed to produce the *merge* and *expand* indices.

Everything here is a pure function of its arguments; base-2 logarithms
throughout, with the 0 * log2(0) = 0 convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple

from .errors import InvalidDistribution, InvalidParameter

# Weights are renormalized when their sum is within this distance of 1,
# rejected otherwise; silent renormalization of junk hides ingestion bugs.
NORMALIZATION_TOLERANCE = 1e-9

# Anything this small is float dust; treat as an exact zero so log2 never
# sees it.
ZERO_WEIGHT_THRESHOLD = 1e-15

_LN2 = math.log(2.0)

Distribution = tuple[float, ...]

TrendLabel = Literal["splitting", "shrinking", "balanced", "stable"]

# Comparison thresholds for classify_trend.
_TREND_ABSOLUTE_ZERO = 1e-12
_TREND_RELATIVE_EQUAL = 1e-9


@dataclass(frozen=True)
class IndexBreakdown:
    """Every intermediate of one forward (or backward) index computation.

    ``eta`` is the fraction of members absent from the whole opposite
    snapshot, ``m`` the number of communities there.  For backward analysis
    the same fields hold the newcomer fraction and the source-community
    count.
    """

    eta: float
    m: int
    entropy: float
    max_entropy: float
    sigma: float
    split: float
    shrink: float


@dataclass(frozen=True)
class Trend:
    """Which index dominates, with the values that were compared."""

    label: TrendLabel
    split_value: float
    shrink_value: float


class IndexBounds(NamedTuple):
    split_min: float
    split_max: float
    shrink_min: float
    shrink_max: float


def _check_eta(eta: float) -> float:
    if not 0.0 <= eta <= 1.0:
        raise InvalidParameter(f"leave fraction must be in [0, 1], got {eta!r}")
    return float(eta)


def _check_count(m: int) -> int:
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"community count must be an integer >= 1, got {m!r}")
    return m


def as_distribution(weights: Iterable[float]) -> Distribution:
    """Validate and canonicalize a migration distribution.

    Returns a tuple with dust weights zeroed and the remainder renormalized
    to sum exactly to one.  An empty input is legal and stands for "all
    members left" (there is nothing to distribute).

    Raises InvalidDistribution for negative weights, weights above one, or a
    sum off by more than NORMALIZATION_TOLERANCE.
    """
    cleaned: list[float] = []
    for position, raw in enumerate(weights):
        w = float(raw)
        if abs(w) < ZERO_WEIGHT_THRESHOLD:
            w = 0.0
        if w < 0.0:
            raise InvalidDistribution(f"negative weight {raw!r} at position {position}")
        if w > 1.0 + NORMALIZATION_TOLERANCE:
            raise InvalidDistribution(f"weight {raw!r} at position {position} exceeds 1")
        cleaned.append(w)
    if not cleaned:
        return ()
    total = math.fsum(cleaned)
    if not abs(total - 1.0) <= NORMALIZATION_TOLERANCE:
        raise InvalidDistribution(
            f"weights sum to {total!r}; expected 1 within {NORMALIZATION_TOLERANCE}"
        )
    if total != 1.0:
        cleaned = [w / total for w in cleaned]
    return tuple(cleaned)


def _entropy_of(weights: Distribution) -> float:
    total = sum(w * math.log2(w) for w in weights if w > 0.0)
    # total is <= 0; avoid returning -0.0 for concentrated distributions.
    return -total if total != 0.0 else 0.0


def entropy(dist: Iterable[float]) -> float:
    """Shannon entropy of a migration distribution, in bits.

    Empty distributions have entropy 0 by convention.
    """
    return _entropy_of(as_distribution(dist))


def max_entropy(m: int) -> float:
    """log2(m): the entropy of a perfectly even migration over m communities."""
    return math.log2(_check_count(m))


def sigma(eta: float, m: int) -> float:
    """Single-community correction term: 0.5 * eta when m == 1, else 0.

    Without it the shrink index would be blind to departures when the next
    snapshot holds only one community.
    """
    eta = _check_eta(eta)
    _check_count(m)
    return 0.5 * eta if m == 1 else 0.0


def _validated(eta: float, dist: Iterable[float], m: int) -> tuple[float, Distribution]:
    eta = _check_eta(eta)
    _check_count(m)
    weights = as_distribution(dist)
    if weights and len(weights) != m:
        raise InvalidDistribution(
            f"distribution has {len(weights)} weights but there are {m} communities"
        )
    if not weights and eta != 1.0:
        raise InvalidDistribution(
            "empty distribution is only valid when every member left (leave fraction 1)"
        )
    return eta, weights


def _split_value(eta: float, weights: Distribution) -> float:
    # A community cannot split if everyone left, whatever the distribution.
    if eta == 1.0:
        return 0.0
    return (1.0 - eta) * _entropy_of(weights)


def split_index(eta: float, dist: Iterable[float], m: int) -> float:
    """(1 - eta) * entropy(dist): how widely the stayers scattered, in bits."""
    eta, weights = _validated(eta, dist, m)
    return _split_value(eta, weights)


def shrink_index(eta: float, dist: Iterable[float], m: int) -> float:
    """eta * (max_entropy - split + sigma): membership loss weighted against scattering."""
    eta, weights = _validated(eta, dist, m)
    split = _split_value(eta, weights)
    sig = 0.5 * eta if m == 1 else 0.0
    return eta * (math.log2(m) - split + sig)


def index_breakdown(eta: float, dist: Iterable[float], m: int) -> IndexBreakdown:
    """Compute both indices along with every intermediate quantity."""
    eta, weights = _validated(eta, dist, m)
    ent = _entropy_of(weights)
    max_e = math.log2(m)
    sig = 0.5 * eta if m == 1 else 0.0
    split = _split_value(eta, weights)
    shrink = eta * (max_e - split + sig)
    return IndexBreakdown(
        eta=eta,
        m=m,
        entropy=ent,
        max_entropy=max_e,
        sigma=sig,
        split=split,
        shrink=shrink,
    )


def d_split_d_m(eta: float, m: float) -> float:
    """Rate of change of the even-distribution split index as the community
    count grows: (1 - eta) / (m * ln 2).

    ``m`` is treated as a positive real so the value can be cross-checked
    with finite differences.
    """
    eta = _check_eta(eta)
    if not m > 0:
        raise InvalidParameter(f"community count must be positive, got {m!r}")
    return (1.0 - eta) / (m * _LN2)


def d_shrink_d_m(eta: float, m: float) -> float:
    """Even-distribution shrink index growth rate in m: eta^2 / (m * ln 2)."""
    eta = _check_eta(eta)
    if not m > 0:
        raise InvalidParameter(f"community count must be positive, got {m!r}")
    return eta * eta / (m * _LN2)


def d_split_d_eta(entropy_value: float) -> float:
    """Split index slope in the leave fraction: always -entropy."""
    if not entropy_value >= 0.0:
        raise InvalidParameter(f"entropy must be >= 0, got {entropy_value!r}")
    return -entropy_value


def d_shrink_d_eta(eta: float, entropy_value: float, m: int) -> float:
    """Shrink index slope in the leave fraction.

    log2(m) - (1 - 2*eta) * entropy for m > 1; for a single next-step
    community the slope is just eta and the entropy argument is ignored
    (it is necessarily 0 there).
    """
    eta = _check_eta(eta)
    _check_count(m)
    if m == 1:
        return eta
    if not entropy_value >= 0.0:
        raise InvalidParameter(f"entropy must be >= 0, got {entropy_value!r}")
    max_e = math.log2(m)
    if entropy_value > max_e + NORMALIZATION_TOLERANCE:
        raise InvalidParameter(
            f"entropy {entropy_value!r} exceeds the maximum log2({m}) = {max_e!r}"
        )
    return max_e - (1.0 - 2.0 * eta) * entropy_value


def index_bounds(eta: float, m: int) -> IndexBounds:
    """Attainable [min, max] ranges of both indices at a given (eta, m).

    The split index peaks at an even migration and bottoms out at zero; the
    shrink index moves opposite, peaking when all stayers co-migrate.  With a
    single next-step community both indices collapse to constants.
    """
    eta = _check_eta(eta)
    _check_count(m)
    max_e = math.log2(m)
    split_max = (1.0 - eta) * max_e
    if m == 1:
        pinned = eta * (0.5 * eta)
        return IndexBounds(0.0, split_max, pinned, pinned)
    return IndexBounds(0.0, split_max, eta * eta * max_e, eta * max_e)


def classify_trend(breakdown: IndexBreakdown) -> Trend:
    """Label which index dominates a breakdown.

    "stable" when both are zero (within 1e-12), "balanced" when nonzero and
    equal within a relative 1e-9, otherwise whichever index is larger wins.
    """
    split, shrink = breakdown.split, breakdown.shrink
    if abs(split) <= _TREND_ABSOLUTE_ZERO and abs(shrink) <= _TREND_ABSOLUTE_ZERO:
        label: TrendLabel = "stable"
    elif abs(split - shrink) <= _TREND_RELATIVE_EQUAL * max(abs(split), abs(shrink)):
        label = "balanced"
    elif split > shrink:
        label = "splitting"
    else:
        label = "shrinking"
    return Trend(label=label, split_value=split, shrink_value=shrink)
