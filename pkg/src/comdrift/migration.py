"""Diff consecutive community snapshots into migration profiles and reports.

Forward profiles describe where a community's members went (split/shrink);
backward profiles describe where a community's members came from
(merge/expand).  The backward direction is literally the forward computation
on the time-reversed pair.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Literal, Mapping

from .errors import DegenerateTransition, SnapshotError, TimelineError
from .indices import (
    Distribution,
    IndexBreakdown,
    Trend,
    classify_trend,
    index_breakdown,
)

Direction = Literal["forward", "backward"]


@dataclass(frozen=True)
class Snapshot:
    """The community partition of project members at one time step.

    ``assignment`` maps member id -> community id; a member appears at most
    once by construction.  Snapshots are treated as immutable after they are
    built.
    """

    time: int
    assignment: Mapping[str, str]

    @cached_property
    def members_by_community(self) -> dict[str, frozenset[str]]:
        groups: dict[str, set[str]] = {}
        for member, community in self.assignment.items():
            groups.setdefault(community, set()).add(member)
        return {c: frozenset(ms) for c, ms in groups.items()}

    @property
    def communities(self) -> tuple[str, ...]:
        """Community ids present in this snapshot, sorted."""
        return tuple(sorted(self.members_by_community))


@dataclass(frozen=True)
class MigrationProfile:
    """Per-community transition summary against the opposite snapshot.

    ``leave_fraction`` is the share of members absent from the entire
    opposite snapshot; ``dist`` spreads the remaining members over all
    ``opposite_count`` communities there, ordered by sorted community id.
    An empty ``dist`` means everybody left.
    """

    direction: Direction
    community: str
    size: int
    leave_fraction: float
    dist: Distribution
    opposite_count: int


@dataclass(frozen=True)
class ReportEntry:
    community: str
    size: int
    breakdown: IndexBreakdown
    trend: Trend


@dataclass(frozen=True)
class TransitionReport:
    """All forward and backward index computations for one step pair.

    ``n`` and ``m`` are the community counts before and after; forward
    entries carry split/shrink, backward entries merge/expand (the same
    formulas on the reversed pair), both ordered by community id.
    """

    from_time: int
    to_time: int
    n: int
    m: int
    forward: tuple[ReportEntry, ...]
    backward: tuple[ReportEntry, ...]


def forward_profile(prev: Snapshot, next: Snapshot, community: str) -> MigrationProfile:
    """Profile where ``community``'s members went between ``prev`` and ``next``.

    A member "leaves" only by being absent from the whole next snapshot;
    moving to another community is migration, not leaving.  The distribution
    is normalized over the stayers and spans every community detected at the
    next step, including ones that received nobody.
    """
    members = prev.members_by_community.get(community)
    if members is None:
        raise SnapshotError(
            f"community {community!r} does not exist at time {prev.time}"
        )
    targets = sorted(next.members_by_community)
    if not targets:
        raise DegenerateTransition(
            f"snapshot at time {next.time} has no communities; indices are undefined"
        )
    size = len(members)
    landed: Counter[str] = Counter()
    stayers = 0
    for member in members:
        target = next.assignment.get(member)
        if target is not None:
            landed[target] += 1
            stayers += 1
    leave_fraction = (size - stayers) / size
    if stayers:
        dist = tuple(landed.get(target, 0) / stayers for target in targets)
    else:
        dist = ()
    return MigrationProfile(
        direction="forward",
        community=community,
        size=size,
        leave_fraction=leave_fraction,
        dist=dist,
        opposite_count=len(targets),
    )


def backward_profile(prev: Snapshot, next: Snapshot, community: str) -> MigrationProfile:
    """Profile where ``community``'s members (at ``next``) came from.

    Exactly the forward computation on the reversed pair: the leave fraction
    becomes the share of members new to the project, and the distribution
    spreads the rest over the communities at ``prev``.
    """
    return replace(forward_profile(next, prev, community), direction="backward")


def _entry(profile: MigrationProfile) -> ReportEntry:
    breakdown = index_breakdown(
        profile.leave_fraction, profile.dist, profile.opposite_count
    )
    return ReportEntry(
        community=profile.community,
        size=profile.size,
        breakdown=breakdown,
        trend=classify_trend(breakdown),
    )


def transition_report(prev: Snapshot, next: Snapshot) -> TransitionReport:
    """Compute every forward and backward breakdown for one step pair."""
    if next.time <= prev.time:
        raise TimelineError(
            f"snapshot times must strictly increase, got {prev.time} -> {next.time}"
        )
    if not prev.assignment or not next.assignment:
        raise DegenerateTransition(
            "both snapshots need at least one community to compare"
        )
    forward = tuple(_entry(forward_profile(prev, next, c)) for c in prev.communities)
    backward = tuple(_entry(backward_profile(prev, next, c)) for c in next.communities)
    return TransitionReport(
        from_time=prev.time,
        to_time=next.time,
        n=len(prev.members_by_community),
        m=len(next.members_by_community),
        forward=forward,
        backward=backward,
    )


def analyze_timeline(snapshots: list[Snapshot]) -> list[TransitionReport]:
    """One TransitionReport per consecutive snapshot pair, in order."""
    if len(snapshots) < 2:
        raise TimelineError("need at least two snapshots to analyze a timeline")
    for earlier, later in zip(snapshots, snapshots[1:]):
        if later.time <= earlier.time:
            raise TimelineError(
                f"snapshot times must strictly increase, got {earlier.time} -> {later.time}"
            )
    return [
        transition_report(earlier, later)
        for earlier, later in zip(snapshots, snapshots[1:])
    ]
