"""Choquet integration against set functions on finite spaces.

The decreasing distribution of a gamble f with respect to a set
function is the map x -> value({f >= x}); on a finite space it is an
exact rational step function, so its Riemann integral collapses to a
telescoping sum over the sorted distinct values of f:

    value(full) * inf f  +  sum_j (v_j - v_{j-1}) * value({f >= v_j}).

No numerical quadrature exists anywhere; every quantity is exact.  The
level sets use >= thresholds: at the distinct-value breakpoints the
strict variant would not change the sum.

For 2-monotone exact set functions the integral reproduces the natural
extension, and for exact functionals on linear lattices of gambles
containing the constants, comonotone additivity characterizes
2-monotonicity; both bridges are exercised by the test suite on
finite sub-lattice samples whose structure forces the verdicts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from .assessment import Assessment
from .consistency import extension_minimum, norm
from .errors import DomainError
from .gambles import Event, Gamble, is_comonotone, is_lattice_closed
from .verdict import Verdict

__all__ = [
    "DecreasingDistribution",
    "ChoquetResult",
    "AdditivityGap",
    "decreasing_distribution",
    "choquet_integral",
    "is_comonotone_additive",
]

ZERO = Fraction(0)
INF = float("inf")


@dataclass(frozen=True)
class DecreasingDistribution:
    """Steps (threshold, level): level = set-function value of {f >= threshold}.

    Thresholds strictly increase, levels never increase; together they
    describe the right-anchored step function on [inf f, sup f].
    """

    steps: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        thresholds = [t for t, _ in self.steps]
        levels = [v for _, v in self.steps]
        if any(a >= b for a, b in zip(thresholds, thresholds[1:])):
            raise ValueError("thresholds must strictly increase")
        if any(a < b for a, b in zip(levels, levels[1:])):
            raise ValueError("levels must be non-increasing; the set function is not monotone")

    def __call__(self, x: Fraction) -> Fraction:
        """Level at x: the value of {f >= x}, for x in [inf f, sup f]."""
        level = self.steps[0][1]
        for threshold, value in self.steps:
            if threshold <= x:
                level = value
            else:
                break
        return level


@dataclass(frozen=True)
class ChoquetResult:
    """An integral value plus the trace it telescopes from.

    The trace rows are (threshold, level event, level value), one per
    distinct gamble value in ascending order; the value recomputes as
    ``level_0 * threshold_0 + sum_j (t_j - t_{j-1}) * level_j``.
    """

    value: Fraction
    trace: tuple[tuple[Fraction, Event, Fraction], ...]

    def recompute(self) -> Fraction:
        total = self.trace[0][2] * self.trace[0][0]
        for (prev, _, _), (threshold, _, level) in zip(self.trace, self.trace[1:]):
            total += (threshold - prev) * level
        return total


def _powerset_values(assessment: Assessment) -> dict[int, Fraction]:
    if not assessment.is_lower_probability():
        raise DomainError("Choquet integration needs a set function on events")
    by_mask = {g.as_event().mask: v for g, v in assessment.entries}
    if set(by_mask) != set(range(1 << assessment.space.size)):
        raise DomainError("the set function must be defined on all events")
    return by_mask


def _require_monotone(assessment: Assessment, by_mask: dict[int, Fraction]) -> None:
    size = assessment.space.size
    for mask in range(1 << size):
        for i in range(size):
            if not mask >> i & 1 and by_mask[mask] > by_mask[mask | 1 << i]:
                raise DomainError("the set function must be monotone")


def decreasing_distribution(assessment: Assessment, f: Gamble) -> DecreasingDistribution:
    """Tabulate x -> value({f >= x}) at the distinct values of f.

    >>> from .gambles import Space
    >>> s = Space(("a", "b"))
    >>> unit = Assessment.on_events(s, ((e, Fraction(int(e.size == 2))) for e in s.all_events()))
    >>> decreasing_distribution(unit, Gamble.make(s, [0, 1])).steps
    ((Fraction(0, 1), Fraction(1, 1)), (Fraction(1, 1), Fraction(0, 1)))
    """
    by_mask = _powerset_values(assessment)
    _require_monotone(assessment, by_mask)
    steps = []
    for v in sorted(set(f.values)):
        level_set = f.level_set(v)
        steps.append((v, by_mask[level_set.mask]))
    return DecreasingDistribution(tuple(steps))


def choquet_integral(assessment: Assessment, f: Gamble) -> ChoquetResult:
    """The exact telescoping sum of the decreasing distribution.

    Needs a monotone set function on the full power set with the empty
    event at zero.  For 2-monotone exact set functions the value equals
    the natural extension at ``f``.
    """
    by_mask = _powerset_values(assessment)
    _require_monotone(assessment, by_mask)
    if by_mask[0] != 0:
        raise DomainError("the empty event must carry value zero")
    space = assessment.space
    full_mask = (1 << space.size) - 1
    trace = []
    total = ZERO
    previous = None
    for v in sorted(set(f.values)):
        level_set = f.level_set(v)
        level = by_mask[level_set.mask]
        if previous is None:
            total = by_mask[full_mask] * v
        else:
            total += (v - previous) * level
        trace.append((v, level_set, level))
        previous = v
    return ChoquetResult(total, tuple(trace))


@dataclass(frozen=True)
class AdditivityGap:
    """A comonotone pair whose sum is valued away from the sum of values."""

    f: Gamble
    g: Gamble
    sum_value: Fraction
    parts_total: Fraction
    via_extension: bool


def is_comonotone_additive(assessment: Assessment) -> Verdict:
    """Is ``value(f + g) = value(f) + value(g)`` on every comonotone domain pair?

    Sums outside the domain are evaluated through the norm-preserving
    natural extension, which requires the assessment to be exact; the
    verdict's ``info`` records which pairs needed that.  The domain
    must be a lattice.
    """
    domain = assessment.domain
    if not is_lattice_closed(domain):
        raise DomainError("comonotone additivity needs a lattice-closed domain")
    values = {g.values: v for g, v in assessment.entries}
    scale: Fraction | float | None = None
    extended: list[tuple[Gamble, Gamble]] = []
    for f, g in itertools.combinations(domain, 2):
        if not is_comonotone(f, g):
            continue
        total_gamble = f + g
        if total_gamble.values in values:
            sum_value = values[total_gamble.values]
            via_extension = False
        else:
            if scale is None:
                scale = norm(assessment)
                if scale == INF:
                    raise DomainError(
                        f"cannot evaluate the sum of {f.values} and {g.values}: "
                        "the assessment is not exact"
                    )
            sum_value = extension_minimum(assessment, total_gamble, scale)
            via_extension = True
            extended.append((f, g))
        parts = values[f.values] + values[g.values]
        if sum_value != parts:
            return Verdict(
                False,
                AdditivityGap(f, g, sum_value, parts, via_extension),
                info={"extended_pairs": tuple(extended)},
            )
    return Verdict(True, info={"extended_pairs": tuple(extended)})
