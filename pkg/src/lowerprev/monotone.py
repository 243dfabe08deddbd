"""n-monotonicity of assessments on lattices, and its companions.

An assessment on a lattice-closed domain is n-monotone when every
alternating meet-sum of order up to n is nonnegative: for a base
gamble f and companions f_1 ... f_p (p <= n),

    sum over I of (-1)^|I| * value(f ^ meet of f_i, i in I)  >=  0,

where the empty index set contributes the bare value at f.  The
checker enumerates tuples of distinct domain elements only: a repeated
companion makes the index sets containing it cancel in pairs, so any
multiset tuple reduces to a distinct tuple of smaller order (the test
suite validates this reduction against full multiset enumeration on
small lattices).  The same reduction bounds the order that can matter
on a finite domain by its size minus one, which is how the infinite
marker is decided on lattices of gambles.

For set functions given on the full power set, complete monotonicity
is decided instead through the inclusion-exclusion inversion: all
coefficients on nonempty events nonnegative.  A negative coefficient
at an event A converts back into an explicit violating tuple, namely A
as base with the one-element-deleted subsets of A as companions, whose
alternating sum is exactly that coefficient.  Event lattices below the
full power set are first extended by their inner set function, which
preserves n-monotonicity in both directions on the original domain.

Violations are reported lexicographically first under the domain
ordering (ascending value vectors), so fixtures are deterministic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .assessment import Assessment
from .consistency import conjugate
from .errors import DomainError
from .gambles import (
    Event,
    Gamble,
    HomomorphismTable,
    Space,
    check_wedge_homomorphism,
    is_lattice_closed,
    meet,
    join,
    sort_gambles,
)
from .verdict import Verdict

__all__ = [
    "MonotonicityViolation",
    "MonotonicityReport",
    "MobiusTransform",
    "MinPreservationGap",
    "is_n_monotone",
    "is_n_alternating",
    "inner_set_function",
    "powerset_inner",
    "inner_extension",
    "mobius",
    "is_completely_monotone",
    "compose_homomorphism",
    "vacuous",
    "minimum_table",
    "minimum_preserving_check",
]

ZERO = Fraction(0)
INFINITE = math.inf


@dataclass(frozen=True)
class MonotonicityViolation:
    """A tuple whose alternating sum has the wrong sign.

    ``order`` is p, ``base`` the distinguished first gamble, ``companions``
    the remaining tuple, and ``total`` the offending alternating sum
    (negative for a monotonicity check, positive for an alternation
    check).  ``via_inner`` marks witnesses whose values were read off
    the inner set function rather than the assessment itself.
    """

    order: int
    base: Gamble
    companions: tuple[Gamble, ...]
    total: Fraction
    alternating: bool = False
    via_inner: bool = False


@dataclass(frozen=True)
class MonotonicityReport:
    """Outcome of an n-monotonicity or n-alternation scan."""

    requested: int | float
    max_verified: int | float
    violation: MonotonicityViolation | None

    @property
    def holds(self) -> bool:
        return self.violation is None

    def __bool__(self) -> bool:
        return self.holds


def _domain_tables(assessment: Assessment, op) -> tuple[list[Gamble], list[list[int]], list[Fraction]]:
    domain = list(assessment.domain)
    if not is_lattice_closed(domain):
        raise DomainError("assessment domain is not lattice-closed")
    index = {g.values: i for i, g in enumerate(domain)}
    combine = [
        [index[op(a, b).values] for b in domain] for a in domain
    ]
    values = [v for _, v in assessment.entries]
    return domain, combine, values


def _alternating_scan(
    domain: Sequence[Gamble],
    combine: Sequence[Sequence[int]],
    values: Sequence[Fraction],
    max_order: int,
    alternating: bool,
) -> MonotonicityViolation | None:
    """First violating tuple in (order, base, companions) lexicographic order."""
    size = len(domain)
    for p in range(1, max_order + 1):
        if p > size - 1:
            break
        for base in range(size):
            others = [i for i in range(size) if i != base]
            for combo in itertools.combinations(others, p):
                total = ZERO
                for bits in range(1 << p):
                    acc = base
                    sign = 1
                    for k in range(p):
                        if bits >> k & 1:
                            acc = combine[acc][combo[k]]
                            sign = -sign
                    total += values[acc] if sign > 0 else -values[acc]
                bad = total > 0 if alternating else total < 0
                if bad:
                    return MonotonicityViolation(
                        order=p,
                        base=domain[base],
                        companions=tuple(domain[i] for i in combo),
                        total=total,
                        alternating=alternating,
                    )
    return None


def _is_full_powerset(assessment: Assessment) -> bool:
    if not assessment.is_lower_probability():
        return False
    masks = {g.as_event().mask for g in assessment.domain}
    return masks == set(range(1 << assessment.space.size))


def _certificate_scan(assessment: Assessment, via_inner: bool) -> MonotonicityViolation | None:
    """Complete-monotonicity certificate on a full power-set set function."""
    transform = mobius(assessment)
    for event, coefficient in transform.items():
        if event.size == 0:
            continue
        if coefficient < 0:
            members = sorted(event.members)
            companions = tuple(
                Event(event.space, event.members - {w}).indicator() for w in members
            )
            return MonotonicityViolation(
                order=event.size,
                base=event.indicator(),
                companions=companions,
                total=coefficient,
                via_inner=via_inner,
            )
    return None


def is_n_monotone(assessment: Assessment, n: int | float) -> MonotonicityReport:
    """Scan all alternating meet-sums of order up to ``n``.

    The domain must be lattice-closed.  Pass ``math.inf`` for the
    complete-monotonicity marker: on full power-set set functions this
    is decided by the inversion certificate, on smaller event lattices
    containing the empty and full events by the certificate of the
    inner set function, and on lattices of gambles by scanning up to
    the domain size minus one, which the distinct-tuple reduction makes
    exhaustive.

    >>> from .gambles import Space
    >>> s = Space(("a", "b"))
    >>> lat = sort_gambles([Gamble.make(s, v) for v in ([0, 0], [1, 0], [0, 1], [1, 1])])
    >>> low = Assessment.of(s, ((g, g.inf) for g in lat))
    >>> is_n_monotone(low, 3).holds
    True
    """
    if n != INFINITE and (not isinstance(n, int) or n < 1):
        raise ValueError(f"order must be a positive integer or math.inf, got {n!r}")
    if n == INFINITE and assessment.is_lower_probability() and assessment.entries:
        if _is_full_powerset(assessment):
            violation = _certificate_scan(assessment, via_inner=False)
            return MonotonicityReport(n, INFINITE if violation is None else 0, violation)
        masks = {g.as_event().mask for g in assessment.domain}
        full = (1 << assessment.space.size) - 1
        if 0 in masks and full in masks and is_lattice_closed(assessment.domain):
            # the inner set function only coincides with (and preserves)
            # a monotone assessment, so order one is scanned first
            domain, combine, values = _domain_tables(assessment, meet)
            violation = _alternating_scan(domain, combine, values, 1, alternating=False)
            if violation is not None:
                return MonotonicityReport(n, 0, violation)
            violation = _certificate_scan(powerset_inner(assessment), via_inner=True)
            return MonotonicityReport(n, INFINITE if violation is None else 1, violation)
    domain, combine, values = _domain_tables(assessment, meet)
    cap = len(domain) - 1 if n == INFINITE else int(n)
    violation = _alternating_scan(domain, combine, values, cap, alternating=False)
    if violation is not None:
        return MonotonicityReport(n, violation.order - 1, violation)
    verified = cap if n == INFINITE else n
    return MonotonicityReport(n, verified, None)


def is_n_alternating(assessment: Assessment, n: int | float) -> MonotonicityReport:
    """Alternation: mirror scan with joins, sums required nonpositive.

    Agrees with running :func:`is_n_monotone` on the conjugate
    assessment over the negated domain; the direct join form is used so
    witnesses stay inside the input domain.
    """
    if n != INFINITE and (not isinstance(n, int) or n < 1):
        raise ValueError(f"order must be a positive integer or math.inf, got {n!r}")
    if n == INFINITE:
        report = is_n_monotone(conjugate(assessment), n)
        if report.violation is None:
            return MonotonicityReport(n, report.max_verified, None)
        v = report.violation
        violation = MonotonicityViolation(
            order=v.order,
            base=-v.base,
            companions=tuple(-g for g in v.companions),
            total=-v.total,
            alternating=True,
            via_inner=v.via_inner,
        )
        return MonotonicityReport(n, report.max_verified, violation)
    domain, combine, values = _domain_tables(assessment, join)
    violation = _alternating_scan(domain, combine, values, int(n), alternating=True)
    if violation is not None:
        return MonotonicityReport(n, violation.order - 1, violation)
    return MonotonicityReport(n, n, None)


def revalidate_violation(assessment: Assessment, violation: MonotonicityViolation) -> Fraction:
    """Recompute a reported alternating sum against the assessment.

    Used by witness verification: the returned value must equal the
    reported total exactly.  Witnesses flagged ``via_inner`` are
    recomputed against the inner set function instead; for alternation
    checks that means the conjugate assessment's inner set function.
    """
    if violation.via_inner and violation.alternating:
        mirrored = MonotonicityViolation(
            order=violation.order,
            base=-violation.base,
            companions=tuple(-g for g in violation.companions),
            total=-violation.total,
            alternating=False,
            via_inner=True,
        )
        return -revalidate_violation(conjugate(assessment), mirrored)
    source = powerset_inner(assessment) if violation.via_inner else assessment
    combine_op = join if violation.alternating else meet
    p = violation.order
    total = ZERO
    for bits in range(1 << p):
        acc = violation.base
        sign = 1
        for k in range(p):
            if bits >> k & 1:
                acc = combine_op(acc, violation.companions[k])
                sign = -sign
        total += source.value(acc) if sign > 0 else -source.value(acc)
    return total


def inner_set_function(assessment: Assessment, event: Event) -> Fraction:
    """Largest assessed value over domain events inside ``event``.

    The domain must consist of indicators and contain the empty and
    full events, which keeps the supremum finite and over a nonempty
    set.

    >>> from .gambles import Space
    >>> s = Space(("a", "b", "c"))
    >>> dom = [frozenset(), {"a"}, {"a", "b"}, {"a", "b", "c"}]
    >>> lp = Assessment.on_events(s, (
    ...     (Event.from_labels(s, e), v) for e, v in zip(dom, ["0", "1/4", "1/2", "1"])))
    >>> inner_set_function(lp, Event.from_labels(s, ["a", "c"]))
    Fraction(1, 4)
    """
    if not assessment.is_lower_probability():
        raise DomainError("inner set function needs an assessment on events")
    masks = {g.as_event().mask: v for g, v in assessment.entries}
    full = (1 << assessment.space.size) - 1
    if 0 not in masks or full not in masks:
        raise DomainError("inner set function needs the empty and full events assessed")
    target = event.mask
    return max(v for m, v in masks.items() if m & target == m)


def powerset_inner(assessment: Assessment) -> Assessment:
    """The inner set function tabulated on the full power set."""
    return Assessment.on_events(
        assessment.space,
        ((e, inner_set_function(assessment, e)) for e in assessment.space.all_events()),
    )


def inner_extension(assessment: Assessment, gamble: Gamble) -> Fraction:
    """Largest assessed value over domain gambles dominated by ``gamble``."""
    candidates = [v for g, v in assessment.entries if gamble.dominates(g)]
    if not candidates:
        raise DomainError(
            "no domain gamble lies below the query; assess a small enough constant"
        )
    return max(candidates)


@dataclass(frozen=True)
class MobiusTransform:
    """Inclusion-exclusion inversion of a set function on the power set.

    ``coefficients`` maps an event's bit mask to its coefficient; the
    inverse summation identity ``sum over B subset of A of m(B) =
    value(A)`` holds exactly, see :meth:`reconstruct`.
    """

    space: Space
    coefficients: tuple[tuple[int, Fraction], ...]

    def coefficient(self, event: Event) -> Fraction:
        for mask, value in self.coefficients:
            if mask == event.mask:
                return value
        raise KeyError(f"event {event.labels} outside the transform")

    def items(self) -> Iterable[tuple[Event, Fraction]]:
        for mask, value in self.coefficients:
            yield Event.from_mask(self.space, mask), value

    def reconstruct(self, event: Event) -> Fraction:
        target = event.mask
        return sum(
            (v for mask, v in self.coefficients if mask & target == mask), ZERO
        )


def mobius(assessment: Assessment) -> MobiusTransform:
    """Invert a full power-set set function:
    ``m(A) = sum over B subset of A of (-1)^|A minus B| value(B)``.

    >>> from .gambles import Space
    >>> s = Space(("a", "b"))
    >>> uniform = Assessment.on_events(s, (
    ...     (e, Fraction(e.size, 2)) for e in s.all_events()))
    >>> [(e.labels, c) for e, c in mobius(uniform).items()]
    [((), Fraction(0, 1)), (('a',), Fraction(1, 2)), (('b',), Fraction(1, 2)), (('a', 'b'), Fraction(0, 1))]
    """
    if not _is_full_powerset(assessment):
        raise DomainError("inversion needs the set function on the full power set")
    by_mask = {g.as_event().mask: v for g, v in assessment.entries}
    size = assessment.space.size
    coefficients = []
    for mask in range(1 << size):
        total = ZERO
        sub = mask
        while True:
            sign = -1 if (bin(mask ^ sub).count("1") % 2) else 1
            total += sign * by_mask[sub]
            if sub == 0:
                break
            sub = (sub - 1) & mask
        coefficients.append((mask, total))
    return MobiusTransform(assessment.space, tuple(coefficients))


def is_completely_monotone(assessment: Assessment) -> Verdict:
    """Certificate check: every inversion coefficient nonnegative.

    Requires the full power set with the empty event at zero.  A
    negative verdict carries the violating tuple derived from the
    offending event, whose alternating sum is the negative coefficient
    itself.
    """
    if not _is_full_powerset(assessment):
        raise DomainError("complete monotonicity certificate needs the full power set")
    empty = Gamble.constant(assessment.space, 0)
    if assessment.value(empty) != 0:
        raise DomainError("the empty event must be assessed at zero")
    violation = _certificate_scan(assessment, via_inner=False)
    if violation is None:
        return Verdict(True)
    return Verdict(
        False,
        violation,
        info={"event": violation.base.as_event().labels, "coefficient": violation.total},
    )


def compose_homomorphism(assessment: Assessment, table: HomomorphismTable) -> Assessment:
    """The composed assessment ``g -> value(table(g))`` on the table's source.

    The table must preserve meets (checked, with the violating pair in
    the error) and send every source gamble into the assessment's
    domain.
    """
    check = check_wedge_homomorphism(table)
    if not check:
        w = check.witness
        raise DomainError(
            f"table does not preserve meets at the pair {w.f.values}, {w.g.values}"
        )
    for target in table.targets:
        if target not in assessment:
            raise DomainError(f"table image {target.values} outside the assessed domain")
    return Assessment.of(
        assessment.space, ((g, assessment.value(table(g))) for g in table.source)
    )


def vacuous(event: Event, gambles: Iterable[Gamble]) -> Assessment:
    """The vacuous lower prevision relative to a nonempty event,
    tabulated on the requested gambles: each gamble's minimum over the
    event's outcomes.

    >>> from .gambles import Space
    >>> s = Space(("a", "b", "c"))
    >>> v = vacuous(Event.from_labels(s, ["b", "c"]), [Gamble.make(s, [0, 1, 2])])
    >>> v.entries[0][1]
    Fraction(1, 1)
    """
    if event.size == 0:
        raise DomainError("the conditioning event must be nonempty")
    members = sorted(event.members)
    return Assessment.of(
        event.space,
        ((g, min(g.values[i] for i in members)) for g in sort_gambles(gambles)),
    )


def minimum_table(domain: Iterable[Gamble], event: Event) -> HomomorphismTable:
    """Map each gamble to the constant gamble holding its minimum over ``event``.

    This tabulates a meet-preserving map; composing it with any
    monotone assessment of the constants yields the vacuous lower
    prevision relative to the event.
    """
    if event.size == 0:
        raise DomainError("the conditioning event must be nonempty")
    members = sorted(event.members)

    def collapse(g: Gamble) -> Gamble:
        return Gamble.constant(g.space, min(g.values[i] for i in members))

    return HomomorphismTable.tabulate(domain, collapse)


@dataclass(frozen=True)
class MinPreservationGap:
    """A pair on which an assessment fails ``value(f ^ g) = min(values)``."""

    f: Gamble
    g: Gamble
    value_of_meet: Fraction
    min_of_values: Fraction


def minimum_preserving_check(assessment: Assessment) -> Verdict:
    """Does the assessment turn pointwise minima into minima of values?

    A yes verdict certifies complete monotonicity (verified separately
    by :func:`is_n_monotone` in the test suite).
    """
    domain = assessment.domain
    values = {g.values: v for g, v in assessment.entries}
    for f, g in itertools.combinations(domain, 2):
        meet_fg = meet(f, g)
        if meet_fg.values not in values:
            raise DomainError("assessment domain is not closed under meets")
        value_of_meet = values[meet_fg.values]
        floor = min(values[f.values], values[g.values])
        if value_of_meet != floor:
            return Verdict(False, MinPreservationGap(f, g, value_of_meet, floor))
    return Verdict(True)
