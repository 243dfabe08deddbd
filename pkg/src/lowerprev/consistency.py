"""Consistency of assessments: sure loss, coherence, exactness, extension.

Everything here reduces to exact-rational linear programs over the
mass functionals dominating an assessment:

* an assessment avoids sure loss iff some probability mass (total mass
  one) dominates it on its domain;
* its natural extension at a gamble is the exact minimum of the
  dominating masses' values there;
* it is coherent iff that minimum gives back the assessed value on
  every domain gamble;
* it is exact iff it is a nonnegative multiple of a coherent
  assessment, and its norm is the least such multiple.

The norm is computed by interval intersection: for every domain gamble
``f0`` the achievable total masses of dominators pinned to ``f0``'s
assessed value form an interval ``[l(f0), u(f0)]``; the assessment is
exact iff every interval is nonempty and they all intersect, and the
norm is then ``max_f0 l(f0)``.  Feasibility of the norm itself and
minimality of any feasible scale both follow from the decomposition of
exact functionals into scale times coherent part, which is also what
:func:`decompose` returns.  The definitional closed-form norm for
single-gamble domains, used as an independent oracle in the test
suite, agrees on all calibration instances.

Negative verdicts carry witnesses: a sure-loss combination of domain
gambles with integer multiplicities, recovered from the dual ray of
the infeasible dominance program and re-verified by substitution; a
domain gamble whose natural extension exceeds its assessed value; a
domain gamble whose pinned program is infeasible; or the pair of
gambles whose total-mass intervals fail to intersect.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import simplex
from .assessment import Assessment, ExactDecomposition, MassFunctional
from .errors import NotExactError, SureLossError
from .gambles import Gamble
from .simplex import Constraint, LinearProgram, LPStatus, Relation
from .verdict import Verdict

__all__ = [
    "SureLossWitness",
    "CoherenceGap",
    "UnattainableGamble",
    "NormIntervalGap",
    "avoids_sure_loss",
    "natural_extension_prevision",
    "is_coherent",
    "norm",
    "is_exact",
    "extension_minimum",
    "natural_extension_exact",
    "decompose",
    "conjugate",
    "find_attaining",
    "vacuous_value",
]

ZERO = Fraction(0)
ONE = Fraction(1)
INF = math.inf


@dataclass(frozen=True)
class SureLossWitness:
    """Domain gambles and positive integer multiplicities with
    ``sup(sum_i m_i f_i) < sum_i m_i l(f_i)``."""

    gambles: tuple[Gamble, ...]
    multiplicities: tuple[int, ...]
    sup_combination: Fraction
    assessed_total: Fraction


@dataclass(frozen=True)
class CoherenceGap:
    """A domain gamble assessed strictly below its natural extension."""

    gamble: Gamble
    assessed: Fraction
    extension: Fraction


@dataclass(frozen=True)
class UnattainableGamble:
    """A domain gamble no dominating mass functional can attain."""

    gamble: Gamble


@dataclass(frozen=True)
class NormIntervalGap:
    """Two domain gambles whose total-mass intervals do not meet."""

    lower_gamble: Gamble
    lower: Fraction
    upper_gamble: Gamble
    upper: Fraction


def _mass_lp(
    assessment: Assessment,
    objective: tuple[Fraction, ...],
    total: Fraction | None,
    pinned: Iterable[tuple[Gamble, Fraction]] = (),
) -> LinearProgram:
    """Masses >= 0 dominating the assessment, with optional total and pins.

    The total-mass equality, when present, is always the first row, and
    the dominance rows follow in domain order: sure-loss certificates
    rely on this layout.
    """
    m = assessment.space.size
    rows: list[Constraint] = []
    if total is not None:
        rows.append(Constraint((ONE,) * m, Relation.EQ, total))
    for gamble, value in assessment.entries:
        rows.append(Constraint(gamble.values, Relation.GE, value))
    for gamble, value in pinned:
        rows.append(Constraint(gamble.values, Relation.EQ, value))
    return LinearProgram(objective, tuple(rows), (True,) * m)


def avoids_sure_loss(assessment: Assessment) -> Verdict:
    """Is some probability mass functional above the assessment?

    A positive verdict carries such a dominating mass functional.  A
    negative verdict carries a :class:`SureLossWitness`, rebuilt from
    the dual ray of the infeasible dominance program, scaled to integer
    multiplicities, and re-verified by direct substitution.
    """
    m = assessment.space.size
    outcome = simplex.solve(_mass_lp(assessment, (ZERO,) * m, ONE))
    if outcome.status is LPStatus.OPTIMAL:
        return Verdict(True, MassFunctional(assessment.space, outcome.optimizer))
    certificate = outcome.certificate
    # Row 0 is the total-mass equality; rows 1.. align with the entries.
    coefficients = certificate[1:]
    scale = math.lcm(*(c.denominator for c in coefficients)) if coefficients else 1
    gambles: list[Gamble] = []
    multiplicities: list[int] = []
    for (gamble, _), coeff in zip(assessment.entries, coefficients):
        count = int(coeff * scale)
        if count > 0:
            gambles.append(gamble)
            multiplicities.append(count)
    if gambles:
        combination = gambles[0] * multiplicities[0]
        for g, k in zip(gambles[1:], multiplicities[1:]):
            combination = combination + g * k
        assessed = sum(
            (assessment.value(g) * k for g, k in zip(gambles, multiplicities)), ZERO
        )
        if combination.sup < assessed:
            witness = SureLossWitness(
                tuple(gambles), tuple(multiplicities), combination.sup, assessed
            )
            return Verdict(False, witness)
    # Exact arithmetic should never reach this; stay honest if it does.
    return Verdict(False, None, info={"witness_unavailable": True})


def natural_extension_prevision(assessment: Assessment, gamble: Gamble) -> Fraction:
    """The lower envelope, at ``gamble``, of the dominating linear previsions.

    One linear program: minimize the mass value of ``gamble`` over all
    probability masses dominating the assessment on its domain.

    >>> from .gambles import Space
    >>> s = Space(("a", "b", "c"))
    >>> f = Gamble.make(s, [0, 1, 2])
    >>> p = Assessment.of(s, {f: 1, Gamble.constant(s, 1): 1})
    >>> natural_extension_prevision(p, Gamble.make(s, [1, 1, 2]))
    Fraction(1, 1)
    """
    outcome = simplex.solve(_mass_lp(assessment, gamble.values, ONE))
    if outcome.status is LPStatus.INFEASIBLE:
        raise SureLossError("assessment incurs sure loss; no natural extension exists")
    assert outcome.status is LPStatus.OPTIMAL  # the simplex is compact
    return outcome.value


def is_coherent(assessment: Assessment) -> Verdict:
    """Does the assessment coincide with its natural extension on its domain?"""
    asl = avoids_sure_loss(assessment)
    if not asl:
        return Verdict(False, asl.witness, info={"sure_loss": True})
    for gamble, value in assessment.entries:
        extension = natural_extension_prevision(assessment, gamble)
        if extension != value:
            return Verdict(False, CoherenceGap(gamble, value, extension))
    return Verdict(True)


def _attainment_interval(
    assessment: Assessment, gamble: Gamble, value: Fraction
) -> tuple[Fraction, Fraction | float] | None:
    """Range of total masses of dominators pinned to ``value`` at ``gamble``.

    Returns None when no dominating mass functional attains the value at
    all; the upper end is ``inf`` when the total mass is unbounded.
    """
    m = assessment.space.size
    ones = (ONE,) * m
    low = simplex.solve(_mass_lp(assessment, ones, None, [(gamble, value)]))
    if low.status is LPStatus.INFEASIBLE:
        return None
    assert low.status is LPStatus.OPTIMAL  # total mass is bounded below by zero
    neg_ones = (-ONE,) * m
    high = simplex.solve(_mass_lp(assessment, neg_ones, None, [(gamble, value)]))
    upper: Fraction | float = INF if high.status is LPStatus.UNBOUNDED else -high.value
    return low.value, upper


@functools.lru_cache(maxsize=512)
def _norm_analysis(assessment: Assessment):
    """Shared engine behind :func:`norm` and :func:`is_exact`.

    Cached: assessments are immutable and the callers that chain norm,
    extension and attainment queries keep hitting the same one.
    """
    best_low: tuple[Fraction, Gamble] | None = None
    best_high: tuple[Fraction | float, Gamble] | None = None
    for gamble, value in assessment.entries:
        interval = _attainment_interval(assessment, gamble, value)
        if interval is None:
            return "unattainable", UnattainableGamble(gamble)
        low, high = interval
        if best_low is None or low > best_low[0]:
            best_low = (low, gamble)
        if best_high is None or high < best_high[0]:
            best_high = (high, gamble)
    if best_low is None:
        return "exact", ZERO
    if best_low[0] > best_high[0]:
        return "gap", NormIntervalGap(
            best_low[1], best_low[0], best_high[1], best_high[0]
        )
    return "exact", best_low[0]


def norm(assessment: Assessment) -> Fraction | float:
    """The least scale at which the assessment is a coherent multiple.

    Returns ``inf`` exactly when the assessment is not exact.  When the
    constant gamble one is assessed and the assessment is exact, the
    norm equals that assessed value.
    """
    kind, payload = _norm_analysis(assessment)
    return payload if kind == "exact" else INF


def _event_exactness_shortcut(assessment: Assessment) -> Verdict | None:
    """Exactness of a certified 2-monotone set function on an event lattice.

    When the domain consists of indicators, is closed under union and
    intersection, contains the empty and full events, and the values
    are monotone and supermodular, exactness is equivalent to the empty
    event being assessed at zero.  Cross-checked against the linear
    programming route in the test suite.
    """
    if not assessment.entries or not assessment.is_lower_probability():
        return None
    by_mask = {g.as_event().mask: v for g, v in assessment.entries}
    full = (1 << assessment.space.size) - 1
    if 0 not in by_mask or full not in by_mask:
        return None
    masks = list(by_mask)
    for a in masks:
        for b in masks:
            if a & b not in by_mask or a | b not in by_mask:
                return None
            if (a & b) == a and by_mask[a] > by_mask[b]:
                return None  # not monotone
            if by_mask[a | b] + by_mask[a & b] < by_mask[a] + by_mask[b]:
                return None  # not supermodular
    if by_mask[0] == 0:
        return Verdict(True, info={"route": "event_shortcut"})
    empty = Gamble.constant(assessment.space, 0)
    return Verdict(
        False, UnattainableGamble(empty), info={"route": "event_shortcut"}
    )


def is_exact(assessment: Assessment, *, use_event_shortcut: bool = True) -> Verdict:
    """Can the assessment be extended to an exact functional on all gambles?

    Equivalent to the norm being finite.  For set functions on event
    lattices with a 2-monotonicity certificate the empty-event
    criterion is applied first; all other assessments go through the
    norm programs.
    """
    if use_event_shortcut:
        shortcut = _event_exactness_shortcut(assessment)
        if shortcut is not None:
            return shortcut
    kind, payload = _norm_analysis(assessment)
    if kind == "exact":
        return Verdict(True, info={"norm": payload})
    return Verdict(False, payload)


def extension_minimum(assessment: Assessment, gamble: Gamble, total: Fraction) -> Fraction:
    """Envelope minimum at ``gamble`` over dominators of a given total mass.

    Callers that already know the norm use this to avoid recomputing
    it; :func:`natural_extension_exact` is the checked entry point.
    """
    outcome = simplex.solve(_mass_lp(assessment, gamble.values, total))
    assert outcome.status is LPStatus.OPTIMAL  # exactness makes the set nonempty
    return outcome.value


def natural_extension_exact(assessment: Assessment, gamble: Gamble) -> Fraction:
    """Smallest exact, norm-preserving extension, evaluated at ``gamble``.

    The minimum of the mass values at ``gamble`` over the mass
    functionals that dominate the assessment and whose total mass
    equals the norm.  Scaling commutes: this equals the norm times the
    natural extension of the decomposed coherent part.
    """
    scale = norm(assessment)
    if scale == INF:
        raise NotExactError("assessment is not exact; no natural extension exists")
    return extension_minimum(assessment, gamble, scale)


def vacuous_value(gamble: Gamble) -> Fraction:
    """Infimum of a gamble, the vacuous lower prevision's value."""
    return gamble.inf


def decompose(assessment: Assessment) -> ExactDecomposition:
    """Write an exact assessment as norm times a coherent assessment.

    At norm zero the assessment is identically zero and the coherent
    part is chosen vacuous on the same domain.  The decomposition is
    flagged unique exactly when the constant gamble one is assessed and
    the norm is nonzero.
    """
    scale = norm(assessment)
    if scale == INF:
        raise NotExactError("assessment is not exact; nothing to decompose")
    one = Gamble.constant(assessment.space, 1)
    if scale == 0:
        coherent = Assessment.of(
            assessment.space, ((g, vacuous_value(g)) for g in assessment.domain)
        )
        return ExactDecomposition(ZERO, coherent, is_unique=False)
    coherent = assessment.scale(ONE / scale)
    return ExactDecomposition(scale, coherent, is_unique=one in assessment)


def conjugate(assessment: Assessment) -> Assessment:
    """The conjugate assessment: domain negated, values negated.

    An involution; on a linear prevision's restriction it returns the
    restriction to the negated domain.
    """
    return Assessment(
        assessment.space, tuple((-g, -v) for g, v in assessment.entries)
    )


def find_attaining(
    assessment: Assessment, f: Gamble, g: Gamble
) -> MassFunctional | None:
    """A dominating mass functional of norm total mass attaining both targets.

    The targets are the assessed values when the gambles are in the
    domain, and natural-extension values otherwise.  Returns None when
    no such functional exists (a single feasibility program).
    """
    scale = norm(assessment)
    if scale == INF:
        raise NotExactError("assessment is not exact")
    targets = []
    for q in (f, g):
        value = assessment.value(q) if q in assessment else natural_extension_exact(assessment, q)
        targets.append((q, value))
    m = assessment.space.size
    outcome = simplex.solve(_mass_lp(assessment, (ZERO,) * m, scale, targets))
    if outcome.status is LPStatus.INFEASIBLE:
        return None
    assert outcome.status is LPStatus.OPTIMAL
    return MassFunctional(assessment.space, outcome.optimizer)
