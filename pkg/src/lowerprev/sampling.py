"""Seeded random generators for assessments with known structure.

The test suite leans on families whose properties are forced by
construction:

* nonnegative inversion masses on nonempty events give completely
  monotone (hence n-monotone for every n) set functions of any chosen
  norm; this over-generates when only 2-monotonicity is wanted, which
  the relevant tests accept and say so;
* the floor of a shifted additive weight, ``A -> max(0, w(A) - t)``,
  is supermodular because a convex nondecreasing function of a modular
  one is; each sample is still re-verified 2-monotone before use and
  is typically not completely monotone;
* lower envelopes of finitely many mass functionals with a common
  total mass are exact functionals evaluable everywhere, which makes
  them the reference against which natural extensions of their
  restrictions are judged.

Everything takes an explicit :class:`random.Random` so runs replay.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .assessment import Assessment, LowerEnvelope, MassFunctional
from .gambles import Event, Gamble, Space, lattice_closure, sort_gambles

__all__ = [
    "random_rational",
    "random_gamble",
    "random_probability",
    "random_mass",
    "random_envelope",
    "random_completely_monotone",
    "random_floor_additive",
    "random_event_lattice",
    "random_gamble_lattice",
]

ZERO = Fraction(0)


def random_rational(
    rng: random.Random, low: int = -2, high: int = 2, denominator: int = 6
) -> Fraction:
    """A fraction on the grid of step 1/denominator inside [low, high]."""
    return Fraction(rng.randint(low * denominator, high * denominator), denominator)


def random_gamble(
    rng: random.Random,
    space: Space,
    low: int = -2,
    high: int = 2,
    denominator: int = 4,
) -> Gamble:
    return Gamble(
        space,
        tuple(random_rational(rng, low, high, denominator) for _ in space.outcomes()),
    )


def random_mass(
    rng: random.Random, space: Space, total: Fraction, denominator: int = 8
) -> MassFunctional:
    """A nonnegative mass vector scaled to the requested total."""
    weights = [Fraction(rng.randint(0, denominator)) for _ in space.outcomes()]
    if sum(weights) == 0:
        weights[rng.randrange(space.size)] = Fraction(1)
    scale = total / sum(weights)
    return MassFunctional(space, tuple(w * scale for w in weights))


def random_probability(rng: random.Random, space: Space, denominator: int = 8) -> MassFunctional:
    return random_mass(rng, space, Fraction(1), denominator)


def random_envelope(
    rng: random.Random,
    space: Space,
    members: int,
    total: Fraction = Fraction(1),
    denominator: int = 8,
) -> LowerEnvelope:
    return LowerEnvelope(
        tuple(random_mass(rng, space, total, denominator) for _ in range(members))
    )


def random_completely_monotone(
    rng: random.Random, space: Space, total: Fraction = Fraction(1), denominator: int = 8
) -> Assessment:
    """A set function on the full power set with nonnegative inversion masses.

    Mass sits on nonempty events only and sums to ``total``, so the
    result is completely monotone, assigns zero to the empty event and
    ``total`` to the full one, and is therefore exact with norm
    ``total``.
    """
    nonempty = [mask for mask in range(1, 1 << space.size)]
    weights = {mask: Fraction(rng.randint(0, denominator)) for mask in nonempty}
    if sum(weights.values()) == 0:
        weights[rng.choice(nonempty)] = Fraction(1)
    scale = total / sum(weights.values())
    entries = []
    for event in space.all_events():
        target = event.mask
        value = sum((w * scale for mask, w in weights.items() if mask & target == mask), ZERO)
        entries.append((event, value))
    return Assessment.on_events(space, entries)


def random_floor_additive(
    rng: random.Random, space: Space, denominator: int = 6
) -> Assessment:
    """``A -> max(0, w(A) - t)`` on the full power set, re-verified 2-monotone.

    Supermodular by convexity of the floor; generically not completely
    monotone once the space has three or more outcomes.
    """
    from .monotone import is_n_monotone

    while True:
        weights = [Fraction(rng.randint(1, denominator), denominator) for _ in space.outcomes()]
        threshold = Fraction(rng.randint(0, denominator), denominator)
        entries = []
        for event in space.all_events():
            w = sum((weights[i] for i in event.members), ZERO)
            entries.append((event, max(ZERO, w - threshold)))
        assessment = Assessment.on_events(space, entries)
        full = Event.full(space).indicator()
        if assessment.value(full) == 0:
            continue  # degenerate: everything zero
        if is_n_monotone(assessment, 2).holds:
            return assessment


def random_event_lattice(
    rng: random.Random, space: Space, seeds: int = 2
) -> tuple[Event, ...]:
    """A union/intersection-closed family containing the empty and full events."""
    masks = {0, (1 << space.size) - 1}
    for _ in range(seeds):
        masks.add(rng.randrange(1 << space.size))
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(tuple(masks), 2):
            for c in (a & b, a | b):
                if c not in masks:
                    masks.add(c)
                    changed = True
    return tuple(Event.from_mask(space, m) for m in sorted(masks))


def random_gamble_lattice(
    rng: random.Random,
    space: Space,
    generators: int = 3,
    low: int = -1,
    high: int = 2,
    denominator: int = 2,
    include_constants: tuple[int, ...] = (),
) -> tuple[Gamble, ...]:
    """The meet/join closure of a few random gambles, optionally with constants."""
    seeds = [random_gamble(rng, space, low, high, denominator) for _ in range(generators)]
    seeds.extend(Gamble.constant(space, c) for c in include_constants)
    return lattice_closure(sort_gambles(seeds))
