"""Assessments and positive linear functionals.

An assessment records finitely many lower bounds: a map from gambles
to the exact-rational values a subject is committed to.  When every
domain gamble is an indicator the assessment is a lower probability
(equivalently, a set function).  A mass functional is a nonnegative
mass vector over outcomes; it evaluates gambles linearly and plays the
role of the dominating positive linear functionals, with total mass
one giving the linear previsions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import SpaceMismatchError
from .gambles import Event, Gamble, Space, sort_gambles

__all__ = [
    "Assessment",
    "MassFunctional",
    "LowerEnvelope",
    "ExactDecomposition",
    "evaluate",
]


@dataclass(frozen=True)
class Assessment:
    """A finite map from gambles to lower values, on one space.

    Entries are kept sorted by gamble value vector, which fixes the
    "first witness" order everywhere in the library.

    >>> s = Space(("a", "b"))
    >>> a = Assessment.of(s, {Gamble.make(s, [1, 0]): "3/10"})
    >>> a.value(Gamble.make(s, [1, 0]))
    Fraction(3, 10)
    """

    space: Space
    entries: tuple[tuple[Gamble, Fraction], ...]

    def __post_init__(self) -> None:
        seen = set()
        for gamble, _ in self.entries:
            if gamble.space != self.space:
                raise SpaceMismatchError("assessment entry on a different space")
            if gamble.values in seen:
                raise ValueError(f"duplicate domain gamble {gamble.values}")
            seen.add(gamble.values)
        ordered = tuple(sorted(self.entries, key=lambda e: e[0].values))
        object.__setattr__(self, "entries", ordered)

    @staticmethod
    def of(
        space: Space,
        entries: Mapping[Gamble, Fraction | int | str] | Iterable[tuple[Gamble, Fraction | int | str]],
    ) -> "Assessment":
        from .rational import parse_rational

        if isinstance(entries, Mapping):
            entries = entries.items()
        pairs = tuple(
            (g, parse_rational(v) if isinstance(v, str) else Fraction(v))
            for g, v in entries
        )
        return Assessment(space, pairs)

    @staticmethod
    def on_events(
        space: Space,
        entries: Mapping[Event, Fraction | int | str] | Iterable[tuple[Event, Fraction | int | str]],
    ) -> "Assessment":
        if isinstance(entries, Mapping):
            entries = entries.items()
        return Assessment.of(space, ((e.indicator(), v) for e, v in entries))

    @property
    def domain(self) -> tuple[Gamble, ...]:
        return tuple(g for g, _ in self.entries)

    def value(self, gamble: Gamble) -> Fraction:
        for g, v in self.entries:
            if g == gamble:
                return v
        raise KeyError(f"gamble {gamble.values} not assessed")

    def __contains__(self, gamble: Gamble) -> bool:
        return any(g == gamble for g, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[Gamble, Fraction]]:
        return iter(self.entries)

    def is_lower_probability(self) -> bool:
        """True when every domain gamble is a 0/1 indicator."""
        return all(g.is_indicator() for g in self.domain)

    def domain_events(self) -> tuple[Event, ...]:
        return tuple(g.as_event() for g in self.domain)

    def scale(self, factor: Fraction) -> "Assessment":
        return Assessment(self.space, tuple((g, factor * v) for g, v in self.entries))

    def with_entry(self, gamble: Gamble, value: Fraction) -> "Assessment":
        return Assessment(self.space, self.entries + ((gamble, Fraction(value)),))


@dataclass(frozen=True)
class MassFunctional:
    """A nonnegative mass vector over outcomes, evaluated linearly.

    Total mass one makes it a linear prevision (a probability charge on
    events); general nonnegative total mass makes it a positive linear
    functional with norm equal to its total mass.
    """

    space: Space
    masses: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.masses) != self.space.size:
            raise ValueError("mass vector length differs from space size")
        if any(m < 0 for m in self.masses):
            raise ValueError("masses must be nonnegative")

    @staticmethod
    def make(space: Space, masses: Iterable[Fraction | int | str]) -> "MassFunctional":
        from .rational import parse_rational

        return MassFunctional(
            space,
            tuple(parse_rational(m) if isinstance(m, str) else Fraction(m) for m in masses),
        )

    @property
    def total_mass(self) -> Fraction:
        return sum(self.masses, Fraction(0))

    def __call__(self, gamble: Gamble) -> Fraction:
        if gamble.space != self.space:
            raise SpaceMismatchError("gamble and mass functional on different spaces")
        return sum((m * v for m, v in zip(self.masses, gamble.values)), Fraction(0))

    def event_value(self, event: Event) -> Fraction:
        return sum((self.masses[i] for i in event.members), Fraction(0))

    def as_set_function(self) -> Assessment:
        """The induced assessment on all events of the space."""
        return Assessment.on_events(
            self.space, ((e, self.event_value(e)) for e in self.space.all_events())
        )

    def restrict(self, domain: Iterable[Gamble]) -> Assessment:
        """The induced assessment on a finite set of gambles (duplicates collapse)."""
        unique = {g.values: g for g in domain}.values()
        return Assessment.of(self.space, ((g, self(g)) for g in sort_gambles(unique)))


def evaluate(functional: MassFunctional, gamble: Gamble) -> Fraction:
    """The linear value ``sum_w mass(w) * gamble(w)``.

    >>> s = Space(("a", "b", "c"))
    >>> evaluate(MassFunctional.make(s, ["1/2", 0, "1/2"]), Gamble.make(s, [0, 1, 2]))
    Fraction(1, 1)
    """
    return functional(gamble)


@dataclass(frozen=True)
class LowerEnvelope:
    """The pointwise minimum of finitely many mass functionals.

    With a common total mass this is an exact functional on all
    gambles, evaluable everywhere without optimization; restricting it
    to a finite domain gives an assessment whose natural extension can
    then be compared against the envelope itself.
    """

    functionals: tuple[MassFunctional, ...]

    def __post_init__(self) -> None:
        if not self.functionals:
            raise ValueError("an envelope needs at least one mass functional")
        total = self.functionals[0].total_mass
        if any(f.total_mass != total for f in self.functionals):
            raise ValueError("envelope members must share one total mass")

    @property
    def space(self) -> Space:
        return self.functionals[0].space

    @property
    def total_mass(self) -> Fraction:
        return self.functionals[0].total_mass

    def __call__(self, gamble: Gamble) -> Fraction:
        return min(f(gamble) for f in self.functionals)

    def restrict(self, domain: Iterable[Gamble]) -> Assessment:
        unique = {g.values: g for g in domain}.values()
        return Assessment.of(self.space, ((g, self(g)) for g in sort_gambles(unique)))


@dataclass(frozen=True)
class ExactDecomposition:
    """An exact assessment written as scale times a coherent lower prevision.

    The scale is the assessment's norm.  When the scale is zero (the
    assessment is identically zero) the coherent part is the vacuous
    lower prevision on the same domain, a canonical but arbitrary
    choice; ``is_unique`` records whether the pair was forced (it is
    exactly when the constant gamble one is assessed and the norm is
    nonzero).
    """

    scale: Fraction
    coherent_part: Assessment
    is_unique: bool
