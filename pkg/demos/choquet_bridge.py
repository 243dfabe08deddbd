"""Walkthrough: from a set function on events to prices for all gambles.

Sprinkle nonnegative inversion mass on a few events and sum it up: the
result is a completely monotone set function.  Its natural extension
to arbitrary gambles needs no optimization at all: it is the Choquet
integral of the inner set function, an exact telescoping sum over the
decreasing distribution function.  The two routes agree to the last
digit, which is the whole point of computing with rationals.
"""

import random
from fractions import Fraction as F

from lowerprev import (
    Assessment,
    Event,
    Gamble,
    Space,
    choquet_integral,
    decreasing_distribution,
    format_rational,
    inner_set_function,
    is_n_monotone,
    mobius,
    natural_extension_exact,
    powerset_inner,
)
from lowerprev.sampling import random_completely_monotone, random_gamble

space = Space(("a", "b", "c"))

# A hand-picked belief-style set function: mass 1/2 on {b, c}, 1/4 on
# {a}, and 1/4 on the whole space.
lattice = [
    Event.empty(space),
    Event.from_labels(space, ["a"]),
    Event.from_labels(space, ["b", "c"]),
    Event.full(space),
]
values = {
    lattice[0]: F(0),
    lattice[1]: F(1, 4),
    lattice[2]: F(1, 2),
    lattice[3]: F(1),
}
assessment = Assessment.on_events(space, values)

print("Inner set function on events outside the domain:")
for labels in (["a", "b"], ["b"], ["a", "c"]):
    event = Event.from_labels(space, labels)
    print("  ", labels, "->", format_rational(inner_set_function(assessment, event)))

inner = powerset_inner(assessment)
print("\nInversion masses of the inner set function:")
for event, coefficient in mobius(inner).items():
    if coefficient != 0:
        print("  ", list(event.labels), "->", format_rational(coefficient))

print("completely monotone?", is_n_monotone(inner, float("inf")).holds)

# The decreasing distribution of a gamble is a rational step function,
# and its integral is the gamble's extension price.
g = Gamble.make(space, ["-1", "1/2", "2"])
steps = decreasing_distribution(inner, g)
print("\ndecreasing distribution of (-1, 1/2, 2):")
for threshold, level in steps.steps:
    print(f"   level({format_rational(threshold)}) = {format_rational(level)}")
result = choquet_integral(inner, g)
print("Choquet value:", format_rational(result.value))
print(
    "natural extension:",
    format_rational(natural_extension_exact(assessment, g)),
)

# The agreement is not luck; it holds for random belief structures too.
rng = random.Random(12)
checked = 0
for _ in range(25):
    sample = random_completely_monotone(rng, space)
    query = random_gamble(rng, space)
    lhs = choquet_integral(sample, query).value
    rhs = natural_extension_exact(sample, query)
    assert lhs == rhs, (lhs, rhs)
    checked += 1
print(f"\nChoquet = natural extension on {checked} random cases, exactly.")
