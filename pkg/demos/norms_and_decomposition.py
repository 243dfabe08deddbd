"""Walkthrough: the norm of an assessment and its coherent decomposition.

An assessment that prices a single event at alpha has norm alpha: it is
alpha times the coherent assessment pricing the event at one, and no
smaller scale works.  The norm is computed by intersecting, over the
assessed gambles, the intervals of total masses that dominating
functionals pinned to the assessed value can have; an infinite norm
means no exact extension exists at all.
"""

from fractions import Fraction as F

from lowerprev import (
    Assessment,
    Event,
    Gamble,
    Space,
    decompose,
    format_rational,
    is_exact,
    natural_extension_exact,
    norm,
)

space = Space(("a", "b", "c"))
indicator = Event.from_labels(space, ["a"]).indicator()

print("Norms of single-event prices:")
for alpha in ("1/10", "1/3", "1/2", "9/10"):
    priced = Assessment.of(space, {indicator: alpha})
    print(f"  price {alpha}: norm = {format_rational(norm(priced))}")

# The same idea on non-indicator gambles.
pair = Space(("a", "b"))
ramp = Gamble.make(pair, [1, 2])
dip = Gamble.make(pair, [-2, -1])
print("\nramp (1,2) priced at 1: norm =", format_rational(norm(Assessment.of(pair, {ramp: 1}))))
print("dip (-2,-1) priced at -2: norm =", format_rational(norm(Assessment.of(pair, {dip: -2}))))

# Decomposition: assessment = scale x coherent part.
parts = decompose(Assessment.of(space, {indicator: "1/3"}))
print(
    "\ndecomposition of the 1/3 price: scale",
    format_rational(parts.scale),
    "x coherent price",
    format_rational(parts.coherent_part.value(indicator)),
    "| forced?",
    parts.is_unique,
)

# With the unit constant in the domain the scale is pinned down.
unit = Gamble.constant(space, 1)
doubled = Assessment.of(space, {unit: 2, Gamble.make(space, [0, 2, 4]): 0})
parts = decompose(doubled)
print(
    "doubled book: scale",
    format_rational(parts.scale),
    "| forced?",
    parts.is_unique,
)
print(
    "norm-preserving extension of (0,3,6) under the doubled book:",
    format_rational(natural_extension_exact(doubled, Gamble.make(space, [0, 3, 6]))),
)

# Broken monotonicity has no exact extension: the norm diverges.
broken = Assessment.of(space, {indicator: "1/2", unit: "1/4"})
print("\nbroken book exact?", is_exact(broken).holds, "| norm =", format_rational(norm(broken)))
