"""Walkthrough: a coherent assessment whose extension is not 2-monotone.

Price the step gamble (0, 1, 2) and the unit constant both at 1 on a
three-outcome space.  The natural extension of these two prices is
perfectly coherent, and its restriction to events is even 2-monotone,
yet on the four-gamble lattice generated by the domain the order-2
alternating sum goes negative.  The same failure shows up as a
comonotone pair whose prices do not add, and as a pair of targets no
single dominating mass functional can attain together.
"""

from fractions import Fraction as F

from lowerprev import (
    Assessment,
    Gamble,
    Space,
    find_attaining,
    format_rational,
    is_comonotone_additive,
    is_coherent,
    is_n_monotone,
    join,
    lattice_closure,
    meet,
    natural_extension_prevision,
)

space = Space(("a", "b", "c"))
step = Gamble.make(space, [0, 1, 2])
unit = Gamble.constant(space, 1)
prices = Assessment.of(space, {step: 1, unit: 1})

print("Assessment coherent?", is_coherent(prices).holds)

# Close the domain under pointwise minima and maxima and extend.
closure = lattice_closure([step, unit])
extended = Assessment.of(
    space, ((g, natural_extension_prevision(prices, g)) for g in closure)
)
print("\nExtension on the closure:")
for g, v in extended.entries:
    print("  ", [format_rational(x) for x in g.values], "->", format_rational(v))

report = is_n_monotone(extended, 2)
print("\n2-monotone on the closure?", report.holds)
v = report.violation
print(
    "violating sum at base",
    [format_rational(x) for x in v.base.values],
    "with companions",
    [[format_rational(x) for x in c.values] for c in v.companions],
    "=",
    format_rational(v.total),
)

# The indicator restriction hides the failure: every coherent lower
# probability on three outcomes is 2-monotone.
events = Assessment.on_events(
    space,
    (
        (e, natural_extension_prevision(prices, e.indicator()))
        for e in space.all_events()
    ),
)
print("2-monotone on all events?", is_n_monotone(events, 2).holds)

# Comonotone additivity fails at the join/meet pair.
additive = is_comonotone_additive(extended)
print("\nComonotone additive?", additive.holds)
gap = additive.witness
print(
    "pair sums to",
    format_rational(gap.sum_value),
    "but the prices add to",
    format_rational(gap.parts_total),
)

# And no dominating mass functional attains both prices at once.
mass = find_attaining(extended, join(step, unit), meet(step, unit))
print("attaining functional for the pair:", mass)
