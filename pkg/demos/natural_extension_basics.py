"""Walkthrough: assessments, sure loss, coherence and natural extension.

A subject prices a few gambles on a three-outcome space.  We check the
minimal rationality condition (some probability mass dominates the
prices), correct an overpriced book with the witness the checker hands
back, and then extend the assessment to new gambles by exact linear
programming.  Everything is a Fraction; no float appears anywhere.
"""

from fractions import Fraction as F

from lowerprev import (
    Assessment,
    Event,
    Gamble,
    Space,
    avoids_sure_loss,
    format_rational,
    is_coherent,
    natural_extension_prevision,
)

space = Space(("low", "mid", "high"))
swing = Gamble.make(space, ["-1", "0", "2"])
hedge = Gamble.make(space, ["1", "1/2", "-1/2"])

print("Outcomes:", ", ".join(space.labels))
print("swing =", [format_rational(v) for v in swing.values])
print("hedge =", [format_rational(v) for v in hedge.values])

# An overpriced book: both gambles priced above any common expectation.
greedy = Assessment.of(space, {swing: "1/2", hedge: "3/4"})
verdict = avoids_sure_loss(greedy)
print("\nGreedy prices avoid sure loss?", verdict.holds)
witness = verdict.witness
print(
    "Witness combination: sup =",
    format_rational(witness.sup_combination),
    "but the prices add to",
    format_rational(witness.assessed_total),
)

# Back off to defensible prices and the book becomes coherent.
careful = Assessment.of(space, {swing: "-1/4", hedge: "0"})
print("\nCareful prices avoid sure loss?", avoids_sure_loss(careful).holds)
print("Careful prices coherent?", is_coherent(careful).holds)

# Natural extension prices anything else as the envelope minimum.
for values in (["1", "0", "0"], ["0", "1", "1"], ["2", "1", "0"]):
    g = Gamble.make(space, values)
    price = natural_extension_prevision(careful, g)
    print("extension of", values, "=", format_rational(price))

# Lower probabilities are the special case of indicator gambles.
rain = Event.from_labels(space, ["high"])
print(
    "\nlower probability of 'high' =",
    format_rational(natural_extension_prevision(careful, rain.indicator())),
)
