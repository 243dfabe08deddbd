"""Problem documents: the JSON wire format of the batch front-end.

A document names a space, optionally some gambles and events, an
assessment of lower values, and a query section.  Rationals travel as
strings so nothing ever round-trips through a float; a gamble
serializes as an array of rational strings and an event as an array of
outcome labels.  Parsing validates against the bundled JSON schema
(``schema/v1``) and then resolves references; re-serializing a parsed
document reproduces the input value for value.
"""

from __future__ import annotations

import importlib.resources
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

import jsonschema

from .assessment import Assessment, MassFunctional
from .choquet import AdditivityGap, ChoquetResult
from .consistency import (
    CoherenceGap,
    NormIntervalGap,
    SureLossWitness,
    UnattainableGamble,
)
from .gambles import Event, Gamble, Space, WedgeWitness
from .monotone import MinPreservationGap, MobiusTransform, MonotonicityViolation
from .rational import format_rational, parse_rational
from .verdict import Verdict

__all__ = [
    "DocumentError",
    "ProblemDocument",
    "parse_document",
    "load_document",
    "problem_schema",
    "report_schema",
    "gamble_to_json",
    "event_to_json",
    "witness_to_json",
]


class DocumentError(ValueError):
    """A document that does not validate, with a field-path diagnostic."""


def _schema(name: str) -> dict:
    text = (
        importlib.resources.files("lowerprev").joinpath(f"schema/v1/{name}").read_text()
    )
    return json.loads(text)


def problem_schema() -> dict:
    return _schema("problem.schema.json")


def report_schema() -> dict:
    return _schema("report.schema.json")


@dataclass(frozen=True)
class ProblemDocument:
    """A parsed document plus the raw value it came from."""

    space: Space
    gambles: Mapping[str, Gamble]
    events: Mapping[str, Event]
    assessment: Assessment
    queries: tuple[Mapping[str, Any], ...]
    raw: Mapping[str, Any]

    def resolve_gamble(self, ref: Any, path: str = "gamble") -> Gamble:
        """A gamble from a name, an array of rational strings, or a comma list."""
        if isinstance(ref, str):
            if ref in self.gambles:
                return self.gambles[ref]
            if "," in ref:
                ref = [part.strip() for part in ref.split(",")]
            else:
                raise DocumentError(f"{path}: unknown gamble name {ref!r}")
        if isinstance(ref, (list, tuple)):
            if len(ref) != self.space.size:
                raise DocumentError(
                    f"{path}: gamble has {len(ref)} values on a space of size {self.space.size}"
                )
            try:
                return Gamble.make(self.space, ref)
            except ValueError as exc:
                raise DocumentError(f"{path}: {exc}") from exc
        raise DocumentError(f"{path}: expected a gamble name or vector")

    def resolve_event(self, ref: Any, path: str = "event") -> Event:
        """An event from a name, an array of labels, or a comma list."""
        if isinstance(ref, str):
            if ref in self.events:
                return self.events[ref]
            ref = [part.strip() for part in ref.split(",") if part.strip()]
        if isinstance(ref, (list, tuple)):
            try:
                return Event.from_labels(self.space, ref)
            except KeyError as exc:
                raise DocumentError(f"{path}: {exc.args[0]}") from exc
        raise DocumentError(f"{path}: expected an event name or label list")

    def serialize(self) -> dict:
        """The original JSON value; round-trips modulo whitespace."""
        return json.loads(json.dumps(self.raw))


def parse_document(data: Mapping[str, Any]) -> ProblemDocument:
    """Validate against ``schema/v1`` and resolve every reference."""
    try:
        jsonschema.validate(data, problem_schema())
    except jsonschema.ValidationError as exc:
        raise DocumentError(f"{exc.json_path}: {exc.message}") from exc
    try:
        space = Space.make(data["space"])
    except ValueError as exc:
        raise DocumentError(f"$.space: {exc}") from exc

    gambles: dict[str, Gamble] = {}
    for name, vector in data.get("gambles", {}).items():
        if len(vector) != space.size:
            raise DocumentError(
                f"$.gambles.{name}: {len(vector)} values on a space of size {space.size}"
            )
        gambles[name] = Gamble.make(space, vector)
    events: dict[str, Event] = {}
    for name, labels in data.get("events", {}).items():
        try:
            events[name] = Event.from_labels(space, labels)
        except KeyError as exc:
            raise DocumentError(f"$.events.{name}: {exc.args[0]}") from exc

    doc = ProblemDocument(space, gambles, events, Assessment(space, ()), (), data)
    entries: list[tuple[Gamble, Fraction]] = []
    for i, entry in enumerate(data["assessment"]):
        path = f"$.assessment[{i}]"
        if "gamble" in entry:
            g = doc.resolve_gamble(entry["gamble"], path + ".gamble")
        else:
            g = doc.resolve_event(entry["event"], path + ".event").indicator()
        value = parse_rational(entry["lower"])
        entries.append((g, value))
    try:
        assessment = Assessment(space, tuple(entries))
    except ValueError as exc:
        raise DocumentError(f"$.assessment: {exc}") from exc
    queries = tuple(data.get("queries", ()))
    return ProblemDocument(space, gambles, events, assessment, queries, data)


def load_document(path: str) -> ProblemDocument:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"{path}: not valid JSON: {exc}") from exc
    return parse_document(data)


def gamble_to_json(gamble: Gamble) -> list[str]:
    return [format_rational(v) for v in gamble.values]


def event_to_json(event: Event) -> list[str]:
    return list(event.labels)


def assessment_to_json(assessment: Assessment) -> list[dict]:
    out = []
    for gamble, value in assessment.entries:
        if gamble.is_indicator():
            out.append({"event": event_to_json(gamble.as_event()), "lower": format_rational(value)})
        else:
            out.append({"gamble": gamble_to_json(gamble), "lower": format_rational(value)})
    return out


def mass_to_json(mass: MassFunctional) -> list[str]:
    return [format_rational(m) for m in mass.masses]


def mobius_to_json(transform: MobiusTransform) -> list[dict]:
    return [
        {"event": event_to_json(e), "mass": format_rational(c)}
        for e, c in transform.items()
    ]


def choquet_to_json(result: ChoquetResult) -> dict:
    return {
        "value": format_rational(result.value),
        "trace": [
            {
                "threshold": format_rational(threshold),
                "event": event_to_json(event),
                "level": format_rational(level),
            }
            for threshold, event, level in result.trace
        ],
    }


def witness_to_json(witness: Any) -> dict | None:
    """Kind-tagged JSON for every witness the kernel can produce."""
    if witness is None:
        return None
    if isinstance(witness, MassFunctional):
        return {"kind": "dominating_mass", "masses": mass_to_json(witness)}
    if isinstance(witness, SureLossWitness):
        return {
            "kind": "sure_loss_combination",
            "gambles": [gamble_to_json(g) for g in witness.gambles],
            "multiplicities": list(witness.multiplicities),
            "sup_combination": format_rational(witness.sup_combination),
            "assessed_total": format_rational(witness.assessed_total),
        }
    if isinstance(witness, CoherenceGap):
        return {
            "kind": "coherence_gap",
            "gamble": gamble_to_json(witness.gamble),
            "assessed": format_rational(witness.assessed),
            "extension": format_rational(witness.extension),
        }
    if isinstance(witness, UnattainableGamble):
        return {"kind": "unattainable_gamble", "gamble": gamble_to_json(witness.gamble)}
    if isinstance(witness, NormIntervalGap):
        return {
            "kind": "norm_interval_gap",
            "lower_gamble": gamble_to_json(witness.lower_gamble),
            "lower": format_rational(witness.lower),
            "upper_gamble": gamble_to_json(witness.upper_gamble),
            "upper": format_rational(witness.upper),
        }
    if isinstance(witness, MonotonicityViolation):
        return {
            "kind": "monotonicity_violation",
            "order": witness.order,
            "base": gamble_to_json(witness.base),
            "companions": [gamble_to_json(g) for g in witness.companions],
            "sum": format_rational(witness.total),
            "alternating": witness.alternating,
            "via_inner": witness.via_inner,
        }
    if isinstance(witness, AdditivityGap):
        return {
            "kind": "additivity_gap",
            "f": gamble_to_json(witness.f),
            "g": gamble_to_json(witness.g),
            "sum_value": format_rational(witness.sum_value),
            "parts_total": format_rational(witness.parts_total),
            "via_extension": witness.via_extension,
        }
    if isinstance(witness, MinPreservationGap):
        return {
            "kind": "min_preservation_gap",
            "f": gamble_to_json(witness.f),
            "g": gamble_to_json(witness.g),
            "value_of_meet": format_rational(witness.value_of_meet),
            "min_of_values": format_rational(witness.min_of_values),
        }
    if isinstance(witness, WedgeWitness):
        return {
            "kind": "wedge_gap",
            "f": gamble_to_json(witness.f),
            "g": gamble_to_json(witness.g),
            "image_of_meet": gamble_to_json(witness.image_of_meet),
            "meet_of_images": gamble_to_json(witness.meet_of_images),
        }
    raise TypeError(f"no JSON form for witness {witness!r}")


def verdict_to_json(verdict: Verdict) -> dict:
    out: dict[str, Any] = {
        "decision": verdict.holds,
        "witness": witness_to_json(verdict.witness),
    }
    if verdict.info:
        info = {}
        for key, value in verdict.info.items():
            if key == "extended_pairs":
                info[key] = [
                    [gamble_to_json(f), gamble_to_json(g)] for f, g in value
                ]
            elif isinstance(value, Fraction):
                info[key] = format_rational(value)
            else:
                info[key] = value
        out["info"] = info
    return out
