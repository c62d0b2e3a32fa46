"""JSON input formats and their exact round-trips.

Rationals travel as strings ("p" or "p/q"); decimal floats are rejected
everywhere because exactness is the product.  Market files key asset paths
by outcome identifier rather than by position, so a reshuffled outcome list
cannot silently misalign a filtration cell with a price.

All loaders re-check every model invariant and raise ``StructureError``
with a JSON-path (and, for syntax errors, line/column) pointing at the
offending element.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .cones import PolyhedralCone
from .errors import StructureError
from .lattice import RandomVariable, SampleSpace
from .market import Asset, Filtration, MarketModel
from .rationals import format_rational, parse_rational


def _fail(path: str, message: str):
    raise StructureError(f"{path}: {message}")


def _expect(value, kind, path: str):
    names = {dict: "object", list: "array", str: "string"}
    if not isinstance(value, kind):
        _fail(path, f"expected {names.get(kind, kind.__name__)}, got {type(value).__name__}")
    return value


def _get(obj: dict, key: str, kind, path: str):
    if key not in obj:
        _fail(path, f"missing key {key!r}")
    return _expect(obj[key], kind, f"{path}.{key}")


def parse_json(text: str, path: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None


def load_market(text: str, name: str = "<input>") -> MarketModel:
    doc = _expect(parse_json(text, name), dict, "$")
    space = _load_space(doc)
    cells = []
    for t, level in enumerate(_get(doc, "filtration", list, "$")):
        level = _expect(level, list, f"$.filtration[{t}]")
        parsed = []
        for c, cell in enumerate(level):
            cell = _expect(cell, list, f"$.filtration[{t}][{c}]")
            parsed.append([_expect(o, str, f"$.filtration[{t}][{c}]") for o in cell])
        cells.append(parsed)
    try:
        filtration = Filtration(space, cells)
    except StructureError as exc:
        _fail("$.filtration", str(exc))
    horizon = filtration.horizon
    assets = []
    for a, entry in enumerate(_get(doc, "assets", list, "$")):
        entry = _expect(entry, dict, f"$.assets[{a}]")
        name = _get(entry, "name", str, f"$.assets[{a}]")
        path_obj = _get(entry, "path", dict, f"$.assets[{a}]")
        unknown = set(path_obj) - set(space.outcomes)
        if unknown:
            _fail(f"$.assets[{a}].path", f"unknown outcome ids {sorted(unknown)}")
        per_time: list[list[Fraction]] = [[] for _ in range(horizon + 1)]
        for o in space.outcomes:
            if o not in path_obj:
                _fail(f"$.assets[{a}].path", f"missing outcome {o!r}")
            series = _expect(path_obj[o], list, f"$.assets[{a}].path.{o}")
            if len(series) != horizon + 1:
                _fail(f"$.assets[{a}].path.{o}",
                      f"expected {horizon + 1} prices, got {len(series)}")
            for t, raw in enumerate(series):
                where = f"$.assets[{a}].path.{o}[{t}]"
                per_time[t].append(parse_rational(_expect(raw, str, where), where))
        path = tuple(RandomVariable(space, vals) for vals in per_time)
        assets.append(Asset(name, path))
    try:
        return MarketModel(filtration, assets)
    except StructureError as exc:
        _fail("$.assets", str(exc))


def _load_space(doc: dict) -> SampleSpace:
    ids, probs = [], []
    for i, entry in enumerate(_get(doc, "outcomes", list, "$")):
        entry = _expect(entry, dict, f"$.outcomes[{i}]")
        ids.append(_get(entry, "id", str, f"$.outcomes[{i}]"))
        raw = _get(entry, "prob", str, f"$.outcomes[{i}]")
        probs.append(parse_rational(raw, f"$.outcomes[{i}].prob"))
    try:
        return SampleSpace(ids, probs)
    except StructureError as exc:
        _fail("$.outcomes", str(exc))


def dump_market(model: MarketModel) -> dict:
    """Schema-shaped dict; parse(dump(model)) reproduces the model exactly."""
    space = model.space
    return {
        "outcomes": [
            {"id": o, "prob": format_rational(p)}
            for o, p in zip(space.outcomes, space.probabilities)
        ],
        "filtration": [
            [[space.outcomes[i] for i in cell] for cell in level]
            for level in model.filtration.partitions
        ],
        "assets": [
            {
                "name": asset.name,
                "path": {
                    o: [format_rational(x.values[i]) for x in asset.path]
                    for i, o in enumerate(space.outcomes)
                },
            }
            for asset in model.assets
        ],
    }


def load_payoff(text: str, model: MarketModel, name: str = "<input>") -> RandomVariable:
    doc = _expect(parse_json(text, name), dict, "$")
    payoff = _get(doc, "payoff", dict, "$")
    space = model.space
    unknown = set(payoff) - set(space.outcomes)
    if unknown:
        _fail("$.payoff", f"unknown outcome ids {sorted(unknown)}")
    values = []
    for o in space.outcomes:
        if o not in payoff:
            _fail("$.payoff", f"missing outcome {o!r}")
        where = f"$.payoff.{o}"
        values.append(parse_rational(_expect(payoff[o], str, where), where))
    return RandomVariable(space, values)


def load_cone(text: str, name: str = "<input>") -> PolyhedralCone:
    doc = _expect(parse_json(text, name), dict, "$")
    space = _load_space(doc)
    generators = []
    for g, vec in enumerate(_get(doc, "generators", list, "$")):
        vec = _expect(vec, list, f"$.generators[{g}]")
        if len(vec) != len(space):
            _fail(f"$.generators[{g}]",
                  f"expected {len(space)} entries, got {len(vec)}")
        values = [parse_rational(_expect(raw, str, f"$.generators[{g}][{i}]"),
                                 f"$.generators[{g}][{i}]")
                  for i, raw in enumerate(vec)]
        generators.append(RandomVariable(space, values))
    include = doc.get("includes_neg_orthant", True)
    if not isinstance(include, bool):
        _fail("$.includes_neg_orthant", "expected a boolean")
    return PolyhedralCone(space, generators, includes_neg_orthant=include)


def values_by_outcome(x: RandomVariable) -> dict:
    return {o: format_rational(v) for o, v in zip(x.space.outcomes, x.values)}
