"""JSON round-tripping for instances, allocations, and 3-partition inputs.

House values travel as decimal strings so arbitrary-precision integers
survive any JSON parser.  Rational or decimal-point inputs are rescaled to
integers at ingestion (common denominator), preserving envy ratios.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm

from .core import Allocation, Graph, HouseValues, Instance
from .errors import ValidationError
from .gadgets import ThreePartitionInstance


def instance_to_json(instance: Instance) -> dict:
    return {
        "n": instance.graph.n,
        "edges": [[u, v] for u, v in instance.graph.edges],
        "values": [str(v) for v in instance.houses.values],
    }


def values_from_strings(raw) -> HouseValues:
    """Parse decimal-string values, rescaling rationals to integers if needed."""
    fracs = []
    for i, s in enumerate(raw):
        try:
            fracs.append(Fraction(str(s)))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"value {i} is not a number: {s!r}", index=i) from exc
    denom = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return HouseValues.from_iterable(int(f * denom) for f in fracs)


def instance_from_json(data: dict) -> Instance:
    graph = Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
    houses = values_from_strings(data["values"])
    return Instance.create(graph, houses)


def allocation_to_json(alloc: Allocation) -> dict:
    return {"assignment": list(alloc.assignment)}


def allocation_from_json(data: dict) -> Allocation:
    return Allocation.from_iterable(data["assignment"])


def tp_to_json(tp: ThreePartitionInstance) -> dict:
    return {"items": list(tp.items), "T": tp.T}


def tp_from_json(data: dict) -> ThreePartitionInstance:
    return ThreePartitionInstance.create(data["items"], int(data["T"]))


def load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(data, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")
