"""JSON (de)serialization of extension specs.

A spec document looks like::

    {"kind": "elab", "p": 3, "n": 1, "g_base": 0, "m": 2,
     "places": [{"phi": 2}, {"phi": 2}]}

``kind`` is ``cyclic``, ``elab`` or ``tame``.  Cyclic places are
``{"phi": [..], "e": ..}`` (``e`` optional, read off the leading zeros),
elab places ``{"phi": k}`` and tame places ``{"vu": k}``; for tame specs
``n`` is the degree of the Kummer extension.  Integers may be given as JSON
numbers or decimal strings; they are written back as strings.
"""

from __future__ import annotations

import json
from typing import Optional, Tuple

from .core import (
    CyclicPlace,
    CyclicTower,
    ElabPlace,
    ElementaryAbelian,
    GroupParams,
    TameKummer,
    TamePlace,
    ValidationError,
)

__all__ = [
    "parse_int",
    "parse_orders",
    "spec_from_dict",
    "spec_to_dict",
    "load_spec",
    "dumps_spec",
]

KINDS = ("cyclic", "elab", "tame")


def parse_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise ValidationError(f"{what}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("-").isdigit():
        return int(value)
    raise ValidationError(f"{what}: expected an integer, got {value!r}")


def parse_orders(value) -> Tuple[int, ...]:
    """``2``, ``"2"``, ``"1..4"`` or ``[1, 2]`` -> a tuple of orders m >= 1."""
    if isinstance(value, (list, tuple)):
        orders = tuple(parse_int(v, "m") for v in value)
    elif isinstance(value, str) and ".." in value:
        lo, _, hi = value.partition("..")
        lo, hi = parse_int(lo, "m"), parse_int(hi, "m")
        if lo > hi:
            raise ValidationError(f"m: empty range {value!r}")
        orders = tuple(range(lo, hi + 1))
    else:
        orders = (parse_int(value, "m"),)
    if not orders or any(m < 1 for m in orders):
        raise ValidationError(f"m: orders must be >= 1, got {value!r}")
    return orders


def _places(doc) -> list:
    places = doc.get("places", [])
    if not isinstance(places, list):
        raise ValidationError("places: expected a list")
    for i, pl in enumerate(places):
        if not isinstance(pl, dict):
            raise ValidationError(f"places[{i}]: expected an object")
    return places


def spec_from_dict(doc) -> Tuple[object, Optional[Tuple[int, ...]]]:
    """Build a spec; also return the orders listed under ``"m"``, if any."""
    if not isinstance(doc, dict):
        raise ValidationError("spec document must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ValidationError(f"kind: expected one of {', '.join(KINDS)}, got {kind!r}")
    p = parse_int(doc.get("p"), "p")
    n = parse_int(doc.get("n"), "n")
    g_base = parse_int(doc.get("g_base", 0), "g_base")
    if p < 2 or n < 1 or g_base < 0:
        raise ValidationError("need p >= 2, n >= 1 and g_base >= 0")
    places = _places(doc)
    orders = parse_orders(doc["m"]) if "m" in doc else None

    if kind == "cyclic":
        built = []
        for i, pl in enumerate(places):
            phi = pl.get("phi")
            if not isinstance(phi, list):
                raise ValidationError(f"places[{i}].phi: a cyclic place needs a list of n entries")
            phi = tuple(parse_int(v, f"places[{i}].phi") for v in phi)
            if "e" in pl:
                built.append(CyclicPlace(e=parse_int(pl["e"], f"places[{i}].e"), phi=phi))
            else:
                built.append(CyclicPlace.from_phi(phi))
        spec = CyclicTower(GroupParams(p, n), tuple(built), g_base)
    elif kind == "elab":
        if g_base != 0:
            raise ValidationError("g_base: elementary abelian extensions are taken over a rational base")
        built = tuple(ElabPlace(parse_int(pl.get("phi"), f"places[{i}].phi")) for i, pl in enumerate(places))
        spec = ElementaryAbelian(GroupParams(p, n), built)
    else:
        built = []
        for i, pl in enumerate(places):
            vu = parse_int(pl.get("vu"), f"places[{i}].vu")
            built.append(TamePlace.of(vu, n))
        spec = TameKummer(n, p, tuple(built), g_base)
    return spec, orders


def spec_to_dict(spec, orders=None) -> dict:
    if isinstance(spec, CyclicTower):
        doc = {"kind": "cyclic", "p": str(spec.params.p), "n": str(spec.params.n), "g_base": str(spec.g_base)}
        places = [{"phi": [str(v) for v in pl.phi], "e": str(pl.e)} for pl in spec.places]
    elif isinstance(spec, ElementaryAbelian):
        doc = {"kind": "elab", "p": str(spec.params.p), "n": str(spec.params.n), "g_base": "0"}
        places = [{"phi": str(pl.phi)} for pl in spec.places]
    elif isinstance(spec, TameKummer):
        doc = {"kind": "tame", "p": str(spec.p), "n": str(spec.n_deg), "g_base": str(spec.g_base)}
        places = [{"vu": str(pl.vu)} for pl in spec.places]
    else:
        raise TypeError(f"not an extension spec: {spec!r}")
    if orders is not None:
        doc["m"] = [str(m) for m in orders]
    doc["places"] = places
    return doc


def load_spec(path) -> Tuple[object, Optional[Tuple[int, ...]]]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not valid JSON ({exc})") from exc
    return spec_from_dict(doc)


def dumps_spec(spec, orders=None) -> str:
    return json.dumps(spec_to_dict(spec, orders), indent=2) + "\n"
