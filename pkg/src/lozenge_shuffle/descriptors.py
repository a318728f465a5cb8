"""JSON descriptors for regions and shuffles.

Region::

    {"type": "hexagon", "a": 3, "b": 8, "c": 4, "X": [2, 3, 5, 8, 9, 11], "Y": [3, 7]}
    {"type": "trapezoid", "m": 8, "n": 5, "S": [1, 4, 5, 9, 12]}

Shuffle::

    {"source": <region>, "Xp": [...], "Yp": [...]}

Structural problems raise :class:`ParseError`; a well-formed descriptor of an
invalid region raises :class:`RegionError`.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .errors import DomainError, ParseError, RegionError, ShuffleError
from .regions import DentedHexagon, DentSet, Trapezoid, validate_hexagon

Region = Union[DentedHexagon, Trapezoid]

_KEYS = {
    "hexagon": ("a", "b", "c", "X", "Y"),
    "trapezoid": ("m", "n", "S"),
}
_BARRIER_MSG = "barriers are not implemented"


def _reject_barrier(obj: dict) -> None:
    if any("barrier" in str(k).lower() for k in obj):
        raise NotImplementedError(_BARRIER_MSG)


def _int(obj: dict, key: str) -> int:
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{key!r} must be an integer, got {v!r}")
    return v


def _dents(obj: dict, key: str) -> DentSet:
    v = obj[key]
    if not isinstance(v, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in v):
        raise ParseError(f"{key!r} must be an array of integers, got {v!r}")
    try:
        return DentSet(v)
    except DomainError as exc:
        raise RegionError("dent set", f"{key}: {exc}") from None


def region_from_obj(obj: Any) -> Region:
    if not isinstance(obj, dict):
        raise ParseError("region descriptor must be a JSON object")
    _reject_barrier(obj)
    kind = obj.get("type")
    if kind not in _KEYS:
        raise ParseError(f"unknown region type {kind!r}")
    expected = {"type", *_KEYS[kind]}
    if set(obj) != expected:
        raise ParseError(f"{kind} descriptor needs exactly the keys {sorted(expected)}, "
                         f"got {sorted(obj)}")
    if kind == "hexagon":
        return validate_hexagon(_int(obj, "a"), _int(obj, "b"), _int(obj, "c"),
                                _dents(obj, "X"), _dents(obj, "Y"))
    return Trapezoid(_int(obj, "m"), _int(obj, "n"), _dents(obj, "S"))


def region_to_obj(region: Region) -> dict:
    if isinstance(region, DentedHexagon):
        return {"type": "hexagon", "a": region.a, "b": region.b, "c": region.c,
                "X": list(region.X), "Y": list(region.Y)}
    return {"type": "trapezoid", "m": region.m, "n": region.n, "S": list(region.S)}


def shuffle_from_obj(obj: Any) -> tuple:
    """``(source, Xp, Yp)``; the shuffle itself is validated by :func:`make_shuffle`."""
    if not isinstance(obj, dict):
        raise ParseError("shuffle descriptor must be a JSON object")
    _reject_barrier(obj)
    if set(obj) != {"source", "Xp", "Yp"}:
        raise ParseError(f"shuffle descriptor needs keys ['Xp', 'Yp', 'source'], got {sorted(obj)}")
    source = region_from_obj(obj["source"])
    if not isinstance(source, DentedHexagon):
        raise ParseError("a shuffle source must be a hexagon")
    try:
        return source, _dents(obj, "Xp"), _dents(obj, "Yp")
    except RegionError as exc:
        raise ShuffleError(str(exc)) from None


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
