"""Reading and writing layout files.

Format (UTF-8 JSON, millimeters, at most 3 fractional digits):

    {
      "name": "...", "kind": "qwert|qwerty|3x4|custom",
      "screen": {"w_mm": ..., "h_mm": ...},
      "home_key": "...",
      "keys": [
        {"id": "...", "x_mm": ..., "y_mm": ..., "w_mm": ..., "h_mm": ...,
         "tap": "a", "slide": "h", "multitap": ["a","b","c"]}
      ]
    }

Unknown fields are rejected by name.
"""

from __future__ import annotations

import json

from .geometry import (KeyboardLayout, KeyDef, LayoutKind, PointMM, RectMM)


class LayoutFormatError(ValueError):
    """Raised when a layout file does not match the expected schema."""


_TOP_FIELDS = {"name", "kind", "screen", "home_key", "keys"}
_SCREEN_FIELDS = {"w_mm", "h_mm"}
_KEY_FIELDS = {"id", "x_mm", "y_mm", "w_mm", "h_mm", "tap", "slide", "multitap"}


def _check_fields(obj: dict, allowed: set[str], where: str) -> None:
    for name in obj:
        if name not in allowed:
            raise LayoutFormatError(f"unknown field {name!r} in {where}")


def _number(obj: dict, name: str, where: str) -> float:
    if name not in obj:
        raise LayoutFormatError(f"missing field {name!r} in {where}")
    v = obj[name]
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise LayoutFormatError(f"field {name!r} in {where} must be a number")
    return float(v)


def layout_from_dict(data: dict) -> KeyboardLayout:
    if not isinstance(data, dict):
        raise LayoutFormatError("layout file must contain a JSON object")
    _check_fields(data, _TOP_FIELDS, "layout")
    for req in _TOP_FIELDS:
        if req not in data:
            raise LayoutFormatError(f"missing field {req!r} in layout")
    try:
        kind = LayoutKind(str(data["kind"]).lower())
    except ValueError:
        raise LayoutFormatError(f"unknown layout kind {data['kind']!r}")

    screen = data["screen"]
    if not isinstance(screen, dict):
        raise LayoutFormatError("'screen' must be an object")
    _check_fields(screen, _SCREEN_FIELDS, "screen")
    screen_rect = RectMM(PointMM(0.0, 0.0),
                         _number(screen, "w_mm", "screen"),
                         _number(screen, "h_mm", "screen"))

    if not isinstance(data["keys"], list):
        raise LayoutFormatError("'keys' must be an array")
    keys = []
    for i, kd in enumerate(data["keys"]):
        where = f"keys[{i}]"
        if not isinstance(kd, dict):
            raise LayoutFormatError(f"{where} must be an object")
        _check_fields(kd, _KEY_FIELDS, where)
        if "id" not in kd:
            raise LayoutFormatError(f"missing field 'id' in {where}")
        multitap = kd.get("multitap", [])
        if not isinstance(multitap, list) or not all(isinstance(s, str) for s in multitap):
            raise LayoutFormatError(f"field 'multitap' in {where} must be a string array")
        keys.append(KeyDef(
            id=str(kd["id"]),
            bounds=RectMM(PointMM(_number(kd, "x_mm", where),
                                  _number(kd, "y_mm", where)),
                          _number(kd, "w_mm", where),
                          _number(kd, "h_mm", where)),
            tap_symbol=kd.get("tap"),
            slide_symbol=kd.get("slide"),
            multitap_symbols=tuple(multitap),
        ))
    return KeyboardLayout(str(data["name"]), kind, screen_rect,
                          tuple(keys), home_key=str(data["home_key"]))


def layout_to_dict(layout: KeyboardLayout) -> dict:
    keys = []
    for k in layout.keys:
        kd: dict = {
            "id": k.id,
            "x_mm": round(k.bounds.origin.x, 3),
            "y_mm": round(k.bounds.origin.y, 3),
            "w_mm": round(k.bounds.width, 3),
            "h_mm": round(k.bounds.height, 3),
        }
        if k.tap_symbol is not None:
            kd["tap"] = k.tap_symbol
        if k.slide_symbol is not None:
            kd["slide"] = k.slide_symbol
        if k.multitap_symbols:
            kd["multitap"] = list(k.multitap_symbols)
        keys.append(kd)
    return {
        "name": layout.name,
        "kind": layout.kind.value,
        "screen": {"w_mm": round(layout.screen.width, 3),
                   "h_mm": round(layout.screen.height, 3)},
        "home_key": layout.home_key,
        "keys": keys,
    }


def load_layout(path) -> KeyboardLayout:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise LayoutFormatError(f"invalid JSON: {exc}") from exc
    return layout_from_dict(data)


def save_layout(layout: KeyboardLayout, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(layout_to_dict(layout), fh, indent=2)
        fh.write("\n")
