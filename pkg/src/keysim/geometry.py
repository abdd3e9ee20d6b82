"""Keyboard layouts as physical geometry plus symbol-to-gesture bindings.

All coordinates are millimeters with the origin at the top-left of the
screen and y growing downward.  Layouts are immutable after construction,
so every operation here is a pure function and safe to share across
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

#: Symbols a layout must be able to produce: 26 lowercase letters,
#: space, period and comma.
SUPPORTED_ALPHABET = frozenset("abcdefghijklmnopqrstuvwxyz .,")

#: Standard E.161 letter grouping for a 12-key phone keypad.
E161_GROUPS = {
    "2": "abc",
    "3": "def",
    "4": "ghi",
    "5": "jkl",
    "6": "mno",
    "7": "pqrs",
    "8": "tuv",
    "9": "wxyz",
}


class LayoutKind(Enum):
    QWERT = "qwert"
    QWERTY = "qwerty"
    THREE_BY_FOUR = "3x4"
    CUSTOM = "custom"


class ActionVariant(Enum):
    THINK = "think"
    POINT_TAP = "tap"
    POINT_SLIDE_UP = "slide"


class LayoutError(ValueError):
    """Raised for unknown keys/kinds or symbols a layout cannot produce."""


@dataclass(frozen=True)
class PointMM:
    x: float
    y: float


@dataclass(frozen=True)
class RectMM:
    origin: PointMM
    width: float
    height: float

    @property
    def center(self) -> PointMM:
        return PointMM(self.origin.x + self.width / 2.0,
                       self.origin.y + self.height / 2.0)

    def contains(self, p: PointMM) -> bool:
        return (self.origin.x <= p.x <= self.origin.x + self.width
                and self.origin.y <= p.y <= self.origin.y + self.height)

    def overlaps(self, other: "RectMM") -> bool:
        # Positive-area intersection; shared edges do not count.
        return (self.origin.x < other.origin.x + other.width
                and other.origin.x < self.origin.x + self.width
                and self.origin.y < other.origin.y + other.height
                and other.origin.y < self.origin.y + self.height)


@dataclass(frozen=True)
class KeyDef:
    """One key: bounds plus its symbol bindings.

    A key is either tap/slide typed (tap_symbol and/or slide_symbol) or
    multi-tap typed (multitap_symbols), never both.  Function keys such
    as enter or delete carry no bindings at all and produce no symbol.
    """

    id: str
    bounds: RectMM
    tap_symbol: str | None = None
    slide_symbol: str | None = None
    multitap_symbols: tuple[str, ...] = ()

    @property
    def is_multitap(self) -> bool:
        return bool(self.multitap_symbols)


@dataclass(frozen=True)
class PrimitiveAction:
    """One motor act: a think pause, a point-and-tap, or a point-and-slide-up.

    ``produced_symbol`` is set on the action that commits a symbol; in a
    multi-tap burst only the final tap carries it.
    """

    variant: ActionVariant
    target: str | None = None
    produced_symbol: str | None = None


def think() -> PrimitiveAction:
    return PrimitiveAction(ActionVariant.THINK)


@dataclass(frozen=True)
class ValidationIssue:
    severity: str  # "error" or "warning"
    message: str
    key_id: str | None = None


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[ValidationIssue, ...]

    @property
    def ok(self) -> bool:
        return not any(i.severity == "error" for i in self.issues)

    @property
    def errors(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == "error"]


@dataclass(frozen=True)
class KeyboardLayout:
    name: str
    kind: LayoutKind
    screen: RectMM
    keys: tuple[KeyDef, ...]
    home_key: str
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {k.id: k for k in self.keys})

    def key(self, key_id: str) -> KeyDef:
        try:
            return self._by_id[key_id]
        except KeyError:
            raise LayoutError(f"unknown key id {key_id!r} in layout {self.name!r}")


# ---------------------------------------------------------------------------
# Built-in layouts
# ---------------------------------------------------------------------------

# Portrait LG LU6800 screen: 4.3 inch, 54.102 x 93.98 mm.
_LU6800_W = 54.102
_LU6800_H = 93.98

# Dual-character layout: left-half QWERTY keys carry the corresponding
# right-half letter on slide-up; g and b have no slide partner, comma and
# period ride on c and v.
_DUAL_ROWS = [
    [("q", "y"), ("w", "u"), ("e", "i"), ("r", "o"), ("t", "p")],
    [("a", "h"), ("s", "j"), ("d", "k"), ("f", "l"), ("g", None)],
    [("z", "n"), ("x", "m"), ("c", ","), ("v", "."), ("b", None)],
]


def _key(key_id, x, y, w, h, tap=None, slide=None, multitap=()):
    return KeyDef(key_id, RectMM(PointMM(round(x, 3), round(y, 3)), w, h),
                  tap_symbol=tap, slide_symbol=slide,
                  multitap_symbols=tuple(multitap))


def _build_qwert() -> KeyboardLayout:
    kw, kh, gap = 10.2, 10.7, 1.0
    px, py = kw + gap, kh + gap
    # Five 10.2 mm columns with 1 mm spacing need 55.0 mm, slightly wider
    # than the LU6800 panel; the screen rect is widened to keep all keys
    # on-screen.
    screen_w = 5 * kw + 4 * gap  # 55.0
    rows_h = 4 * kh + 3 * gap    # 45.8
    y0 = _LU6800_H - rows_h
    keys = []
    for r, row in enumerate(_DUAL_ROWS):
        for c, (tap, slide) in enumerate(row):
            keys.append(_key(tap, c * px, y0 + r * py, kw, kh,
                             tap=tap, slide=slide))
    # Bottom row: enter / number / space / delete, centered.
    bx0 = (screen_w - (4 * kw + 3 * gap)) / 2.0
    by = y0 + 3 * py
    for i, (kid, tap) in enumerate(
            [("enter", None), ("number", None), ("space", " "), ("delete", None)]):
        keys.append(_key(kid, bx0 + i * px, by, kw, kh, tap=tap))
    return KeyboardLayout("qwert", LayoutKind.QWERT,
                          RectMM(PointMM(0.0, 0.0), screen_w, _LU6800_H),
                          tuple(keys), home_key="space")


_QWERTY_ROWS = ["qwertyuiop", "asdfghjkl", "zxcvbnm"]


def _build_qwerty() -> KeyboardLayout:
    kw, kh, gap = 5.1, 7.9, 0.3
    px, py = kw + gap, kh + gap
    y0 = _LU6800_H - (4 * kh + 3 * gap)
    keys = []
    for r, row in enumerate(_QWERTY_ROWS):
        row_w = len(row) * kw + (len(row) - 1) * gap
        x0 = round((_LU6800_W - row_w) / 2.0, 3)
        for c, ch in enumerate(row):
            keys.append(_key(ch, x0 + c * px, y0 + r * py, kw, kh, tap=ch))
    # Bottom row: comma, a wide space bar, period.
    space_w = 20.0
    row_w = 2 * kw + space_w + 2 * gap
    x0 = round((_LU6800_W - row_w) / 2.0, 3)
    by = y0 + 3 * py
    keys.append(_key("comma", x0, by, kw, kh, tap=","))
    keys.append(_key("space", x0 + px, by, space_w, kh, tap=" "))
    keys.append(_key("period", x0 + px + space_w + gap, by, kw, kh, tap="."))
    return KeyboardLayout("qwerty", LayoutKind.QWERTY,
                          RectMM(PointMM(0.0, 0.0), _LU6800_W, _LU6800_H),
                          tuple(keys), home_key="space")


def _build_3x4() -> KeyboardLayout:
    kw, kh = 18.0, 15.0
    x0 = round((_LU6800_W - 3 * kw) / 2.0, 3)
    y0 = _LU6800_H - 4 * kh
    order = ["1", "2", "3", "4", "5", "6", "7", "8", "9", "star", "0", "hash"]
    keys = []
    for i, kid in enumerate(order):
        r, c = divmod(i, 3)
        x, y = x0 + c * kw, y0 + r * kh
        if kid == "1":
            keys.append(_key(kid, x, y, kw, kh, multitap=(".", ",")))
        elif kid in E161_GROUPS:
            keys.append(_key(kid, x, y, kw, kh, multitap=E161_GROUPS[kid]))
        elif kid == "0":
            keys.append(_key(kid, x, y, kw, kh, tap=" "))
        else:
            keys.append(_key(kid, x, y, kw, kh))
    return KeyboardLayout("3x4", LayoutKind.THREE_BY_FOUR,
                          RectMM(PointMM(0.0, 0.0), _LU6800_W, _LU6800_H),
                          tuple(keys), home_key="0")


_BUILDERS = {
    LayoutKind.QWERT: _build_qwert,
    LayoutKind.QWERTY: _build_qwerty,
    LayoutKind.THREE_BY_FOUR: _build_3x4,
}


def builtin_layout(kind: LayoutKind | str) -> KeyboardLayout:
    """Return one of the three built-in layouts (QWERT, QWERTY, 3x4)."""
    if isinstance(kind, str):
        try:
            kind = LayoutKind(kind.lower())
        except ValueError:
            raise LayoutError(f"unsupported builtin {kind!r}")
    if kind not in _BUILDERS:
        raise LayoutError(f"unsupported builtin {kind.value!r}")
    return _BUILDERS[kind]()


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def _bindings(key: KeyDef):
    """Yield (symbol, gesture, tap_count) triples the key can produce."""
    if key.tap_symbol is not None:
        yield key.tap_symbol, ActionVariant.POINT_TAP, 1
    if key.slide_symbol is not None:
        yield key.slide_symbol, ActionVariant.POINT_SLIDE_UP, 1
    for i, s in enumerate(key.multitap_symbols):
        yield s, ActionVariant.POINT_TAP, i + 1


def validate_layout(layout: KeyboardLayout) -> ValidationReport:
    """Check a layout for overlap, bounds, binding and reachability problems."""
    issues: list[ValidationIssue] = []

    seen_ids: set[str] = set()
    for key in layout.keys:
        if key.id in seen_ids:
            issues.append(ValidationIssue("error", f"duplicate key id {key.id!r}", key.id))
        seen_ids.add(key.id)
        if key.bounds.width <= 0 or key.bounds.height <= 0:
            issues.append(ValidationIssue("error", "non-positive key size", key.id))
        if key.multitap_symbols and (key.tap_symbol or key.slide_symbol):
            issues.append(ValidationIssue(
                "error", "key mixes multi-tap and tap/slide bindings", key.id))
        b = key.bounds
        inside = (layout.screen.contains(b.origin)
                  and layout.screen.contains(
                      PointMM(b.origin.x + b.width, b.origin.y + b.height)))
        if not inside:
            issues.append(ValidationIssue("error", "key outside screen", key.id))

    for i, a in enumerate(layout.keys):
        for b in layout.keys[i + 1:]:
            if a.bounds.overlaps(b.bounds):
                issues.append(ValidationIssue(
                    "error", f"keys {a.id!r} and {b.id!r} overlap", a.id))

    producers: dict[str, list[str]] = {}
    for key in layout.keys:
        for sym, _, _ in _bindings(key):
            producers.setdefault(sym, []).append(key.id)
    for sym, key_ids in sorted(producers.items()):
        if len(key_ids) > 1:
            issues.append(ValidationIssue(
                "error", f"duplicate binding {sym!r}", key_ids[0]))
        if sym not in SUPPORTED_ALPHABET:
            issues.append(ValidationIssue(
                "warning", f"binding {sym!r} outside supported alphabet", key_ids[0]))
    for sym in sorted(SUPPORTED_ALPHABET):
        if sym not in producers:
            issues.append(ValidationIssue("error", f"unreachable symbol {sym!r}"))

    if layout.home_key not in seen_ids:
        issues.append(ValidationIssue(
            "error", f"home key {layout.home_key!r} does not exist"))

    return ValidationReport(tuple(issues))


def resolve_symbol(symbol: str, layout: KeyboardLayout) -> list[PrimitiveAction]:
    """Map one symbol to its pointing actions (no think steps).

    Tap bindings give one tap, slide bindings one slide-up, multi-tap
    bindings i+1 taps on the same key for the group's i-th letter; the
    last action of the burst carries the produced symbol.
    """
    if symbol not in SUPPORTED_ALPHABET:
        raise LayoutError(f"no binding for unsupported symbol {symbol!r}")
    for key in layout.keys:
        for sym, gesture, count in _bindings(key):
            if sym != symbol:
                continue
            actions = [PrimitiveAction(gesture, key.id) for _ in range(count)]
            actions[-1] = PrimitiveAction(gesture, key.id, produced_symbol=symbol)
            return actions
    raise LayoutError(f"no binding for {symbol!r} in layout {layout.name!r}")


def key_distance(layout: KeyboardLayout, a: str, b: str) -> float:
    """Center-to-center Euclidean distance between two keys, in mm."""
    ca = layout.key(a).bounds.center
    cb = layout.key(b).bounds.center
    return math.hypot(ca.x - cb.x, ca.y - cb.y)


def hit_test(layout: KeyboardLayout, p: PointMM) -> str | None:
    """Return the key containing p, or None.

    A point on a shared boundary belongs to the key whose origin is
    closest to the point; remaining ties go to the lowest key id.
    """
    if not layout.screen.contains(p):
        return None
    hits = [k for k in layout.keys if k.bounds.contains(p)]
    if not hits:
        return None
    return min(hits, key=lambda k: (math.hypot(p.x - k.bounds.origin.x,
                                               p.y - k.bounds.origin.y),
                                    k.id)).id
