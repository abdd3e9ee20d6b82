import math

import pytest

from keysim import (KeyDef, KeyboardLayout, LayoutError, LayoutKind, PointMM,
                    RectMM, SUPPORTED_ALPHABET, builtin_layout, hit_test,
                    key_distance, resolve_symbol, validate_layout)
from keysim.geometry import ActionVariant
from keysim.layout_io import (LayoutFormatError, layout_from_dict,
                              layout_to_dict)

E161 = {
    "2": "abc", "3": "def", "4": "ghi", "5": "jkl",
    "6": "mno", "7": "pqrs", "8": "tuv", "9": "wxyz",
}


def test_qwert_dual_bindings(qwert):
    q = qwert.key("q")
    assert q.tap_symbol == "q"
    assert q.slide_symbol == "y"


def test_qwert_key_sizes(qwert):
    for k in qwert.keys:
        assert k.bounds.width == pytest.approx(10.2)
        assert k.bounds.height == pytest.approx(10.7)


def test_qwerty_key_sizes(qwerty):
    for ch in "qwertyuiopasdfghjklzxcvbnm":
        k = qwerty.key(ch)
        assert k.bounds.width == pytest.approx(5.1)
        assert k.bounds.height == pytest.approx(7.9)


def test_3x4_key_seven(three_by_four):
    assert three_by_four.key("7").multitap_symbols == ("p", "q", "r", "s")


def test_3x4_key_sizes(three_by_four):
    for k in three_by_four.keys:
        assert k.bounds.width == pytest.approx(18.0)
        assert k.bounds.height == pytest.approx(15.0)


def test_unknown_builtin_kind():
    with pytest.raises(LayoutError, match="unsupported builtin"):
        builtin_layout("dvorak")


def test_builtins_validate_clean(all_builtins):
    for layout in all_builtins:
        report = validate_layout(layout)
        assert report.ok, report.issues


def _tiny_layout(keys, home="k0", screen_w=100.0, screen_h=100.0):
    return KeyboardLayout("tiny", LayoutKind.CUSTOM,
                          RectMM(PointMM(0, 0), screen_w, screen_h),
                          tuple(keys), home_key=home)


def _key_at(kid, x, y, w=10.0, h=10.0, **kw):
    return KeyDef(kid, RectMM(PointMM(x, y), w, h), **kw)


def test_validate_duplicate_binding():
    layout = _tiny_layout([_key_at("k0", 0, 0, tap_symbol="a"),
                           _key_at("k1", 20, 0, tap_symbol="a")])
    report = validate_layout(layout)
    assert any("duplicate binding 'a'" in i.message for i in report.errors)


def test_validate_unreachable_symbol(qwert):
    keys = [k for k in qwert.keys if k.id != "c"]
    layout = KeyboardLayout("broken", LayoutKind.CUSTOM, qwert.screen,
                            tuple(keys), home_key="space")
    report = validate_layout(layout)
    assert any("unreachable symbol ','" in i.message for i in report.errors)


def test_validate_overlap_and_bounds():
    layout = _tiny_layout([_key_at("k0", 0, 0, tap_symbol="a"),
                           _key_at("k1", 5, 5, tap_symbol="b"),
                           _key_at("k2", 95, 95, tap_symbol="c")])
    report = validate_layout(layout)
    messages = [i.message for i in report.errors]
    assert any("overlap" in m for m in messages)
    assert any("outside screen" in m for m in messages)


def test_resolve_slide(qwert):
    actions = resolve_symbol("y", qwert)
    assert len(actions) == 1
    assert actions[0].variant is ActionVariant.POINT_SLIDE_UP
    assert actions[0].target == "q"
    assert actions[0].produced_symbol == "y"


def test_resolve_tap(qwert):
    actions = resolve_symbol("q", qwert)
    assert [a.variant for a in actions] == [ActionVariant.POINT_TAP]
    assert actions[0].target == "q"


def test_resolve_multitap_s(three_by_four):
    actions = resolve_symbol("s", three_by_four)
    assert len(actions) == 4
    assert all(a.variant is ActionVariant.POINT_TAP for a in actions)
    assert all(a.target == "7" for a in actions)
    assert [a.produced_symbol for a in actions] == [None, None, None, "s"]


def test_resolve_e161_brute_force(three_by_four):
    for key_id, group in E161.items():
        for i, letter in enumerate(group):
            actions = resolve_symbol(letter, three_by_four)
            assert len(actions) == i + 1
            assert all(a.target == key_id for a in actions)


def test_resolve_every_symbol_unique(all_builtins):
    for layout in all_builtins:
        for sym in sorted(SUPPORTED_ALPHABET):
            actions = resolve_symbol(sym, layout)
            assert len({a.target for a in actions}) == 1


def test_resolve_unsupported(qwert):
    with pytest.raises(LayoutError, match="no binding"):
        resolve_symbol("!", qwert)


def test_key_distance_examples(qwert):
    assert key_distance(qwert, "q", "q") == 0.0
    assert key_distance(qwert, "q", "w") == pytest.approx(11.2)
    assert key_distance(qwert, "q", "e") == pytest.approx(22.4)


def test_key_distance_symmetric(all_builtins):
    for layout in all_builtins:
        ids = [k.id for k in layout.keys]
        for a in ids:
            for b in ids:
                d = key_distance(layout, a, b)
                assert d >= 0
                assert d == key_distance(layout, b, a)
                if a == b:
                    assert d == 0.0


def test_key_distance_unknown_key(qwert):
    with pytest.raises(LayoutError, match="unknown key"):
        key_distance(qwert, "q", "nope")


def test_hit_test_centers(all_builtins):
    for layout in all_builtins:
        for k in layout.keys:
            assert hit_test(layout, k.bounds.center) == k.id


def test_hit_test_gap_and_outside(qwert):
    q = qwert.key("q").bounds
    gap = PointMM(q.origin.x + q.width + 0.5, q.origin.y + 1.0)
    assert hit_test(qwert, gap) is None
    assert hit_test(qwert, PointMM(-5.0, -5.0)) is None
    assert hit_test(qwert, PointMM(1.0, 1.0)) is None  # above keyboard


def test_hit_test_shared_boundary_deterministic(three_by_four):
    # Keys 1 and 2 share a vertical edge; a point on it is 2 mm from
    # key 2's origin and 18 mm from key 1's, so key 2 owns it.
    k1 = three_by_four.key("1").bounds
    edge = PointMM(k1.origin.x + k1.width, k1.origin.y + 2.0)
    assert hit_test(three_by_four, edge) == "2"


def test_serialization_round_trip(all_builtins):
    for layout in all_builtins:
        restored = layout_from_dict(layout_to_dict(layout))
        assert validate_layout(restored).ok == validate_layout(layout).ok
        for sym in sorted(SUPPORTED_ALPHABET):
            assert resolve_symbol(sym, restored) == resolve_symbol(sym, layout)
        assert restored.home_key == layout.home_key


def test_parser_rejects_unknown_field(qwert):
    data = layout_to_dict(qwert)
    data["color"] = "blue"
    with pytest.raises(LayoutFormatError, match="unknown field 'color'"):
        layout_from_dict(data)


def test_parser_rejects_unknown_key_field(qwert):
    data = layout_to_dict(qwert)
    data["keys"][0]["label"] = "Q"
    with pytest.raises(LayoutFormatError, match="unknown field 'label'"):
        layout_from_dict(data)
