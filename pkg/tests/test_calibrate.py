import pytest

from keysim import MotorParams, Observation, builtin_layout, calibrate, predict_text
from keysim.analytics import _compile_observation, _predicted_us
from keysim.geometry import ActionVariant
from keysim.transcribe import compile_text, normalize_text

TABLE4_TEXT = "thanks for your dinner. take care."
REPORTED_TOTALS_S = {"qwerty": 16.628, "3x4": 19.318, "qwert": 10.061}


def _observed(text, layout, params):
    return predict_text(text, layout, params).total_ms


def test_fast_path_matches_simulate(all_builtins):
    for params in (MotorParams(),
                   MotorParams(i_m=83.0, tap_cost=42.5, slide_extra=61.25,
                               intercept_a=12.0, eye_prep=3.0, eye_exec=4.0)):
        for layout in all_builtins:
            obs = Observation(TABLE4_TEXT, layout, 0.0)
            co = _compile_observation(obs, params.formulation)
            assert _predicted_us(co, params) == predict_text(
                TABLE4_TEXT, layout, params).total_us


def test_fixed_point(qwert):
    seed = MotorParams()
    obs = [Observation("hello world", qwert, _observed("hello world", qwert, seed))]
    fitted, report = calibrate(obs, ["tap_cost", "think_qwert"], seed)
    assert report.final_residual == 0.0
    assert fitted == seed


def test_tap_cost_closed_form(qwert):
    seed = MotorParams()
    text = "abc de"
    n_taps = 6  # one tap per symbol, no slides in "abc de" on QWERT
    base = _observed(text, qwert, seed)
    shift_ms = 40.0
    obs = [Observation(text, qwert, base + n_taps * shift_ms)]
    fitted, report = calibrate(obs, ["tap_cost"], seed)
    assert fitted.tap_cost == pytest.approx(seed.tap_cost + shift_ms, abs=0.01)
    assert report.final_residual < 1e-3


def test_residual_never_increases(qwert, qwerty):
    seed = MotorParams()
    obs = [Observation("hello there", qwert, 4000.0),
           Observation("hello there", qwerty, 9000.0)]
    _, report = calibrate(obs, ["tap_cost", "think_qwert", "think_qwerty"], seed)
    assert report.final_residual <= report.initial_residual


def test_reported_totals_within_5_percent(all_builtins):
    obs = [Observation(TABLE4_TEXT, layout,
                       REPORTED_TOTALS_S[layout.name] * 1000.0)
           for layout in all_builtins]
    free = ["think_qwerty", "think_qwert", "think_3x4", "tap_cost", "slide_extra"]
    fitted, report = calibrate(obs, free, MotorParams())
    for o in obs:
        predicted = predict_text(o.text, o.layout, fitted).total_ms
        assert predicted == pytest.approx(o.observed_ms, rel=0.05)


def test_affine_in_additive_fields(qwert, three_by_four):
    params = MotorParams()
    delta = 7.5  # ms, a whole number of microseconds
    for layout, field in [(qwert, "think_qwert"), (qwert, "tap_cost"),
                          (qwert, "slide_extra"), (qwert, "intercept_a"),
                          (three_by_four, "think_3x4"),
                          (three_by_four, "tap_cost")]:
        text = "on the way, boss."
        seq = compile_text(normalize_text(text), layout)
        if field.startswith("think"):
            count = sum(1 for a in seq.actions if a.variant is ActionVariant.THINK)
        elif field == "slide_extra":
            count = sum(1 for a in seq.actions
                        if a.variant is ActionVariant.POINT_SLIDE_UP)
        else:
            count = sum(1 for a in seq.actions
                        if a.variant is not ActionVariant.THINK)
        base = predict_text(text, layout, params).total_us
        bumped = predict_text(
            text, layout, params.with_values(**{field: getattr(params, field) + delta})
        ).total_us
        assert bumped - base == count * int(delta * 1000)


def test_calibrate_input_validation(qwert):
    with pytest.raises(ValueError, match="observation"):
        calibrate([], ["tap_cost"], MotorParams())
    obs = [Observation("hi", qwert, 1000.0)]
    with pytest.raises(ValueError, match="free"):
        calibrate(obs, [], MotorParams())
    with pytest.raises(ValueError, match="unknown free field"):
        calibrate(obs, ["formulation"], MotorParams())


def test_calibrate_deterministic(all_builtins):
    obs = [Observation(TABLE4_TEXT, layout,
                       REPORTED_TOTALS_S[layout.name] * 1000.0)
           for layout in all_builtins]
    free = ["think_qwerty", "think_qwert", "think_3x4", "tap_cost", "slide_extra"]
    a = calibrate(obs, free, MotorParams())
    b = calibrate(obs, free, MotorParams())
    assert a[0] == b[0]
    assert a[1] == b[1]
