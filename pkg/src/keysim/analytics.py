"""Live-session analysis: transcription, scoring, learning curves and
parameter calibration against observed totals."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .geometry import (ActionVariant, KeyboardLayout, LayoutKind, PointMM,
                       hit_test)
from .motor import (Formulation, MotorParams, TUNABLE_FIELDS,
                    index_of_difficulty, ms_to_us)
from .simulate import Timeline, predict_text
from .transcribe import compile_text, normalize_text


# ---------------------------------------------------------------------------
# Session logs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointerEvent:
    t_ms: float
    phase: str  # "down" or "up"
    pos: PointMM  # millimeters


@dataclass(frozen=True)
class SessionLog:
    layout_name: str
    stimulus: str
    started_at: str
    px_per_mm: float
    events: tuple[PointerEvent, ...]
    subject_id: str = ""
    session_index: int = 1

    def __post_init__(self):
        if self.px_per_mm <= 0:
            raise ValueError("px_per_mm must be > 0")


@dataclass(frozen=True)
class AnalyticsConfig:
    """Gesture-classification knobs, none of which are measured values."""

    slide_threshold_mm: float = 4.0
    horizontal_tolerance_mm: float = 6.0
    multitap_timeout_ms: float = 1000.0


@dataclass(frozen=True)
class SessionResult:
    transcribed: str
    wpm: float
    error_distance: int
    keystroke_intervals: tuple[float, ...]


@dataclass(frozen=True)
class LearningCurvePoint:
    layout_name: str
    session_index: int
    mean_wpm: float
    stddev_wpm: float
    n: int


class SessionFormatError(ValueError):
    """Raised when a session-log file does not match the v1 schema."""


_LOG_FIELDS = {"version", "layout", "stimulus", "started_at", "px_per_mm",
               "subject_id", "session_index", "events"}
_EVENT_FIELDS = {"t_ms", "phase", "x_px", "y_px"}


def load_session_log(path) -> SessionLog:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SessionFormatError(f"invalid JSON: {exc}") from exc
    return session_log_from_dict(data)


def session_log_from_dict(data: dict) -> SessionLog:
    if not isinstance(data, dict):
        raise SessionFormatError("session log must be a JSON object")
    for name in data:
        if name not in _LOG_FIELDS:
            raise SessionFormatError(f"unknown field {name!r} in session log")
    if data.get("version") != 1:
        raise SessionFormatError(f"unsupported version {data.get('version')!r}")
    scale = float(data["px_per_mm"])
    if scale <= 0:
        raise SessionFormatError("px_per_mm must be > 0")
    events = []
    last_t = -math.inf
    expected = "down"
    for i, ev in enumerate(data.get("events", [])):
        where = f"events[{i}]"
        for name in ev:
            if name not in _EVENT_FIELDS:
                raise SessionFormatError(f"unknown field {name!r} in {where}")
        t = float(ev["t_ms"])
        phase = ev["phase"]
        if phase not in ("down", "up"):
            raise SessionFormatError(f"bad phase {phase!r} in {where}")
        if phase != expected:
            raise SessionFormatError(f"expected {expected!r} at {where}")
        if t < last_t:
            raise SessionFormatError(f"timestamps decrease at {where}")
        last_t = t
        expected = "up" if phase == "down" else "down"
        events.append(PointerEvent(t, phase,
                                   PointMM(float(ev["x_px"]) / scale,
                                           float(ev["y_px"]) / scale)))
    if events and events[-1].phase == "down":
        raise SessionFormatError("unmatched trailing down event")
    return SessionLog(
        layout_name=str(data["layout"]),
        stimulus=str(data["stimulus"]),
        started_at=str(data["started_at"]),
        px_per_mm=scale,
        events=tuple(events),
        subject_id=str(data.get("subject_id", "")),
        session_index=int(data.get("session_index", 1)),
    )


def session_log_to_dict(log: SessionLog) -> dict:
    return {
        "version": 1,
        "layout": log.layout_name,
        "stimulus": log.stimulus,
        "started_at": log.started_at,
        "px_per_mm": log.px_per_mm,
        "subject_id": log.subject_id,
        "session_index": log.session_index,
        "events": [
            {"t_ms": round(ev.t_ms, 3), "phase": ev.phase,
             "x_px": round(ev.pos.x * log.px_per_mm, 3),
             "y_px": round(ev.pos.y * log.px_per_mm, 3)}
            for ev in log.events
        ],
    }


def save_session_log(log: SessionLog, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(session_log_to_dict(log), fh, indent=2)
        fh.write("\n")


# ---------------------------------------------------------------------------
# Transcription and scoring
# ---------------------------------------------------------------------------

def session_wpm(char_count: int, duration_ms: float) -> float:
    """Words per minute: chars/second * 60 / 5."""
    if duration_ms <= 0:
        raise ValueError("duration must be > 0")
    return char_count / (duration_ms / 1000.0) * 60.0 / 5.0


def levenshtein(a: str, b: str) -> int:
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1,
                           prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


@dataclass(frozen=True)
class _Press:
    down_t: float
    up_t: float
    key_id: str | None
    is_slide: bool


def _presses(log: SessionLog, layout: KeyboardLayout,
             config: AnalyticsConfig) -> list[_Press]:
    events = log.events
    if not events:
        raise ValueError("session log has no events")
    if len(events) % 2 != 0:
        raise ValueError("unmatched down/up events")
    presses = []
    for down, up in zip(events[0::2], events[1::2]):
        if down.phase != "down" or up.phase != "up":
            raise ValueError("down/up events do not alternate")
        rise = down.pos.y - up.pos.y
        drift = abs(up.pos.x - down.pos.x)
        is_slide = (rise >= config.slide_threshold_mm
                    and drift < config.horizontal_tolerance_mm)
        presses.append(_Press(down.t_ms, up.t_ms,
                              hit_test(layout, down.pos), is_slide))
    return presses


def transcribe_session(log: SessionLog, layout: KeyboardLayout,
                       config: AnalyticsConfig = AnalyticsConfig()) -> SessionResult:
    """Recover the typed text from raw pointer events and score it.

    Taps and slide-ups map through the key bindings; consecutive taps on
    the same multi-tap key within the timeout cycle its letter group.
    Presses with no binding (function keys, gaps) produce nothing but do
    end any pending multi-tap group.
    """
    if log.layout_name != layout.name:
        raise ValueError(
            f"log recorded on {log.layout_name!r}, not {layout.name!r}")
    presses = _presses(log, layout, config)

    symbols: list[str] = []
    pending_key: str | None = None
    pending_count = 0
    pending_t = -math.inf

    def flush():
        nonlocal pending_key, pending_count
        if pending_key is not None:
            group = layout.key(pending_key).multitap_symbols
            symbols.append(group[(pending_count - 1) % len(group)])
        pending_key = None
        pending_count = 0

    for p in presses:
        key = layout.key(p.key_id) if p.key_id else None
        if key is None:
            flush()
            continue
        if key.is_multitap:
            if (pending_key == key.id
                    and p.down_t - pending_t <= config.multitap_timeout_ms):
                pending_count += 1
            else:
                flush()
                pending_key = key.id
                pending_count = 1
            pending_t = p.up_t
            continue
        flush()
        symbol = key.slide_symbol if p.is_slide else key.tap_symbol
        if symbol is not None:
            symbols.append(symbol)
    flush()

    transcribed = "".join(symbols)
    duration = log.events[-1].t_ms - log.events[0].t_ms
    wpm = session_wpm(len(transcribed), duration) if duration > 0 else 0.0
    intervals = tuple(b.down_t - a.down_t for a, b in zip(presses, presses[1:]))
    return SessionResult(
        transcribed=transcribed,
        wpm=wpm,
        error_distance=levenshtein(transcribed, log.stimulus),
        keystroke_intervals=intervals,
    )


def aggregate_sessions(
        results: list[tuple[SessionLog, SessionResult]]) -> list[LearningCurvePoint]:
    """Learning-curve points: mean and population stddev of wpm per
    (layout, session index)."""
    if not results:
        raise ValueError("no results to aggregate")
    groups: dict[tuple[str, int], list[float]] = {}
    for log, res in results:
        groups.setdefault((log.layout_name, log.session_index), []).append(res.wpm)
    points = []
    for (layout_name, idx), wpms in sorted(groups.items()):
        arr = np.asarray(wpms)
        points.append(LearningCurvePoint(layout_name, idx,
                                         float(arr.mean()),
                                         float(arr.std()),  # population
                                         len(wpms)))
    return points


def write_learning_curve_csv(points: list[LearningCurvePoint], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["layout", "session_index", "mean_wpm", "stddev_wpm", "n"])
    for p in points:
        writer.writerow([p.layout_name, p.session_index,
                         f"{p.mean_wpm:.3f}", f"{p.stddev_wpm:.3f}", p.n])


# ---------------------------------------------------------------------------
# Synthetic logs (simulation -> pointer events)
# ---------------------------------------------------------------------------

def synthesize_session_log(timeline: Timeline, layout: KeyboardLayout,
                           config: AnalyticsConfig = AnalyticsConfig(),
                           px_per_mm: float = 10.0,
                           stimulus: str | None = None,
                           subject_id: str = "synthetic",
                           session_index: int = 1) -> SessionLog:
    """Replay a simulated timeline as a pointer-event log.

    Taps press the key center; slide-ups release above the slide
    threshold.  When consecutive symbols share a multi-tap key, the
    replay waits out the multi-tap timeout so transcription sees the
    same symbol boundary the simulation intended.
    """
    if timeline.layout_name != layout.name:
        raise ValueError("timeline/layout mismatch")
    rise = config.slide_threshold_mm + 2.0
    events: list[PointerEvent] = []
    offset = 0.0
    prev_key: str | None = None
    prev_committed = False
    prev_up_t = -math.inf
    produced: list[str] = []
    for step in timeline.steps:
        action = step.action
        if action.variant is ActionVariant.THINK:
            continue
        key = layout.key(action.target)
        center = key.bounds.center
        down_t = (step.start_us + step.breakdown.think_us
                  + step.breakdown.eye_us + step.breakdown.movement_us) / 1000.0 + offset
        if (key.is_multitap and prev_committed and prev_key == key.id
                and down_t - prev_up_t <= config.multitap_timeout_ms):
            shift = config.multitap_timeout_ms - (down_t - prev_up_t) + 1.0
            offset += shift
            down_t += shift
        up_t = step.end_us / 1000.0 + offset
        if up_t <= down_t:
            up_t = down_t + 1.0
        if action.variant is ActionVariant.POINT_SLIDE_UP:
            up_pos = PointMM(center.x, center.y - rise)
        else:
            up_pos = center
        events.append(PointerEvent(down_t, "down", center))
        events.append(PointerEvent(up_t, "up", up_pos))
        prev_key = key.id
        prev_committed = action.produced_symbol is not None
        prev_up_t = up_t
        if action.produced_symbol is not None:
            produced.append(action.produced_symbol)
    base = events[0].t_ms if events else 0.0
    events = [replace(ev, t_ms=ev.t_ms - base) for ev in events]
    return SessionLog(
        layout_name=layout.name,
        stimulus=stimulus if stimulus is not None else "".join(produced),
        started_at="1970-01-01T00:00:00Z",
        px_per_mm=px_per_mm,
        events=tuple(events),
        subject_id=subject_id,
        session_index=session_index,
    )


# ---------------------------------------------------------------------------
# Calibration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Observation:
    text: str
    layout: KeyboardLayout
    observed_ms: float


@dataclass(frozen=True)
class CalibrationReport:
    initial_residual: float
    final_residual: float
    sweeps: int
    predicted_ms: tuple[float, ...]
    observed_ms: tuple[float, ...]


_THINK_FIELD = {
    LayoutKind.QWERT: "think_qwert",
    LayoutKind.THREE_BY_FOUR: "think_3x4",
}


@dataclass(frozen=True)
class _CompiledObservation:
    think_field: str
    n_think: int
    n_point: int
    n_slide: int
    ids: np.ndarray = field(compare=False)
    observed_ms: float


def _compile_observation(obs: Observation, formulation: Formulation) -> _CompiledObservation:
    seq = compile_text(normalize_text(obs.text), obs.layout)
    n_think = n_point = n_slide = 0
    ids = []
    current = obs.layout.home_key
    for action in seq.actions:
        if action.variant is ActionVariant.THINK:
            n_think += 1
            continue
        target = obs.layout.key(action.target)
        a = math.hypot(
            target.bounds.center.x - obs.layout.key(current).bounds.center.x,
            target.bounds.center.y - obs.layout.key(current).bounds.center.y)
        w = min(target.bounds.width, target.bounds.height)
        ids.append(index_of_difficulty(a, w, formulation))
        n_point += 1
        if action.variant is ActionVariant.POINT_SLIDE_UP:
            n_slide += 1
        current = action.target
    return _CompiledObservation(
        think_field=_THINK_FIELD.get(obs.layout.kind, "think_qwerty"),
        n_think=n_think, n_point=n_point, n_slide=n_slide,
        ids=np.asarray(ids), observed_ms=obs.observed_ms)


def _predicted_us(co: _CompiledObservation, params: MotorParams) -> int:
    """Exact total for one observation, matching simulate()'s rounding."""
    think_us = ms_to_us(getattr(params, co.think_field))
    per_point = (ms_to_us(params.tap_cost) + ms_to_us(params.eye_prep)
                 + ms_to_us(params.eye_exec))
    movement = int(np.rint((params.intercept_a + params.i_m * co.ids)
                           * 1000.0).sum())
    return (co.n_think * think_us + co.n_point * per_point
            + co.n_slide * ms_to_us(params.slide_extra) + movement)


def _residual(compiled: list[_CompiledObservation], params: MotorParams) -> float:
    return sum((_predicted_us(co, params) / 1000.0 - co.observed_ms) ** 2
               for co in compiled)


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_section(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = f(x2)
    x = (lo + hi) / 2.0
    return x, f(x)


def _bounds_for(name: str) -> tuple[float, float]:
    if name == "i_m":
        return 10.0, 500.0
    return 0.0, 5000.0


def calibrate(observations: list[Observation], free: list[str],
              seed: MotorParams = MotorParams(),
              max_sweeps: int = 200,
              rel_tol: float = 1e-9) -> tuple[MotorParams, CalibrationReport]:
    """Fit the free parameter fields to observed totals by least squares.

    Coordinate descent with a golden-section line search per coordinate;
    deterministic (fields are visited in sorted order) and never worse
    than the seed.
    """
    if not observations:
        raise ValueError("need at least one observation")
    if not free:
        raise ValueError("no free fields")
    for name in free:
        if name not in TUNABLE_FIELDS:
            raise ValueError(f"unknown free field {name!r}")
    free = sorted(set(free))
    compiled = [_compile_observation(o, seed.formulation) for o in observations]

    params = seed
    initial = _residual(compiled, params)
    best = initial
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        before = best
        for name in free:
            lo, hi = _bounds_for(name)

            def f(x, _name=name):
                return _residual(compiled, params.with_values(**{_name: x}))

            x, fx = _golden_section(f, lo, hi, tol=1e-7 * (hi - lo))
            if fx < best:
                params = params.with_values(**{name: x})
                best = fx
        if before - best <= rel_tol * max(before, 1e-30):
            break

    predicted = tuple(_predicted_us(co, params) / 1000.0 for co in compiled)
    observed = tuple(co.observed_ms for co in compiled)
    report = CalibrationReport(initial, best, sweeps, predicted, observed)
    return params, report
