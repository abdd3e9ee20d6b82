"""Timed simulation of action sequences and cross-layout comparison."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .geometry import ActionVariant, KeyboardLayout, PrimitiveAction
from .motor import ActionTimeBreakdown, MotorParams, action_time
from .transcribe import ActionSequence, compile_text, normalize_text


@dataclass(frozen=True)
class TimelineStep:
    index: int
    action: PrimitiveAction
    from_key: str | None
    breakdown: ActionTimeBreakdown
    start_us: int

    @property
    def end_us(self) -> int:
        return self.start_us + self.breakdown.total_us


@dataclass(frozen=True)
class Timeline:
    layout_name: str
    steps: tuple[TimelineStep, ...]
    symbol_count: int

    @property
    def total_us(self) -> int:
        return sum(s.breakdown.total_us for s in self.steps)

    @property
    def total_ms(self) -> float:
        return self.total_us / 1000.0

    @property
    def total_s(self) -> float:
        return self.total_us / 1_000_000.0

    @property
    def predicted_wpm(self) -> float:
        """Characters per second * 60 / 5 under the 5-chars-per-word rule."""
        if self.total_us == 0:
            return 0.0
        return self.symbol_count / self.total_s * 60.0 / 5.0


def simulate(seq: ActionSequence, layout: KeyboardLayout,
             params: MotorParams) -> Timeline:
    """Time every action of a compiled sequence.

    The thumb starts on the layout's home key; each pointing action moves
    it to its target, think steps leave it in place.
    """
    if seq.layout_name != layout.name:
        raise ValueError(
            f"sequence compiled for {seq.layout_name!r}, not {layout.name!r}")
    steps: list[TimelineStep] = []
    current = layout.home_key
    t = 0
    for i, action in enumerate(seq.actions):
        if action.variant is ActionVariant.THINK:
            bd = action_time(action, None, layout, params)
            from_key = None
        else:
            bd = action_time(action, current, layout, params)
            from_key = current
            current = action.target
        steps.append(TimelineStep(i, action, from_key, bd, t))
        t += bd.total_us
    return Timeline(layout.name, tuple(steps), seq.symbol_count)


def predict_text(text: str, layout: KeyboardLayout,
                 params: MotorParams) -> Timeline:
    """Normalize, compile and simulate raw text on a layout."""
    return simulate(compile_text(normalize_text(text), layout), layout, params)


@dataclass(frozen=True)
class ComparisonRow:
    layout_name: str
    total_us: int
    predicted_wpm: float

    @property
    def total_s(self) -> float:
        return self.total_us / 1_000_000.0


def compare(text: str, layouts: list[KeyboardLayout],
            params: MotorParams) -> list[ComparisonRow]:
    """Rank layouts by predicted total time, ascending; ties by name."""
    if not layouts:
        raise ValueError("need at least one layout")
    rows = []
    for layout in layouts:
        tl = predict_text(text, layout, params)
        rows.append(ComparisonRow(layout.name, tl.total_us, tl.predicted_wpm))
    return sorted(rows, key=lambda r: (r.total_us, r.layout_name))


TRACE_COLUMNS = ["index", "action", "from_key", "target", "think_ms",
                 "eye_ms", "movement_ms", "execution_ms", "total_ms",
                 "start_ms", "end_ms"]


def _ms(us: int) -> str:
    return f"{us / 1000.0:.3f}"


def trace_rows(timeline: Timeline) -> list[list[str]]:
    rows = []
    for s in timeline.steps:
        bd = s.breakdown
        rows.append([
            str(s.index),
            s.action.variant.value,
            s.from_key or "",
            s.action.target or "",
            _ms(bd.think_us), _ms(bd.eye_us), _ms(bd.movement_us),
            _ms(bd.execution_us), _ms(bd.total_us),
            _ms(s.start_us), _ms(s.end_us),
        ])
    return rows


def write_trace(timeline: Timeline, fh) -> None:
    """Write the per-step trace as CSV (header row included)."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(TRACE_COLUMNS)
    writer.writerows(trace_rows(timeline))


def trace_csv(timeline: Timeline) -> str:
    buf = io.StringIO()
    write_trace(timeline, buf)
    return buf.getvalue()
