"""Movement-time model: modified Fitts' law plus per-action costs.

Times are carried internally as integer microseconds so that step totals
are exact sums of their parts; parameters are expressed in milliseconds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace
from enum import Enum

from .geometry import (ActionVariant, KeyboardLayout, LayoutKind,
                       PrimitiveAction, key_distance)


class Formulation(Enum):
    #: ID = log2(A/W + 0.5), negative values clamped to zero.
    WELFORD_HALF = "welford"
    #: ID = log2(A/W + 1), the Shannon form.
    SHANNON_ONE = "shannon"


def ms_to_us(ms: float) -> int:
    return int(round(ms * 1000.0))


@dataclass(frozen=True)
class MotorParams:
    """Timing constants of the model, all in ms (i_m in ms/bit).

    i_m's documented plausible range is 70-120 ms/bit; tap_cost and
    slide_extra are calibration seeds rather than measured values.
    """

    i_m: float = 100.0
    formulation: Formulation = Formulation.WELFORD_HALF
    intercept_a: float = 0.0
    tap_cost: float = 100.0
    slide_extra: float = 150.0
    think_qwerty: float = 500.0
    think_qwert: float = 500.0
    think_3x4: float = 200.0
    eye_prep: float = 0.0
    eye_exec: float = 0.0

    def __post_init__(self):
        for f in fields(self):
            if f.name == "formulation":
                continue
            v = getattr(self, f.name)
            if v < 0:
                raise ValueError(f"{f.name} must be >= 0, got {v}")
        if self.i_m <= 0:
            raise ValueError(f"i_m must be > 0, got {self.i_m}")

    def with_values(self, **kwargs) -> "MotorParams":
        return replace(self, **kwargs)

    def think_for(self, kind: LayoutKind) -> float:
        """Per-symbol think duration for a layout kind (ms).

        Custom layouts use the qwerty value.
        """
        if kind is LayoutKind.QWERT:
            return self.think_qwert
        if kind is LayoutKind.THREE_BY_FOUR:
            return self.think_3x4
        return self.think_qwerty


#: Names accepted as free parameters by calibration.
TUNABLE_FIELDS = ("i_m", "intercept_a", "tap_cost", "slide_extra",
                  "think_qwerty", "think_qwert", "think_3x4",
                  "eye_prep", "eye_exec")


@dataclass(frozen=True)
class ActionTimeBreakdown:
    """Per-action time split, in integer microseconds."""

    think_us: int = 0
    eye_us: int = 0
    movement_us: int = 0
    execution_us: int = 0

    @property
    def total_us(self) -> int:
        return self.think_us + self.eye_us + self.movement_us + self.execution_us

    @property
    def total_ms(self) -> float:
        return self.total_us / 1000.0


def index_of_difficulty(amplitude: float, width: float,
                        formulation: Formulation = Formulation.WELFORD_HALF) -> float:
    """Index of difficulty in bits for a movement of the given amplitude
    to a target of the given width (both mm)."""
    if width <= 0:
        raise ValueError("degenerate target: width must be > 0")
    if amplitude < 0:
        raise ValueError("amplitude must be >= 0")
    if formulation is Formulation.SHANNON_ONE:
        return math.log2(amplitude / width + 1.0)
    return max(0.0, math.log2(amplitude / width + 0.5))


def fitts_mt(amplitude: float, width: float, params: MotorParams) -> float:
    """Movement time in ms: intercept + i_m * ID."""
    return params.intercept_a + params.i_m * index_of_difficulty(
        amplitude, width, params.formulation)


def action_time(action: PrimitiveAction, from_key: str | None,
                layout: KeyboardLayout, params: MotorParams) -> ActionTimeBreakdown:
    """Time one primitive action starting from ``from_key``.

    Pointing actions move from the center of ``from_key`` to the target's
    center; W is the target's smaller dimension.  Slide-ups cost
    ``slide_extra`` on top of the tap.
    """
    if action.variant is ActionVariant.THINK:
        return ActionTimeBreakdown(think_us=ms_to_us(params.think_for(layout.kind)))

    if action.target is None:
        raise ValueError("pointing action has no target")
    if from_key is None:
        raise ValueError("pointing action needs a starting key")
    target = layout.key(action.target)
    amplitude = key_distance(layout, from_key, action.target)
    width = min(target.bounds.width, target.bounds.height)
    movement = ms_to_us(fitts_mt(amplitude, width, params))
    execution = ms_to_us(params.tap_cost)
    if action.variant is ActionVariant.POINT_SLIDE_UP:
        execution += ms_to_us(params.slide_extra)
    eye = ms_to_us(params.eye_prep) + ms_to_us(params.eye_exec)
    return ActionTimeBreakdown(eye_us=eye, movement_us=movement,
                               execution_us=execution)
