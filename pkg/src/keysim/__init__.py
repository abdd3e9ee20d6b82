"""keysim: soft-keyboard typing-time prediction and session analytics."""

from .geometry import (ActionVariant, KeyboardLayout, KeyDef, LayoutError,
                       LayoutKind, PointMM, PrimitiveAction, RectMM,
                       SUPPORTED_ALPHABET, ValidationReport, builtin_layout,
                       hit_test, key_distance, resolve_symbol, validate_layout)
from .layout_io import LayoutFormatError, load_layout, save_layout
from .motor import (ActionTimeBreakdown, Formulation, MotorParams,
                    action_time, fitts_mt, index_of_difficulty)
from .transcribe import ActionSequence, compile_text, normalize_text
from .simulate import (ComparisonRow, Timeline, TimelineStep, compare,
                       predict_text, simulate, trace_csv, write_trace)
from .analytics import (AnalyticsConfig, CalibrationReport, LearningCurvePoint,
                        Observation, PointerEvent, SessionFormatError,
                        SessionLog, SessionResult, aggregate_sessions,
                        calibrate, levenshtein, load_session_log,
                        save_session_log, session_wpm, synthesize_session_log,
                        transcribe_session)

__version__ = "0.1.0"

__all__ = [
    "ActionSequence", "ActionTimeBreakdown", "ActionVariant",
    "AnalyticsConfig", "CalibrationReport", "ComparisonRow", "Formulation",
    "KeyDef", "KeyboardLayout", "LayoutError", "LayoutFormatError",
    "LayoutKind", "LearningCurvePoint", "MotorParams", "Observation",
    "PointMM", "PointerEvent", "PrimitiveAction", "RectMM",
    "SUPPORTED_ALPHABET", "SessionFormatError", "SessionLog", "SessionResult",
    "Timeline", "TimelineStep", "ValidationReport", "action_time",
    "aggregate_sessions", "builtin_layout", "calibrate", "compare",
    "compile_text", "fitts_mt", "hit_test", "index_of_difficulty",
    "key_distance", "levenshtein", "load_layout", "load_session_log",
    "normalize_text", "predict_text", "resolve_symbol", "save_layout",
    "save_session_log", "session_wpm", "simulate", "synthesize_session_log",
    "trace_csv", "transcribe_session", "validate_layout", "write_trace",
]
