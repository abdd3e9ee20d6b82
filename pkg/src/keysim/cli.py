"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 input/format error,
3 layout-validation failure.
"""

from __future__ import annotations

import argparse
import csv
import sys

from .analytics import (AnalyticsConfig, Observation, SessionFormatError,
                        aggregate_sessions, calibrate, load_session_log,
                        transcribe_session, write_learning_curve_csv)
from .geometry import LayoutError, LayoutKind, builtin_layout, validate_layout
from .layout_io import LayoutFormatError, load_layout, save_layout
from .motor import Formulation, MotorParams
from .params_io import ParamsFormatError, load_params, save_params
from .simulate import compare, predict_text, write_trace

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_VALIDATION = 3

BUILTIN_NAMES = {"qwert": LayoutKind.QWERT,
                 "qwerty": LayoutKind.QWERTY,
                 "3x4": LayoutKind.THREE_BY_FOUR}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load_layout_arg(name: str):
    if name.lower() in BUILTIN_NAMES:
        return builtin_layout(BUILTIN_NAMES[name.lower()])
    return load_layout(name)


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--params", help="JSON parameters file")
    p.add_argument("--im", type=float, dest="i_m")
    p.add_argument("--tap-cost", type=float)
    p.add_argument("--slide-extra", type=float)
    p.add_argument("--think-qwert", type=float)
    p.add_argument("--think-qwerty", type=float)
    p.add_argument("--think-3x4", type=float)
    p.add_argument("--formulation", choices=["welford", "shannon"])


def _params_from_args(args) -> MotorParams:
    params = load_params(args.params) if args.params else MotorParams()
    overrides = {}
    for flag, field in [("i_m", "i_m"), ("tap_cost", "tap_cost"),
                        ("slide_extra", "slide_extra"),
                        ("think_qwert", "think_qwert"),
                        ("think_qwerty", "think_qwerty"),
                        ("think_3x4", "think_3x4")]:
        v = getattr(args, flag, None)
        if v is not None:
            overrides[field] = v
    if getattr(args, "formulation", None):
        overrides["formulation"] = Formulation(args.formulation)
    return params.with_values(**overrides) if overrides else params


def _read_text(args) -> str:
    if args.text is not None:
        return args.text
    with open(args.text_file, encoding="utf-8") as fh:
        return fh.read()


def _add_text_args(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--text")
    grp.add_argument("--text-file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="keysim",
                     description="Soft-keyboard typing-time prediction")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("predict", help="predict entry time for a text")
    p.add_argument("--layout", required=True,
                   help="builtin name (qwert, qwerty, 3x4) or layout file")
    _add_text_args(p)
    _add_param_flags(p)
    p.add_argument("--trace", help="write per-step CSV trace to this file")
    p.add_argument("--format", choices=["text", "csv"], default="text")

    p = sub.add_parser("compare", help="rank layouts by predicted time")
    p.add_argument("--layouts", required=True,
                   help="comma-separated builtin names or layout files")
    _add_text_args(p)
    _add_param_flags(p)
    p.add_argument("--format", choices=["text", "csv"], default="text")

    p = sub.add_parser("layout", help="layout tooling")
    lsub = p.add_subparsers(dest="layout_command", required=True)
    q = lsub.add_parser("show", help="print key table")
    q.add_argument("layout")
    q = lsub.add_parser("validate", help="validate a layout file")
    q.add_argument("layout")
    q = lsub.add_parser("export", help="write a builtin layout to JSON")
    q.add_argument("kind", choices=sorted(BUILTIN_NAMES))
    q.add_argument("-o", "--output", required=True)

    p = sub.add_parser("analyze", help="score session logs")
    p.add_argument("logs", nargs="+", help="session-log JSON files")
    p.add_argument("--layout-file", help="layout file for non-builtin logs")
    p.add_argument("--curve-csv", help="write learning-curve CSV here")
    p.add_argument("--slide-threshold", type=float, default=4.0)
    p.add_argument("--multitap-timeout", type=float, default=1000.0)

    p = sub.add_parser("calibrate", help="fit parameters to observed totals")
    p.add_argument("--observations", required=True,
                   help="CSV: layout,text_file,observed_seconds")
    p.add_argument("--free", required=True,
                   help="comma-separated MotorParams field names")
    p.add_argument("--out", required=True, help="fitted parameters JSON")
    _add_param_flags(p)

    return parser


def _cmd_predict(args, out) -> int:
    layout = _load_layout_arg(args.layout)
    params = _params_from_args(args)
    timeline = predict_text(_read_text(args), layout, params)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            write_trace(timeline, fh)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["layout", "symbols", "total_s", "wpm"])
        w.writerow([timeline.layout_name, timeline.symbol_count,
                    f"{timeline.total_s:.3f}", f"{timeline.predicted_wpm:.3f}"])
    else:
        out.write(f"layout:  {timeline.layout_name}\n")
        out.write(f"symbols: {timeline.symbol_count}\n")
        out.write(f"total_s: {timeline.total_s:.3f}\n")
        out.write(f"wpm:     {timeline.predicted_wpm:.3f}\n")
    return EXIT_OK


def _cmd_compare(args, out) -> int:
    layouts = [_load_layout_arg(n) for n in args.layouts.split(",") if n]
    params = _params_from_args(args)
    rows = compare(_read_text(args), layouts, params)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["rank", "layout", "total_s", "wpm"])
        for i, r in enumerate(rows, 1):
            w.writerow([i, r.layout_name, f"{r.total_s:.3f}",
                        f"{r.predicted_wpm:.3f}"])
    else:
        out.write(f"{'rank':<5}{'layout':<12}{'total_s':>10}{'wpm':>10}\n")
        for i, r in enumerate(rows, 1):
            out.write(f"{i:<5}{r.layout_name:<12}{r.total_s:>10.3f}"
                      f"{r.predicted_wpm:>10.3f}\n")
    return EXIT_OK


def _cmd_layout(args, out) -> int:
    if args.layout_command == "export":
        save_layout(builtin_layout(BUILTIN_NAMES[args.kind]), args.output)
        out.write(f"wrote {args.output}\n")
        return EXIT_OK
    layout = _load_layout_arg(args.layout)
    if args.layout_command == "show":
        out.write(f"{layout.name} ({layout.kind.value}) "
                  f"{layout.screen.width:.3f}x{layout.screen.height:.3f} mm, "
                  f"home={layout.home_key}\n")
        for k in layout.keys:
            bindings = []
            if k.tap_symbol is not None:
                bindings.append(f"tap={k.tap_symbol!r}")
            if k.slide_symbol is not None:
                bindings.append(f"slide={k.slide_symbol!r}")
            if k.multitap_symbols:
                bindings.append("multitap=" + "".join(k.multitap_symbols))
            out.write(f"  {k.id:<8} ({k.bounds.origin.x:7.3f},"
                      f"{k.bounds.origin.y:7.3f}) "
                      f"{k.bounds.width:.1f}x{k.bounds.height:.1f}  "
                      + " ".join(bindings) + "\n")
        return EXIT_OK
    # validate
    report = validate_layout(layout)
    for issue in report.issues:
        where = f" [{issue.key_id}]" if issue.key_id else ""
        out.write(f"{issue.severity}: {issue.message}{where}\n")
    if report.ok:
        out.write("ok\n")
        return EXIT_OK
    return EXIT_VALIDATION


def _cmd_analyze(args, out) -> int:
    config = AnalyticsConfig(slide_threshold_mm=args.slide_threshold,
                             multitap_timeout_ms=args.multitap_timeout)
    results = []
    for path in args.logs:
        log = load_session_log(path)
        if log.layout_name in BUILTIN_NAMES:
            layout = builtin_layout(BUILTIN_NAMES[log.layout_name])
        elif args.layout_file:
            layout = load_layout(args.layout_file)
        else:
            raise LayoutFormatError(
                f"log {path} uses non-builtin layout {log.layout_name!r}; "
                "pass --layout-file")
        res = transcribe_session(log, layout, config)
        results.append((log, res))
        out.write(f"{path}: layout={log.layout_name} "
                  f"session={log.session_index} wpm={res.wpm:.3f} "
                  f"errors={res.error_distance} "
                  f"transcribed={res.transcribed!r}\n")
    if args.curve_csv:
        points = aggregate_sessions(results)
        with open(args.curve_csv, "w", encoding="utf-8") as fh:
            write_learning_curve_csv(points, fh)
        out.write(f"wrote {args.curve_csv}\n")
    return EXIT_OK


def _cmd_calibrate(args, out) -> int:
    seed = _params_from_args(args)
    observations = []
    with open(args.observations, encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = {"layout", "text_file", "observed_seconds"}
        if reader.fieldnames is None or not required <= set(reader.fieldnames):
            raise ParamsFormatError(
                "observations CSV needs columns layout,text_file,observed_seconds")
        for row in reader:
            with open(row["text_file"], encoding="utf-8") as tf:
                text = tf.read()
            observations.append(Observation(
                text=text,
                layout=_load_layout_arg(row["layout"]),
                observed_ms=float(row["observed_seconds"]) * 1000.0))
    free = [f for f in args.free.split(",") if f]
    fitted, report = calibrate(observations, free, seed)
    save_params(fitted, args.out)
    out.write(f"initial_residual: {report.initial_residual:.6f}\n")
    out.write(f"final_residual:   {report.final_residual:.6f}\n")
    out.write(f"sweeps:           {report.sweeps}\n")
    for obs, pred in zip(observations, report.predicted_ms):
        out.write(f"{obs.layout.name}: predicted {pred / 1000.0:.3f} s, "
                  f"observed {obs.observed_ms / 1000.0:.3f} s\n")
    out.write(f"wrote {args.out}\n")
    return EXIT_OK


_COMMANDS = {
    "predict": _cmd_predict,
    "compare": _cmd_compare,
    "layout": _cmd_layout,
    "analyze": _cmd_analyze,
    "calibrate": _cmd_calibrate,
}


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        parser.print_usage(err)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except (LayoutFormatError, SessionFormatError, ParamsFormatError,
            LayoutError, OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
