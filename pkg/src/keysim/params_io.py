"""Motor-parameter files: JSON with one field per MotorParams entry."""

from __future__ import annotations

import json
from dataclasses import fields

from .motor import Formulation, MotorParams


class ParamsFormatError(ValueError):
    """Raised when a parameters file does not match the schema."""


_FIELDS = {f.name for f in fields(MotorParams)}


def params_from_dict(data: dict) -> MotorParams:
    if not isinstance(data, dict):
        raise ParamsFormatError("parameters file must contain a JSON object")
    for name in data:
        if name not in _FIELDS:
            raise ParamsFormatError(f"unknown field {name!r} in parameters")
    kwargs = dict(data)
    if "formulation" in kwargs:
        try:
            kwargs["formulation"] = Formulation(kwargs["formulation"])
        except ValueError:
            raise ParamsFormatError(
                f"unknown formulation {kwargs['formulation']!r}")
    try:
        return MotorParams(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ParamsFormatError(str(exc)) from exc


def params_to_dict(params: MotorParams) -> dict:
    out = {}
    for f in fields(MotorParams):
        v = getattr(params, f.name)
        out[f.name] = v.value if isinstance(v, Formulation) else v
    return out


def load_params(path) -> MotorParams:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParamsFormatError(f"invalid JSON: {exc}") from exc
    return params_from_dict(data)


def save_params(params: MotorParams, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(params_to_dict(params), fh, indent=2)
        fh.write("\n")
