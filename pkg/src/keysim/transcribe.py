"""Text normalization and compilation into primitive-action sequences."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .geometry import (ActionVariant, KeyboardLayout, PrimitiveAction,
                       SUPPORTED_ALPHABET, resolve_symbol, think)


@dataclass(frozen=True)
class ActionSequence:
    layout_name: str
    actions: tuple[PrimitiveAction, ...]
    source_text: str

    @property
    def symbol_count(self) -> int:
        return sum(1 for a in self.actions if a.produced_symbol is not None)


def normalize_text(raw: str) -> str:
    """Lowercase, keep a-z/space/period/comma, collapse whitespace runs.

    Raises ValueError when nothing supported remains.
    """
    lowered = raw.lower()
    kept = "".join(
        " " if ch.isspace() else ch
        for ch in lowered
        if ch.isspace() or ch in SUPPORTED_ALPHABET
    )
    collapsed = re.sub(r" +", " ", kept).strip()
    if not collapsed:
        raise ValueError("no supported content")
    return collapsed


def compile_text(text: str, layout: KeyboardLayout, *,
                 commit_pause: bool = True) -> ActionSequence:
    """Compile normalized text into pointing actions interleaved with
    think steps.

    One think precedes every symbol (follow-up taps inside a multi-tap
    burst are mechanical).  When consecutive symbols land on the same
    multi-tap key, an extra think models the commit pause real multi-tap
    entry needs between them; disable with ``commit_pause=False``.
    """
    if not text:
        raise ValueError("no supported content")
    actions: list[PrimitiveAction] = []
    prev_key: str | None = None
    for symbol in text:
        pointing = resolve_symbol(symbol, layout)
        this_key = pointing[0].target
        if (commit_pause and prev_key is not None and this_key == prev_key
                and layout.key(this_key).is_multitap):
            actions.append(think())
        actions.append(think())
        actions.extend(pointing)
        prev_key = this_key
    return ActionSequence(layout.name, tuple(actions), text)


def sequence_text(seq: ActionSequence) -> str:
    """Concatenated produced symbols; equals the source text by construction."""
    return "".join(a.produced_symbol for a in seq.actions
                   if a.produced_symbol is not None)
