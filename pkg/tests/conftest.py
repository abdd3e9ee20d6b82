import random

import pytest

from keysim import LayoutKind, builtin_layout

SUPPORTED_CHARS = "abcdefghijklmnopqrstuvwxyz .,"


@pytest.fixture(scope="session")
def qwert():
    return builtin_layout(LayoutKind.QWERT)


@pytest.fixture(scope="session")
def qwerty():
    return builtin_layout(LayoutKind.QWERTY)


@pytest.fixture(scope="session")
def three_by_four():
    return builtin_layout(LayoutKind.THREE_BY_FOUR)


@pytest.fixture(scope="session")
def all_builtins(qwert, qwerty, three_by_four):
    return [qwert, qwerty, three_by_four]


def random_supported_strings(n, max_len, seed):
    """Deterministic normalized strings over the supported alphabet."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        length = rng.randint(1, max_len)
        s = "".join(rng.choice(SUPPORTED_CHARS) for _ in range(length))
        s = " ".join(s.split())
        if s:
            out.append(s)
    return out
