from __future__ import annotations

import pytest

from strfn import Alphabet, enumerate_strings, partial_spec, table_fn


@pytest.fixture
def ab():
    return Alphabet(("a", "b"))


@pytest.fixture
def ab3():
    return Alphabet(("a", "b", "|"))


@pytest.fixture
def bits():
    return Alphabet(("0", "1"))


@pytest.fixture
def bit_flip(bits):
    """Swap 0 and 1 in every position: injective but not idempotent."""
    flip = str.maketrans("01", "10")
    entries = {s: s.translate(flip) for s in enumerate_strings(bits, 5)}
    return table_fn(bits, 5, entries)


@pytest.fixture
def first_letter(ab):
    entries = {s: s[:1] for s in enumerate_strings(ab, 6)}
    return table_fn(ab, 6, entries)


@pytest.fixture
def last_letter(ab):
    entries = {s: s[-1:] for s in enumerate_strings(ab, 6)}
    return table_fn(ab, 6, entries)


@pytest.fixture
def first_letter_spec(ab):
    return partial_spec(
        ab,
        1,
        [
            "",
            {"a": "a", "b": "b"},
            {s: s[0] for s in ("aa", "ab", "ba", "bb")},
        ],
    )
