"""Alphabets, bounded string domains, and function carriers.

Strings are plain Python ``str`` values and the empty string is the unit
of concatenation.  An :class:`Alphabet` fixes the letter set together
with the letter order used for sorting, lexicographic comparison, and
length-lex enumeration.  Variadic string functions are carried by
:class:`BoundedFn`: a definition (closed form or lookup table) evaluated
on every string up to a length bound.

All checkers in this package quantify over the bounded domain
``X^0 ∪ ... ∪ X^L`` in *length-lex* order: shorter strings first, ties
broken letter by letter in alphabet order.  Everything downstream leans
on :func:`enumerate_strings` producing exactly that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Mapping, Union

from .errors import (
    AlphabetError,
    MissingEntryError,
    OutOfDomainError,
)

STRING = "string"
TOKEN = "token"


@dataclass(frozen=True)
class Token:
    """Opaque codomain value, compared by equality only.

    Tokens let a table or builtin map strings into an abstract value set
    (numbers, labels) that is disjoint from every string codomain.
    """

    payload: int | str

    def __repr__(self) -> str:
        return f"Token({self.payload!r})"


Value = Union[str, Token]


@dataclass(frozen=True)
class Alphabet:
    """A finite, totally ordered set of single-character letters."""

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise AlphabetError("alphabet must contain at least one letter")
        for ch in self.letters:
            if not isinstance(ch, str) or len(ch) != 1:
                raise AlphabetError(f"letters must be single characters, got {ch!r}")
        if len(set(self.letters)) != len(self.letters):
            raise AlphabetError("alphabet letters must be distinct")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {ch: i for i, ch in enumerate(self.letters)}

    def __contains__(self, ch: str) -> bool:
        return ch in self._index

    def __len__(self) -> int:
        return len(self.letters)

    def index(self, ch: str) -> int:
        try:
            return self._index[ch]
        except KeyError:
            raise AlphabetError(f"letter {ch!r} is not in alphabet {self.letters}")

    def validate(self, s: str) -> str:
        """Return ``s`` unchanged, raising if it uses foreign letters."""
        for ch in s:
            if ch not in self._index:
                raise AlphabetError(
                    f"string {s!r} uses letter {ch!r} outside alphabet {self.letters}"
                )
        return s

    def sort_key(self, s: str) -> tuple[int, ...]:
        """Per-letter indices; usable as a lexicographic key."""
        idx = self._index
        return tuple(idx[ch] for ch in s)

    def length_lex_key(self, s: str) -> tuple[int, tuple[int, ...]]:
        """Sort key realizing the length-lex order on strings."""
        return (len(s), self.sort_key(s))


def concat(x: str, y: str, alphabet: Alphabet | None = None) -> str:
    """Concatenate two strings, optionally validating both over ``alphabet``."""
    if alphabet is not None:
        alphabet.validate(x)
        alphabet.validate(y)
    return x + y


def power(x: str, n: int) -> str:
    """The n-th concatenation power of ``x``; ``power(x, 0)`` is the empty string."""
    if n < 0:
        raise ValueError(f"power requires a nonnegative exponent, got {n}")
    return x * n


def enumerate_strings(
    alphabet: Alphabet, max_len: int, min_len: int = 0
) -> Iterator[str]:
    """Yield every string of length min_len..max_len in length-lex order."""
    if max_len < 0:
        raise ValueError(f"max_len must be nonnegative, got {max_len}")
    letters = alphabet.letters
    for k in range(min_len, max_len + 1):
        for combo in itertools.product(letters, repeat=k):
            yield "".join(combo)


def count_strings(alphabet: Alphabet, max_len: int) -> int:
    """Number of strings in the bounded domain ``X^0 ∪ ... ∪ X^max_len``."""
    n = len(alphabet)
    return sum(n**k for k in range(max_len + 1))


@dataclass(frozen=True)
class TableDef:
    """Lookup-table definition, total on the carrier's bounded domain."""

    codomain: str
    entries: Mapping[str, Value]

    def apply(self, s: str) -> Value:
        try:
            return self.entries[s]
        except KeyError:
            raise MissingEntryError(f"table has no entry for {s!r}")


@dataclass(frozen=True)
class BoundedFn:
    """A variadic string function evaluated on strings up to ``bound``.

    ``definition`` is any object with a ``codomain`` attribute
    ("string" or "token") and an ``apply(s) -> Value`` method; lookup
    tables and the closed-form builtins both satisfy this.
    """

    alphabet: Alphabet
    bound: int
    definition: object

    def __post_init__(self) -> None:
        if self.bound < 0:
            raise ValueError(f"bound must be nonnegative, got {self.bound}")

    @property
    def codomain(self) -> str:
        return self.definition.codomain

    @property
    def string_valued(self) -> bool:
        return self.codomain == STRING

    def eval(self, s: str) -> Value:
        if len(s) > self.bound:
            raise OutOfDomainError(
                f"string of length {len(s)} exceeds evaluation bound {self.bound}"
            )
        return self.definition.apply(s)

    def __call__(self, s: str) -> Value:
        return self.eval(s)

    def value_map(self, max_len: int | None = None) -> dict[str, Value]:
        """Evaluate on the whole bounded domain; keys in length-lex order."""
        limit = self.bound if max_len is None else max_len
        if limit > self.bound:
            raise OutOfDomainError(
                f"requested map up to length {limit} but bound is {self.bound}"
            )
        return {s: self.definition.apply(s) for s in enumerate_strings(self.alphabet, limit)}


def table_fn(
    alphabet: Alphabet,
    bound: int,
    source: Callable[[str], Value] | Mapping[str, Value],
    codomain: str = STRING,
) -> BoundedFn:
    """Materialize a total lookup table over the bounded domain.

    ``source`` is either a callable evaluated on every string up to
    ``bound`` or a mapping that must already cover all of them; string
    outputs are validated against the alphabet.
    """
    if codomain not in (STRING, TOKEN):
        raise ValueError(f"codomain must be 'string' or 'token', got {codomain!r}")
    entries: dict[str, Value] = {}
    getter = source if callable(source) else source.__getitem__
    for s in enumerate_strings(alphabet, bound):
        try:
            v = getter(s)
        except KeyError:
            raise MissingEntryError(f"table source has no entry for {s!r}")
        if codomain == STRING:
            if not isinstance(v, str):
                raise TypeError(f"string-valued table produced {v!r} for {s!r}")
            alphabet.validate(v)
        elif not isinstance(v, Token):
            raise TypeError(f"token-valued table produced {v!r} for {s!r}")
        entries[s] = v
    return BoundedFn(alphabet, bound, TableDef(codomain, entries))
