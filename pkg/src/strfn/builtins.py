"""Closed-form example functions: the toolkit's standard fixtures.

Each builtin is a small frozen definition object (picklable, hashable)
wrapped in a :class:`~strfn.core.BoundedFn` by its factory.  They cover
the classic behaviours the checkers are designed to separate: letter
removal and its non-standard variant, first-occurrence filtering,
separator insertion, sorting, plain length, and length-of compositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import STRING, TOKEN, Alphabet, BoundedFn, Token, Value, table_fn
from .errors import MalformedSpecError, PreconditionError
from .lengthbased import AlphaFn, PsiTable, compose_length_based


@dataclass(frozen=True)
class IdentityDef:
    codomain: str = STRING

    def apply(self, s: str) -> str:
        return s


@dataclass(frozen=True)
class SortDef:
    """Stable sort of the letters by the given order."""

    order: tuple[str, ...]
    codomain: str = STRING

    def apply(self, s: str) -> str:
        return "".join(sorted(s, key=self.order.index))


@dataclass(frozen=True)
class LetterRemoveDef:
    """Delete every occurrence of one letter; a monoid endomorphism."""

    letter: str
    codomain: str = STRING

    def apply(self, s: str) -> str:
        return s.replace(self.letter, "")


@dataclass(frozen=True)
class LetterRemoveGDef:
    """Like LetterRemoveDef, except powers of the letter collapse to it.

    Sends every string in {a}* (the empty string included) to "a", and
    anything else to its letter-removed form.  Associative but not
    standard: the value at the empty string is "a".
    """

    letter: str
    codomain: str = STRING

    def apply(self, s: str) -> str:
        if set(s) <= {self.letter}:
            return self.letter
        return s.replace(self.letter, "")


@dataclass(frozen=True)
class OfoDef:
    """Keep only the first occurrence of each letter, in order."""

    codomain: str = STRING

    def apply(self, s: str) -> str:
        return "".join(dict.fromkeys(s))


@dataclass(frozen=True)
class SeparatorInsertDef:
    """Insert the bar letter between adjacent letters when neither is a bar."""

    bar: str
    codomain: str = STRING

    def apply(self, s: str) -> str:
        if not s:
            return s
        out = [s[0]]
        for prev, cur in zip(s, s[1:]):
            if prev != self.bar and cur != self.bar:
                out.append(self.bar)
            out.append(cur)
        return "".join(out)


@dataclass(frozen=True)
class LengthDef:
    codomain: str = TOKEN

    def apply(self, s: str) -> Token:
        return Token(len(s))


@dataclass(frozen=True)
class LengthOfDef:
    """Length of another definition's output: |inner(x)|."""

    inner: object
    codomain: str = TOKEN

    def apply(self, s: str) -> Token:
        return Token(len(self.inner.apply(s)))


@dataclass(frozen=True)
class ConstantDef:
    value: Value

    @property
    def codomain(self) -> str:
        return STRING if isinstance(self.value, str) else TOKEN

    def apply(self, s: str) -> Value:
        return self.value


def identity_fn(alphabet: Alphabet, bound: int) -> BoundedFn:
    return BoundedFn(alphabet, bound, IdentityDef())


def sort_fn(
    alphabet: Alphabet, bound: int, order: tuple[str, ...] | None = None
) -> BoundedFn:
    """Sort letters by alphabet order, or by an explicit reordering of it."""
    if order is None:
        order = alphabet.letters
    if sorted(order) != sorted(alphabet.letters):
        raise PreconditionError(
            f"sort order {order!r} is not a permutation of the alphabet"
        )
    return BoundedFn(alphabet, bound, SortDef(tuple(order)))


def letter_remove_fn(alphabet: Alphabet, bound: int, letter: str) -> BoundedFn:
    alphabet.index(letter)
    return BoundedFn(alphabet, bound, LetterRemoveDef(letter))


def letter_remove_g_fn(alphabet: Alphabet, bound: int, letter: str) -> BoundedFn:
    alphabet.index(letter)
    return BoundedFn(alphabet, bound, LetterRemoveGDef(letter))


def ofo_fn(alphabet: Alphabet, bound: int) -> BoundedFn:
    return BoundedFn(alphabet, bound, OfoDef())


def separator_insert_fn(alphabet: Alphabet, bound: int, bar: str) -> BoundedFn:
    alphabet.index(bar)
    return BoundedFn(alphabet, bound, SeparatorInsertDef(bar))


def length_fn(alphabet: Alphabet, bound: int) -> BoundedFn:
    return BoundedFn(alphabet, bound, LengthDef())


def length_of_fn(inner: BoundedFn) -> BoundedFn:
    """Token-valued |inner(x)|; requires a string-valued inner function."""
    if not inner.string_valued:
        raise PreconditionError("length_of requires a string-valued inner function")
    return BoundedFn(inner.alphabet, inner.bound, LengthOfDef(inner.definition))


def constant_fn(alphabet: Alphabet, bound: int, value: Value) -> BoundedFn:
    if isinstance(value, str):
        alphabet.validate(value)
    return BoundedFn(alphabet, bound, ConstantDef(value))


def length_based_fn(
    alphabet: Alphabet, bound: int, alpha: AlphaFn, psi: PsiTable
) -> BoundedFn:
    return compose_length_based(alphabet, bound, alpha, psi)


def build_builtin(
    name: str, alphabet: Alphabet, bound: int, params: Mapping[str, object] | None = None
) -> BoundedFn:
    """Construct a builtin by its registry name, as used in spec files."""
    params = dict(params or {})
    try:
        if name == "identity":
            return identity_fn(alphabet, bound)
        if name == "sort":
            order = params.pop("order", None)
            return sort_fn(
                alphabet, bound, tuple(order) if order is not None else None
            )
        if name == "letter_remove":
            return letter_remove_fn(alphabet, bound, params.pop("letter"))
        if name == "letter_remove_g":
            return letter_remove_g_fn(alphabet, bound, params.pop("letter"))
        if name == "ofo":
            return ofo_fn(alphabet, bound)
        if name == "separator_insert":
            return separator_insert_fn(alphabet, bound, params.pop("bar"))
        if name == "length":
            return length_fn(alphabet, bound)
        if name == "length_of":
            return length_of_fn(params.pop("inner"))
        if name == "length_based":
            return length_based_fn(
                alphabet, bound, params.pop("alpha"), params.pop("psi")
            )
        if name == "constant":
            return constant_fn(alphabet, bound, params.pop("value"))
        if name == "table":
            return table_fn(
                alphabet, bound, params.pop("entries"),
                params.pop("codomain", STRING),
            )
    except KeyError as exc:
        raise MalformedSpecError(
            f"builtin {name!r} is missing parameter {exc.args[0]!r}"
        ) from None
    raise MalformedSpecError(f"unknown builtin {name!r}")
