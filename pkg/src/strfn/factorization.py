"""Quasi-inverses and the inner/outer factorization F = f . H.

Every preassociative function splits as an injective relabeling f
applied to an associative string-valued core H = g . F, where g picks
one preimage for each value of F.  On a bounded domain the choice of g
can be made canonical: the length-lex smallest preimage, which is
automatically length-optimized.  This module builds that g, the
factorization, and the two condition bundles that govern when low-arity
data determines the whole function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .checkers import (
    FAILS,
    CheckReport,
    Witness,
    _finish,
    _require_bound,
    check_associative_full,
    check_m_determined_range,
    check_preassociative,
    check_standard,
)
from .core import Alphabet, BoundedFn, Value, enumerate_strings, table_fn
from .errors import (
    MalformedSpecError,
    PreconditionError,
    QuasiInverseError,
)


def kernel_classes(fn: BoundedFn, level: int) -> list[list[str]]:
    """Partition X^<=level by equal value, classes led by their smallest member."""
    _require_bound(fn, level)
    classes: dict[Value, list[str]] = {}
    for s in enumerate_strings(fn.alphabet, level):
        classes.setdefault(fn.definition.apply(s), []).append(s)
    return list(classes.values())


@dataclass(frozen=True)
class QuasiInverse:
    """One chosen preimage per attained value: the length-lex smallest.

    The choice is length-optimized — |g(y)| is the least length at which
    y is attained on the bounded domain (an over-estimate only if the
    true minimal preimage lies beyond the bound).
    """

    entries: tuple[tuple[Value, str], ...]
    bound: int

    def apply(self, y: Value) -> str:
        for value, preimage in self.entries:
            if value == y:
                return preimage
        raise QuasiInverseError(f"value {y!r} is not attained on the bounded domain")

    def __contains__(self, y: Value) -> bool:
        return any(value == y for value, _ in self.entries)


def quasi_inverse(fn: BoundedFn, level: int) -> QuasiInverse:
    _require_bound(fn, level)
    entries: dict[Value, str] = {}
    for s in enumerate_strings(fn.alphabet, level):
        v = fn.definition.apply(s)
        if v not in entries:
            entries[v] = s
    return QuasiInverse(tuple(entries.items()), level)


@dataclass
class Factorization:
    """F = f . H with H = g . F associative exactly when F is preassociative."""

    source: BoundedFn
    g: QuasiInverse
    h: BoundedFn
    f: tuple[tuple[str, Value], ...]
    checks: dict[str, CheckReport]

    @property
    def clean(self) -> bool:
        """True when every attached verdict is non-failing."""
        return all(r.ok for r in self.checks.values())

    def outer(self, s: str) -> Value:
        for key, v in self.f:
            if key == s:
                return v
        raise QuasiInverseError(f"{s!r} is not in the range of the inner function")


def factorize(fn: BoundedFn, level: int) -> Factorization:
    """Split fn into an associative core and an injective relabeling.

    Never raises on a non-preassociative input — the attached checks
    record that the core fails associativity instead, which is exactly
    the diagnostic the equivalence predicts.
    """
    _require_bound(fn, level)
    g = quasi_inverse(fn, level)
    vals = {s: fn.definition.apply(s) for s in enumerate_strings(fn.alphabet, level)}
    h_entries = {s: g.apply(v) for s, v in vals.items()}
    inner = table_fn(fn.alphabet, level, h_entries)

    f_entries: dict[str, Value] = {}
    for s in enumerate_strings(fn.alphabet, level):
        hs = h_entries[s]
        if hs not in f_entries:
            f_entries[hs] = vals[hs]

    for s, v in vals.items():
        hs = h_entries[s]
        assert f_entries[hs] == v, "outer . inner must reproduce the source"
        assert h_entries[hs] == hs, "the inner core must be idempotent"

    checks = {
        "source-preassociative": check_preassociative(fn, level),
        "inner-associative": check_associative_full(inner, level),
        "source-standard": check_standard(fn, level),
        "inner-standard": check_standard(inner, level),
    }
    if checks["source-standard"].ok:
        assert h_entries[""] == "", "standardness must transfer to the core"
    return Factorization(fn, g, inner, tuple(f_entries.items()), checks)


def check_quasi_inverse_conditions(
    fn: BoundedFn, m: int, level: int
) -> dict[str, CheckReport]:
    """The four-part test for recovering F from arities <= m + 1.

    range: every value of the (m+1)-ary part already appears at arity <= m;
    a:     appending H(empty) to a letter changes nothing;
    b:     folding the first two letters through H commutes with folding
           the last two, on strings of at most m + 2 letters;
    c:     F(yz) = F(H(y)z) whenever |yz| <= level.
    H is g . F for the canonical quasi-inverse g.  Instances whose folded
    argument leaves the bounded domain are counted as skipped.
    """
    _require_bound(fn, level)
    if m + 1 > level:
        raise PreconditionError(
            f"need level >= m + 1 = {m + 1} to read the (m+1)-ary part, got {level}"
        )
    vals = {s: fn.definition.apply(s) for s in enumerate_strings(fn.alphabet, level)}
    g = quasi_inverse(fn, level)

    def h(s: str) -> str:
        return g.apply(vals[s])

    reports: dict[str, CheckReport] = {}

    low = {vals[s] for s in enumerate_strings(fn.alphabet, m)}
    witness = None
    checked = 0
    for x in enumerate_strings(fn.alphabet, m + 1, min_len=m + 1):
        checked += 1
        if vals[x] not in low:
            witness = Witness((("x", x),), vals[x], None)
            break
    reports["range"] = _finish(
        witness, checked, 0,
        detail="value not attained at arity <= m" if witness else None,
    )

    witness = None
    checked = 0
    pad = h("")
    for x in fn.alphabet.letters:
        arg = x + pad
        if len(arg) > level:
            continue
        checked += 1
        if vals[x] != vals[arg]:
            witness = Witness((("x", x),), vals[x], vals[arg])
            break
    reports["a"] = _finish(witness, checked, 0)

    witness = None
    checked = skipped = 0
    for y in enumerate_strings(fn.alphabet, m):
        for x in fn.alphabet.letters:
            for z in fn.alphabet.letters:
                left = h(x + y) + z
                right = x + h(y + z)
                if len(left) > level or len(right) > level:
                    skipped += 1
                    continue
                checked += 1
                if vals[left] != vals[right]:
                    witness = Witness(
                        (("x", x), ("y", y), ("z", z)), vals[left], vals[right]
                    )
                    break
            if witness:
                break
        if witness:
            break
    reports["b"] = _finish(witness, checked, skipped)

    witness = None
    checked = 0
    for w in enumerate_strings(fn.alphabet, level):
        for i in range(len(w) + 1):
            y, z = w[:i], w[i:]
            checked += 1
            if vals[w] != vals[h(y) + z]:
                witness = Witness((("y", y), ("z", z)), vals[w], vals[h(y) + z])
                break
        if witness:
            break
    reports["c"] = _finish(witness, checked, 0)
    return reports


def check_bounded_retraction(
    fn: BoundedFn, m: int, level: int
) -> dict[str, CheckReport]:
    """m-determined range <=> an m-bounded H with F = F . H.

    Reports: "range" always; when it holds, also "h-bounded" (|H(x)| <= m),
    "retraction" (F = F . H pointwise), and "partition" (on each block
    H^{-1}(X^k) the function coincides with its k-ary part after H).
    """
    _require_bound(fn, level)
    reports = {"range": check_m_determined_range(fn, m, level)}
    if not reports["range"].ok:
        return reports

    vals = {s: fn.definition.apply(s) for s in enumerate_strings(fn.alphabet, level)}
    g = quasi_inverse(fn, level)
    h_map = {s: g.apply(v) for s, v in vals.items()}

    witness = None
    checked = 0
    for s, hs in h_map.items():
        checked += 1
        if len(hs) > m:
            witness = Witness((("x", s),), hs, None)
            break
    reports["h-bounded"] = _finish(
        witness, checked, 0,
        detail=f"|H(x)| exceeds m = {m}" if witness else None,
    )

    witness = None
    checked = 0
    for s, hs in h_map.items():
        checked += 1
        if vals[s] != vals[hs]:
            witness = Witness((("x", s),), vals[s], vals[hs])
            break
    reports["retraction"] = _finish(
        witness, checked, 0,
        detail="F(H(x)) differs from F(x)" if witness else None,
    )

    witness = None
    checked = 0
    blocks: dict[int, int] = {}
    for s, hs in h_map.items():
        k = len(hs)
        blocks[k] = blocks.get(k, 0) + 1
        checked += 1
        if vals[s] != vals[hs]:
            witness = Witness((("k", str(k)), ("x", s)), vals[s], vals[hs])
            break
    sizes = ", ".join(f"{k}: {blocks[k]}" for k in sorted(blocks))
    reports["partition"] = _finish(
        witness, checked, 0, detail=f"block sizes {{{sizes}}}"
    )
    return reports


@dataclass(frozen=True)
class VariadicParts:
    """Low-arity tables F_0..F_{m+1}, any codomain, total per arity."""

    alphabet: Alphabet
    parts: tuple[tuple[tuple[str, Value], ...], ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise MalformedSpecError("need tables for arities 0 and 1 at least")
        for k, part in enumerate(self.parts):
            keys = sorted(s for s, _ in part)
            expected = sorted(enumerate_strings(self.alphabet, k, min_len=k))
            if keys != expected:
                raise MalformedSpecError(
                    f"arity-{k} table must cover exactly the strings of length {k}"
                )

    @property
    def m(self) -> int:
        return len(self.parts) - 2

    def value_at(self, s: str) -> Value:
        if len(s) >= len(self.parts):
            raise MalformedSpecError(
                f"arity {len(s)} exceeds the stored tables (max {self.m + 1})"
            )
        for key, v in self.parts[len(s)]:
            if key == s:
                return v
        raise MalformedSpecError(f"no entry for {s!r}")  # unreachable after validation


def variadic_parts(
    alphabet: Alphabet, parts: Sequence[Mapping[str, Value] | Value]
) -> VariadicParts:
    """Constructor accepting dicts per arity; arity 0 may be a bare value."""
    packed = []
    for k, part in enumerate(parts):
        if not isinstance(part, Mapping):
            if k != 0:
                raise MalformedSpecError(
                    f"bare value only allowed for arity 0, not {k}"
                )
            part = {"": part}
        packed.append(tuple(sorted(part.items())))
    return VariadicParts(alphabet, tuple(packed))


def recursive_eval(parts: VariadicParts, g: QuasiInverse, x: str) -> Value:
    """Evaluate at any arity by folding through the quasi-inverse.

    Strings of at most m + 1 letters are direct lookups; longer ones fold
    left: the value so far is pulled back through g to a short string,
    the next letter is appended, and the parts are consulted again.
    """
    parts.alphabet.validate(x)
    top = parts.m + 1
    if len(x) <= top:
        return parts.value_at(x)
    value = parts.value_at(x[:top])
    for letter in x[top:]:
        pulled = g.apply(value)
        if len(pulled) + 1 > top:
            raise QuasiInverseError(
                f"pulled-back string {pulled!r} plus one letter exceeds "
                f"arity {top}; the quasi-inverse is not short enough"
            )
        value = parts.value_at(pulled + letter)
    return value
