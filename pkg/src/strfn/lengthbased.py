"""Length-profile analysis: functions that only look at string length.

A *length profile* is a map alpha: N -> N recorded as a finite table
``values[0..N]`` over its horizon N.  Associative functions that depend
on input length only are exactly the compositions ``psi . alpha . len``
where ``|psi(n)| = n`` and alpha satisfies the pair of equations checked
by :func:`check_alpha_equations`:

- alpha(alpha(n)) = alpha(n)
- alpha(n) = alpha(n') implies alpha(n+k) = alpha(n'+k)

Such profiles have a rigid shape, captured by :class:`AlphaFn`: either
the identity, or an initial identity segment of length ``n1`` followed
by an eventually periodic tail of period ``ell`` whose first window
satisfies ``alpha(n) >= n`` and ``alpha(n) = n (mod ell)``.
:func:`classify_alpha` recovers that shape from a raw table or rejects.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .checkers import FAILS, CheckReport, Witness, _finish
from .core import STRING, TOKEN, Alphabet, BoundedFn, Token, Value
from .errors import (
    InsufficientHorizonError,
    MissingEntryError,
    PreconditionError,
    UnevaluableError,
    WitnessError,
)

IDENTITY = "identity"
STRUCTURED = "structured"


@dataclass(frozen=True)
class AlphaFn:
    """A classified length profile, evaluable at every n >= 0.

    ``values`` stores the window [0, n1 + ell); beyond it the profile
    repeats with period ``ell``.  The identity kind ignores the fields.
    """

    kind: str
    n1: int = 0
    ell: int = 1
    values: tuple[int, ...] = ()

    @property
    def standard(self) -> bool:
        """True when alpha(n) = 0 holds for n = 0 only."""
        return self.kind == IDENTITY or self.n1 > 0


def identity_alpha() -> AlphaFn:
    return AlphaFn(IDENTITY)


@dataclass(frozen=True)
class AlphaRejection:
    """Why a table or window is not a valid profile of the rigid shape."""

    condition: str
    message: str


def eval_alpha(alpha: AlphaFn, n: int) -> int:
    if n < 0:
        raise ValueError(f"profile argument must be nonnegative, got {n}")
    if alpha.kind == IDENTITY:
        return n
    window = alpha.n1 + alpha.ell
    if n < window:
        return alpha.values[n]
    return alpha.values[alpha.n1 + (n - alpha.n1) % alpha.ell]


def _validate_table(values: Sequence[int]) -> None:
    if not values:
        raise ValueError("profile table must have at least one entry")
    for n, v in enumerate(values):
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"profile table entry {n} must be a nonnegative int")


def check_alpha_equations(values: Sequence[int]) -> CheckReport:
    """Check the two profile equations on the table's horizon.

    Raises UnevaluableError when some entry exceeds the horizon, since
    alpha(alpha(n)) would then be unreadable.
    """
    _validate_table(values)
    horizon = len(values) - 1
    for n, v in enumerate(values):
        if v > horizon:
            raise UnevaluableError(
                f"entry alpha({n}) = {v} exceeds horizon {horizon}"
            )

    checked = 0
    for n, v in enumerate(values):
        checked += 1
        if values[v] != v:
            return CheckReport(
                FAILS,
                Witness((("n", str(n)),), Token(values[v]), Token(v)),
                checked,
                0,
                detail="alpha(alpha(n)) != alpha(n)",
            )

    for n in range(len(values)):
        for n2 in range(n + 1, len(values)):
            if values[n] != values[n2]:
                continue
            for k in range(1, len(values) - n2):
                checked += 1
                if values[n + k] != values[n2 + k]:
                    return CheckReport(
                        FAILS,
                        Witness(
                            (("n", str(n)), ("n2", str(n2)), ("k", str(k))),
                            Token(values[n + k]),
                            Token(values[n2 + k]),
                        ),
                        checked,
                        0,
                        detail="equal values fail to shift together",
                    )
    return _finish(None, checked, 0)


def classify_alpha(values: Sequence[int]) -> AlphaFn | AlphaRejection:
    """Recover the rigid shape of a profile table, or reject.

    The threshold is the least index touched by any disagreement with the
    identity (on either side), and the candidate period is the smallest
    jump ``|alpha(n) - n|``.  Raises InsufficientHorizonError when the
    table is too short to confirm one full period past the threshold.
    """
    _validate_table(values)
    horizon = len(values) - 1

    moved = [n for n, v in enumerate(values) if v != n]
    if not moved:
        return identity_alpha()

    n1 = min(min(moved), min(values[n] for n in moved))
    ell = min(abs(values[n] - n) for n in moved)

    if horizon < n1 + 2 * ell:
        raise InsufficientHorizonError(n1, ell, horizon)

    for n in range(n1, n1 + ell):
        v = values[n]
        if v < n:
            return AlphaRejection(
                "window-growth", f"alpha({n}) = {v} < {n} inside the window"
            )
        if (v - n) % ell != 0:
            return AlphaRejection(
                "window-residue",
                f"alpha({n}) = {v} is not congruent to {n} mod {ell}",
            )

    for n in range(n1, len(values) - ell):
        if values[n] != values[n + ell]:
            return AlphaRejection(
                "periodicity",
                f"alpha({n}) = {values[n]} but alpha({n + ell}) = {values[n + ell]}",
            )

    return AlphaFn(STRUCTURED, n1, ell, tuple(values[: n1 + ell]))


def synthesize_alpha(n1: int, ell: int, window: Sequence[int]) -> AlphaFn | AlphaRejection:
    """Build a structured profile from its window, validating the shape."""
    if n1 < 0:
        raise ValueError(f"threshold must be nonnegative, got {n1}")
    if ell < 1:
        raise ValueError(f"period must be positive, got {ell}")
    if len(window) != n1 + ell:
        raise ValueError(
            f"window must have {n1 + ell} entries, got {len(window)}"
        )
    _validate_table(window)
    for n in range(n1):
        if window[n] != n:
            return AlphaRejection(
                "identity-prefix", f"alpha({n}) = {window[n]} != {n} below the threshold"
            )
    for n in range(n1, n1 + ell):
        v = window[n]
        if v < n:
            return AlphaRejection(
                "window-growth", f"alpha({n}) = {v} < {n} inside the window"
            )
        if (v - n) % ell != 0:
            return AlphaRejection(
                "window-residue",
                f"alpha({n}) = {v} is not congruent to {n} mod {ell}",
            )
    return AlphaFn(STRUCTURED, n1, ell, tuple(window))


def _verify_period(values: Sequence[int], start: int, period: int) -> tuple[int, int] | None:
    """First index where the claimed periodicity breaks, or None."""
    for n in range(start, len(values) - period):
        if values[n] != values[n + period]:
            return (n, n + period)
    return None


def minimal_period(
    values: Sequence[int], witnesses: Sequence[tuple[int, int]]
) -> tuple[int, int]:
    """Combine periodicity witnesses into (min threshold, gcd of periods).

    Every supplied witness is verified against the table first, and so is
    the combined witness; a table whose horizon is too short to support
    the gcd combination is reported as a WitnessError rather than
    silently accepted.
    """
    _validate_table(values)
    if not witnesses:
        raise ValueError("at least one periodicity witness is required")
    for start, period in witnesses:
        if start < 0 or period < 1:
            raise WitnessError(f"malformed witness ({start}, {period})")
        broke = _verify_period(values, start, period)
        if broke is not None:
            raise WitnessError(
                f"witness ({start}, {period}) fails: "
                f"alpha({broke[0]}) != alpha({broke[1]})"
            )
    start = min(w[0] for w in witnesses)
    period = math.gcd(*(w[1] for w in witnesses))
    broke = _verify_period(values, start, period)
    if broke is not None:
        raise WitnessError(
            f"combined witness ({start}, {period}) fails on this horizon: "
            f"alpha({broke[0]}) != alpha({broke[1]})"
        )
    return (start, period)


# ---------------------------------------------------------------------------
# composing and decomposing length-based functions


@dataclass(frozen=True)
class PsiTable:
    """Partial map n -> string with |psi(n)| = n, given as sorted pairs."""

    entries: tuple[tuple[int, str], ...]

    def __post_init__(self) -> None:
        for n, s in self.entries:
            if len(s) != n:
                raise ValueError(f"psi({n}) = {s!r} must have length {n}")

    def apply(self, n: int) -> str:
        for k, s in self.entries:
            if k == n:
                return s
        raise MissingEntryError(f"psi has no entry for {n}")


def psi_table(pairs: Mapping[int, str] | Sequence[tuple[int, str]]) -> PsiTable:
    items = sorted(pairs.items() if isinstance(pairs, Mapping) else pairs)
    return PsiTable(tuple(items))


@dataclass(frozen=True)
class LengthBasedDef:
    """Closed form psi(alpha(|x|)); associative whenever alpha classifies."""

    alpha: AlphaFn
    psi: PsiTable
    codomain: str = STRING

    def apply(self, s: str) -> Value:
        return self.psi.apply(eval_alpha(self.alpha, len(s)))


def compose_length_based(
    alphabet: Alphabet, bound: int, alpha: AlphaFn, psi: PsiTable
) -> BoundedFn:
    """Build psi(alpha(|x|)) as a bounded function, validating coverage."""
    for k in range(bound + 1):
        out = psi.apply(eval_alpha(alpha, k))
        alphabet.validate(out)
    return BoundedFn(alphabet, bound, LengthBasedDef(alpha, psi))


@dataclass(frozen=True)
class LengthBasedRejection:
    reason: str
    message: str


def check_length_based(fn: BoundedFn, level: int) -> CheckReport:
    """Verify F(x) depends on |x| only (any codomain)."""
    from .checkers import _require_bound

    _require_bound(fn, level)
    strings = list(_by_length(fn, level))
    checked = 0
    for group in strings:
        first_s, first_v = group[0]
        for s, v in group[1:]:
            checked += 1
            if v != first_v:
                return CheckReport(
                    FAILS,
                    Witness((("x", first_s), ("y", s)), first_v, v),
                    checked,
                    0,
                    detail="same length, different values",
                )
    return _finish(None, checked, 0)


def check_weakly_length_based(fn: BoundedFn, level: int) -> CheckReport:
    """Verify |F(x)| depends on |x| only (string-valued functions)."""
    from .checkers import _require_bound, _require_string_valued

    _require_bound(fn, level)
    _require_string_valued(fn, "weak length-basedness check")
    checked = 0
    for group in _by_length(fn, level):
        first_s, first_v = group[0]
        for s, v in group[1:]:
            checked += 1
            if len(v) != len(first_v):
                return CheckReport(
                    FAILS,
                    Witness((("x", first_s), ("y", s)), first_v, v),
                    checked,
                    0,
                    detail="same length, different output lengths",
                )
    return _finish(None, checked, 0)


def _by_length(fn: BoundedFn, level: int):
    from .core import enumerate_strings

    groups: list[list[tuple[str, Value]]] = [[] for _ in range(level + 1)]
    for s in enumerate_strings(fn.alphabet, level):
        groups[len(s)].append((s, fn.definition.apply(s)))
    return groups


def decompose_length_based(
    fn: BoundedFn, level: int
) -> tuple[AlphaFn, PsiTable] | LengthBasedRejection:
    """Split a length-based string function into its alpha and psi parts.

    Rejects when the function is not length-based, when equal profile
    values would force an inconsistent psi, or when the recovered profile
    table does not classify.  InsufficientHorizonError propagates.
    """
    from .checkers import _require_bound, _require_string_valued

    _require_bound(fn, level)
    _require_string_valued(fn, "length-based decomposition")

    per_length: list[str] = []
    for group in _by_length(fn, level):
        first_s, first_v = group[0]
        for s, v in group[1:]:
            if v != first_v:
                return LengthBasedRejection(
                    "not-length-based",
                    f"F({first_s!r}) = {first_v!r} but F({s!r}) = {v!r}",
                )
        per_length.append(first_v)

    table = [len(v) for v in per_length]
    psi_entries: dict[int, str] = {}
    for k, v in enumerate(per_length):
        n = table[k]
        if n in psi_entries and psi_entries[n] != v:
            return LengthBasedRejection(
                "inconsistent-psi",
                f"profile value {n} maps to both {psi_entries[n]!r} and {v!r}",
            )
        psi_entries[n] = v

    shape = classify_alpha(table)
    if isinstance(shape, AlphaRejection):
        return LengthBasedRejection(
            "profile-" + shape.condition, shape.message
        )
    return shape, psi_table(psi_entries)


@dataclass(frozen=True)
class RelabeledLengthDef:
    """Closed form f(mu(|x|)) with f injective on the reachable strings."""

    mu: tuple[tuple[int, str], ...]
    relabel: tuple[tuple[str, Value], ...]
    codomain: str

    def apply(self, s: str) -> Value:
        n = len(s)
        for k, out in self.mu:
            if k == n:
                for key, v in self.relabel:
                    if key == out:
                        return v
                raise MissingEntryError(f"relabeling has no entry for {out!r}")
        raise MissingEntryError(f"mu has no entry for length {n}")


def compose_preassoc_length_based(
    alphabet: Alphabet,
    bound: int,
    mu: Mapping[int, str],
    relabel: Mapping[str, Value],
) -> BoundedFn:
    """Build f(mu(|x|)), the general length-based preassociative form.

    Requires |mu(n)| to classify as a valid profile on 0..bound and the
    relabeling to be injective on the strings mu actually produces.
    """
    table = []
    for n in range(bound + 1):
        if n not in mu:
            raise MissingEntryError(f"mu has no entry for length {n}")
        alphabet.validate(mu[n])
        table.append(len(mu[n]))
    shape = classify_alpha(table)
    if isinstance(shape, AlphaRejection):
        raise PreconditionError(
            f"|mu(n)| is not a valid profile: {shape.message}"
        )

    reachable = {mu[n] for n in range(bound + 1)}
    seen: dict[Value, str] = {}
    kinds = set()
    for s in sorted(reachable):
        if s not in relabel:
            raise MissingEntryError(f"relabeling has no entry for {s!r}")
        v = relabel[s]
        kinds.add(STRING if isinstance(v, str) else TOKEN)
        if v in seen and seen[v] != s:
            raise PreconditionError(
                f"relabeling is not injective: {seen[v]!r} and {s!r} "
                f"both map to {v!r}"
            )
        seen[v] = s
    if len(kinds) > 1:
        raise PreconditionError("relabeling mixes string and token values")
    codomain = kinds.pop() if kinds else TOKEN

    mu_entries = tuple((n, mu[n]) for n in range(bound + 1))
    relabel_entries = tuple((s, relabel[s]) for s in sorted(reachable))
    return BoundedFn(
        alphabet, bound, RelabeledLengthDef(mu_entries, relabel_entries, codomain)
    )


# ---------------------------------------------------------------------------
# exhaustive sweep: equations vs classification


@dataclass
class AlphaSweep:
    total: int = 0
    equations_hold: int = 0
    accepted: int = 0
    rejected: int = 0
    insufficient: int = 0
    mismatches: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.mismatches


def _sweep_chunk(prefix: int, horizon: int, max_value: int) -> AlphaSweep:
    out = AlphaSweep()
    for rest in itertools.product(range(max_value + 1), repeat=horizon):
        values = (prefix, *rest)
        out.total += 1
        try:
            shape = classify_alpha(values)
            holds = check_alpha_equations(values).ok
        except (InsufficientHorizonError, UnevaluableError):
            out.insufficient += 1
            continue
        accepted = isinstance(shape, AlphaFn)
        if holds:
            out.equations_hold += 1
        if accepted:
            out.accepted += 1
        else:
            out.rejected += 1
        if accepted != holds:
            out.mismatches.append(values)
    return out


def sweep_alpha_tables(horizon: int, max_value: int, jobs: int = 1) -> AlphaSweep:
    """Compare check_alpha_equations with classify_alpha over all tables.

    Enumerates every table of length horizon+1 with entries 0..max_value;
    tables rejected as InsufficientHorizon are excluded from the
    comparison but counted.  Deterministic for any worker count.
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    prefixes = range(max_value + 1)
    if jobs <= 1:
        chunks = [_sweep_chunk(p, horizon, max_value) for p in prefixes]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(
                pool.map(_sweep_chunk, prefixes, itertools.repeat(horizon),
                         itertools.repeat(max_value))
            )
    total = AlphaSweep()
    for chunk in chunks:
        total.total += chunk.total
        total.equations_hold += chunk.equations_hold
        total.accepted += chunk.accepted
        total.rejected += chunk.rejected
        total.insufficient += chunk.insufficient
        total.mismatches.extend(chunk.mismatches)
    return total
