"""Block-substitution equivalence, canonical representatives, kernel order.

Fix two distinct nonempty strings and an exponent index m.  Two strings
are equivalent when one can be turned into the other by repeatedly
replacing a single occurrence of the first string's 2^m-th power with
the second's, or back.  Picking the length-lex least member of each
class yields an idempotent, class-constant representative function —
and as m grows these functions form a strictly increasing chain in the
kernel quasiorder computed by :func:`preceq`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .core import STRING, Alphabet, BoundedFn, Value, enumerate_strings
from .errors import OutOfDomainError, PreconditionError


@dataclass(frozen=True)
class ThetaSpec:
    """Substitution data: swap x0^(2^m) with x1^(2^m)."""

    x0: str
    x1: str
    m: int = 0

    def __post_init__(self) -> None:
        if not self.x0 or not self.x1:
            raise ValueError("substitution strings must be nonempty")
        if self.x0 == self.x1:
            raise ValueError("substitution strings must be distinct")
        if self.m < 0:
            raise ValueError(f"exponent index must be nonnegative, got {self.m}")

    @property
    def blocks(self) -> tuple[str, str]:
        reps = 2**self.m
        return (self.x0 * reps, self.x1 * reps)


@dataclass(frozen=True)
class ThetaClass:
    """A closure result: members in length-lex order, truncation flagged.

    ``truncated`` is True when some rewrite left the bounded domain, so
    the true (unbounded) class has members beyond these.
    """

    members: tuple[str, ...]
    truncated: bool

    @property
    def rep(self) -> str:
        return self.members[0]

    def __contains__(self, s: str) -> bool:
        return s in self.members

    def __len__(self) -> int:
        return len(self.members)


def _occurrence_rewrites(s: str, old: str, new: str) -> list[str]:
    out = []
    start = 0
    while True:
        i = s.find(old, start)
        if i < 0:
            return out
        out.append(s[:i] + new + s[i + len(old):])
        start = i + 1


@lru_cache(maxsize=None)
def _closure(
    x: str, block0: str, block1: str, level: int, letters: tuple[str, ...] | None
) -> tuple[tuple[str, ...], bool]:
    seen = {x}
    queue = deque([x])
    truncated = False
    while queue:
        cur = queue.popleft()
        for old, new in ((block0, block1), (block1, block0)):
            for nxt in _occurrence_rewrites(cur, old, new):
                if len(nxt) > level:
                    truncated = True
                    continue
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    if letters is None:
        key = lambda s: (len(s), s)
    else:
        index = {c: i for i, c in enumerate(letters)}
        key = lambda s: (len(s), tuple(index[c] for c in s))
    return tuple(sorted(seen, key=key)), truncated


def theta_class(
    x: str, spec: ThetaSpec, level: int, alphabet: Alphabet | None = None
) -> ThetaClass:
    """Close {x} under single-occurrence block swaps, breadth first.

    Members are ordered length-lex (by the alphabet's order when given,
    else by native string order within each length).
    """
    if len(x) > level:
        raise OutOfDomainError(f"|{x!r}| exceeds the bound {level}")
    if alphabet is not None:
        alphabet.validate(x)
    block0, block1 = spec.blocks
    letters = alphabet.letters if alphabet is not None else None
    members, truncated = _closure(x, block0, block1, level, letters)
    return ThetaClass(members, truncated)


def canonical_rep(
    x: str, spec: ThetaSpec, level: int, alphabet: Alphabet | None = None
) -> str:
    """The length-lex least member of x's class: the value of F^m at x."""
    return theta_class(x, spec, level, alphabet).rep


@dataclass(frozen=True)
class ThetaRepDef:
    """Definition object for the representative function F^m."""

    spec: ThetaSpec
    level: int
    letters: tuple[str, ...]
    codomain: str = STRING

    def apply(self, s: str) -> str:
        block0, block1 = self.spec.blocks
        members, _ = _closure(s, block0, block1, self.level, self.letters)
        return members[0]


def theta_rep_fn(alphabet: Alphabet, bound: int, spec: ThetaSpec) -> BoundedFn:
    """The canonical-representative function as a bounded function."""
    alphabet.validate(spec.x0)
    alphabet.validate(spec.x1)
    return BoundedFn(alphabet, bound, ThetaRepDef(spec, bound, alphabet.letters))


EQUIVALENT = "equivalent"
STRICTLY_BELOW = "strictly-below"
STRICTLY_ABOVE = "strictly-above"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class KernelComparison:
    """Outcome of comparing two kernels on the bounded domain.

    ``first_below_second`` means the second function's kernel refines the
    first's (knowing the second's value pins down the first's).  The
    separating pair, when present, is of strings identified by one
    function but distinguished by the other.
    """

    relation: str
    first_below_second: bool
    second_below_first: bool
    separating: tuple[str, str] | None


def _constant_on_classes(
    grouper: dict[str, Value], checker: dict[str, Value], order: list[str]
) -> tuple[str, str] | None:
    """First pair (length-lex by class leader) grouped together but split."""
    leaders: dict[Value, str] = {}
    for s in order:
        g = grouper[s]
        if g not in leaders:
            leaders[g] = s
        elif checker[leaders[g]] != checker[s]:
            return (leaders[g], s)
    return None


def preceq(fn: BoundedFn, other: BoundedFn, level: int) -> KernelComparison:
    """Compare kernels: fn is below other when other's kernel is finer."""
    if fn.alphabet != other.alphabet:
        raise PreconditionError("kernel comparison requires a common alphabet")
    if level > fn.bound or level > other.bound:
        raise OutOfDomainError(
            f"comparison level {level} exceeds a function's bound"
        )
    order = list(enumerate_strings(fn.alphabet, level))
    f_vals = {s: fn.definition.apply(s) for s in order}
    g_vals = {s: other.definition.apply(s) for s in order}

    not_f_below = _constant_on_classes(g_vals, f_vals, order)
    not_g_below = _constant_on_classes(f_vals, g_vals, order)
    f_below, g_below = not_f_below is None, not_g_below is None
    if f_below and g_below:
        return KernelComparison(EQUIVALENT, True, True, None)
    if f_below:
        return KernelComparison(STRICTLY_BELOW, True, False, not_g_below)
    if g_below:
        return KernelComparison(STRICTLY_ABOVE, False, True, not_f_below)
    return KernelComparison(INCOMPARABLE, False, False, not_f_below)
