"""Exhaustive law checkers over bounded string domains.

Every checker quantifies its law over the bounded domain ``X^{<=L}`` and
returns a :class:`CheckReport` with one of three verdicts:

- ``"holds"``  -- no counterexample among the evaluable instances;
- ``"fails"``  -- a counterexample was found and is reported as a witness;
- ``"vacuous"`` -- the quantified instance space is empty (or nothing in
  it could be evaluated within the bound).

Instances whose evaluation would need a string longer than ``L`` are
counted in ``skipped`` and the report is flagged ``incomplete``; a
``holds`` verdict is then relative to the instances actually evaluated.

Witness determinism: the reported counterexample is the first failure in
the enumeration order of the quantified tuple -- length-lex order on the
concatenation of the tuple's components, ties broken by split position.
On failure the counters cover the instances examined before the scan
terminated, which is likewise deterministic.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import (
    Alphabet,
    BoundedFn,
    Value,
    enumerate_strings,
)
from .errors import (
    NotApplicableError,
    OutOfDomainError,
    PreconditionError,
)

HOLDS = "holds"
FAILS = "fails"
VACUOUS = "vacuous"


@dataclass(frozen=True)
class Witness:
    """An instantiated counterexample: variable bindings plus both sides."""

    bindings: tuple[tuple[str, str], ...]
    lhs: Value | None = None
    rhs: Value | None = None

    def binding(self, name: str) -> str:
        for key, val in self.bindings:
            if key == name:
                return val
        raise KeyError(name)


@dataclass(frozen=True)
class CheckReport:
    verdict: str
    witness: Witness | None
    checked: int
    skipped: int
    detail: str | None = None

    @property
    def ok(self) -> bool:
        """True unless a counterexample was found."""
        return self.verdict != FAILS

    @property
    def incomplete(self) -> bool:
        return self.skipped > 0


def _finish(witness: Witness | None, checked: int, skipped: int,
            detail: str | None = None) -> CheckReport:
    if witness is not None:
        return CheckReport(FAILS, witness, checked, skipped, detail)
    if checked == 0:
        return CheckReport(VACUOUS, None, checked, skipped, detail)
    return CheckReport(HOLDS, None, checked, skipped, detail)


def _require_bound(fn: BoundedFn, level: int) -> None:
    if level < 0:
        raise ValueError(f"check bound must be nonnegative, got {level}")
    if level > fn.bound:
        raise OutOfDomainError(
            f"check bound {level} exceeds the function's evaluation bound {fn.bound}"
        )


def _require_string_valued(fn: BoundedFn, op: str) -> None:
    if not fn.string_valued:
        raise PreconditionError(f"{op} applies to string-valued functions only")


def _domain(fn: BoundedFn, level: int) -> tuple[list[str], dict[str, Value]]:
    strings = list(enumerate_strings(fn.alphabet, level))
    vals = {s: fn.definition.apply(s) for s in strings}
    return strings, vals


# ---------------------------------------------------------------------------
# associativity


def _assoc_scan(strings, vals, level, reduced, offset, step):
    """Scan splits of each concatenation; return first failure and counters.

    The failure key (string index, i, j) orders failures globally, which
    lets parallel workers agree on the first witness.
    """
    checked = 0
    skipped = 0
    for wi in range(offset, len(strings), step):
        w = strings[wi]
        n = len(w)
        lhs = vals[w]
        if reduced:
            if n == 0:
                splits = ((0, 0),)
            else:
                splits = ((0, n - 1), (0, n), (1, n))
        else:
            splits = ((i, j) for i in range(n + 1) for j in range(i, n + 1))
        for i, j in splits:
            y = w[i:j]
            v = vals[y]
            if i + len(v) + (n - j) > level:
                skipped += 1
                continue
            checked += 1
            rhs = vals[w[:i] + v + w[j:]]
            if lhs != rhs:
                witness = Witness(
                    (("x", w[:i]), ("y", y), ("z", w[j:])), lhs, rhs
                )
                return (wi, i, j), witness, checked, skipped
    return None, None, checked, skipped


def _run_assoc(fn: BoundedFn, level: int, reduced: bool, jobs: int) -> CheckReport:
    _require_bound(fn, level)
    _require_string_valued(fn, "associativity check")
    strings, vals = _domain(fn, level)
    if jobs <= 1:
        _, witness, checked, skipped = _assoc_scan(strings, vals, level, reduced, 0, 1)
        return _finish(witness, checked, skipped)

    checked = 0
    skipped = 0
    best_key = None
    best_witness = None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_assoc_scan, strings, vals, level, reduced, off, jobs)
            for off in range(jobs)
        ]
        for fut in futures:
            key, witness, c, s = fut.result()
            checked += c
            skipped += s
            if key is not None and (best_key is None or key < best_key):
                best_key = key
                best_witness = witness
    return _finish(best_witness, checked, skipped)


def check_associative_full(fn: BoundedFn, level: int, jobs: int = 1) -> CheckReport:
    """Verify F(xyz) = F(x F(y) z) over every split of every string in X^{<=level}.

    Instances where the inner value makes |x F(y) z| exceed the bound are
    skipped and counted.
    """
    return _run_assoc(fn, level, reduced=False, jobs=jobs)


def check_associative_reduced(fn: BoundedFn, level: int, jobs: int = 1) -> CheckReport:
    """Like the full check but restricted to contexts with |xz| <= 1.

    For m-bounded functions this restriction is decisive; for anything
    else a ``holds`` verdict with skips is advisory only.
    """
    return _run_assoc(fn, level, reduced=True, jobs=jobs)


# ---------------------------------------------------------------------------
# preassociativity


def _context_pool(alphabet: Alphabet, level: int):
    """All context pairs (x, z) with |x|+|z| <= level.

    Ordered by total length, then x in length-lex order, then z; ``cum[b]``
    counts the contexts of total length <= b, so a budget maps to a prefix.
    """
    letters = alphabet.letters
    contexts: list[tuple[str, str]] = []
    cum = [0] * (level + 1)
    for total in range(level + 1):
        for i in range(total + 1):
            for xs in itertools.product(letters, repeat=i):
                x = "".join(xs)
                for zs in itertools.product(letters, repeat=total - i):
                    contexts.append((x, "".join(zs)))
        cum[total] = len(contexts)
    return contexts, cum


def _preassoc_first_witness(alphabet, vals, level):
    """Locate the canonical first witness by direct enumeration.

    Tuples (x, y, y2, z) are ordered by length-lex on x+y+y2+z, then by
    split position.  Only called once a failure is known to exist, so the
    scan terminates early.
    """
    letters = alphabet.letters
    for n in range(2 * level + 1):
        for combo in itertools.product(letters, repeat=n):
            w = "".join(combo)
            for i in range(n + 1):
                for j in range(i, n + 1):
                    y = w[i:j]
                    if n - (j - i) > level:
                        # |x y2 z| too long regardless of k; larger j only shrinks it
                        continue
                    for k in range(j, n + 1):
                        if n - (k - j) > level:
                            continue
                        y2 = w[j:k]
                        if y == y2:
                            continue
                        if vals[y] != vals[y2]:
                            continue
                        left = vals[w[:i] + y + w[k:]]
                        right = vals[w[:i] + y2 + w[k:]]
                        if left != right:
                            return Witness(
                                (("y", y), ("y2", y2), ("x", w[:i]), ("z", w[k:])),
                                left,
                                right,
                            )
    return None


def check_preassociative(fn: BoundedFn, level: int, jobs: int = 1) -> CheckReport:
    """Verify F(y) = F(y') implies F(xyz) = F(xy'z) on the bounded domain.

    X^{<=level} is partitioned into kernel classes by value; each unordered
    pair within a class is tested once against every context (x, z) for
    which both sides stay within the bound.  Contexts where only the
    shorter side fits are counted as skipped.  Any codomain is accepted.
    """
    del jobs  # the kernel-class scan is cheap; a single worker suffices
    _require_bound(fn, level)
    strings, vals = _domain(fn, level)
    contexts, cum = _context_pool(fn.alphabet, level)

    classes: dict[Value, list[str]] = {}
    for s in strings:
        classes.setdefault(vals[s], []).append(s)

    checked = 0
    skipped = 0
    failed = False
    for members in classes.values():
        for a_idx in range(len(members)):
            y = members[a_idx]
            for b_idx in range(a_idx + 1, len(members)):
                y2 = members[b_idx]
                both = cum[level - len(y2)] if len(y2) <= level else 0
                one_sided = cum[level - len(y)]
                skipped += one_sided - both
                for x, z in contexts[:both]:
                    checked += 1
                    if vals[x + y + z] != vals[x + y2 + z]:
                        failed = True
                        break
                if failed:
                    break
            if failed:
                break
        if failed:
            break

    if not failed:
        return _finish(None, checked, skipped)
    witness = _preassoc_first_witness(fn.alphabet, vals, level)
    return CheckReport(FAILS, witness, checked, skipped)


# ---------------------------------------------------------------------------
# pointwise properties


def check_standard(fn: BoundedFn, level: int) -> CheckReport:
    """Verify F(x) = F(empty) only for x = empty."""
    _require_bound(fn, level)
    strings, vals = _domain(fn, level)
    base = vals[""]
    checked = 0
    for s in strings[1:]:
        checked += 1
        if vals[s] == base:
            return CheckReport(
                FAILS, Witness((("x", s),), vals[s], base), checked, 0
            )
    return _finish(None, checked, 0)


def check_idempotent(fn: BoundedFn, level: int) -> CheckReport:
    """Verify F(F(x)) = F(x); skips x whose value is longer than the bound."""
    _require_bound(fn, level)
    _require_string_valued(fn, "idempotence check")
    strings, vals = _domain(fn, level)
    checked = 0
    skipped = 0
    for s in strings:
        v = vals[s]
        if len(v) > level:
            skipped += 1
            continue
        checked += 1
        if vals[v] != v:
            return CheckReport(
                FAILS, Witness((("x", s),), vals[v], v), checked, skipped
            )
    return _finish(None, checked, skipped)


def check_m_bounded(fn: BoundedFn, m: int, level: int) -> CheckReport:
    """Verify |F(x)| <= m on the bounded domain."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    _require_bound(fn, level)
    _require_string_valued(fn, "boundedness check")
    strings, vals = _domain(fn, level)
    checked = 0
    for s in strings:
        checked += 1
        v = vals[s]
        if len(v) > m:
            return CheckReport(
                FAILS,
                Witness((("x", s),), v, None),
                checked,
                0,
                detail=f"|F(x)| = {len(v)} exceeds m = {m}",
            )
    return _finish(None, checked, 0)


def check_m_determined_range(fn: BoundedFn, m: int, level: int) -> CheckReport:
    """Verify every value on X^{<=level} is already attained on X^{<=m}."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if m > level:
        raise PreconditionError(f"m = {m} exceeds the check bound {level}")
    _require_bound(fn, level)
    strings, vals = _domain(fn, level)
    low = {vals[s] for s in strings if len(s) <= m}
    checked = 0
    for s in strings:
        if len(s) <= m:
            continue
        checked += 1
        if vals[s] not in low:
            return CheckReport(
                FAILS,
                Witness((("x", s),), vals[s], None),
                checked,
                0,
                detail=f"value not attained at arity <= {m}",
            )
    return _finish(None, checked, 0)


# ---------------------------------------------------------------------------
# equivalent formulations of associativity


def check_equivalent_definitions(fn: BoundedFn, level: int) -> dict[str, CheckReport]:
    """Check the four equivalent formulations for unit-preserving functions.

    Requires F(empty) = empty; returns one report per formulation:

    - "i":   F(xyz) = F(x F(y) z)
    - "ii":  any two decompositions of the same string agree
    - "iii": F(F(xy) z) = F(x F(yz))
    - "iv":  F(xy) = F(F(x) F(y))
    """
    _require_bound(fn, level)
    _require_string_valued(fn, "equivalent-definitions check")
    if fn.eval("") != "":
        raise PreconditionError(
            "equivalent-definitions check requires F(empty) = empty"
        )
    strings, vals = _domain(fn, level)

    reports = {"i": _run_assoc(fn, level, reduced=False, jobs=1)}

    # (ii) all decompositions of a string produce the same inner evaluation
    checked = skipped = 0
    witness = None
    for w in strings:
        n = len(w)
        first = None
        for i in range(n + 1):
            for j in range(i, n + 1):
                v = vals[w[i:j]]
                if i + len(v) + (n - j) > level:
                    skipped += 1
                    continue
                out = vals[w[:i] + v + w[j:]]
                if first is None:
                    first = ((w[:i], w[i:j], w[j:]), out)
                    continue
                checked += 1
                if out != first[1]:
                    (x1, y1, z1) = first[0]
                    witness = Witness(
                        (
                            ("x", x1), ("y", y1), ("z", z1),
                            ("x2", w[:i]), ("y2", w[i:j]), ("z2", w[j:]),
                        ),
                        first[1],
                        out,
                    )
                    break
            if witness:
                break
        if witness:
            break
    reports["ii"] = _finish(witness, checked, skipped)

    # (iii) F(F(xy) z) = F(x F(yz))
    checked = skipped = 0
    witness = None
    for w in strings:
        n = len(w)
        for i in range(n + 1):
            for j in range(i, n + 1):
                u = vals[w[:j]]
                v = vals[w[i:]]
                if len(u) + (n - j) > level or i + len(v) > level:
                    skipped += 1
                    continue
                checked += 1
                left = vals[u + w[j:]]
                right = vals[w[:i] + v]
                if left != right:
                    witness = Witness(
                        (("x", w[:i]), ("y", w[i:j]), ("z", w[j:])), left, right
                    )
                    break
            if witness:
                break
        if witness:
            break
    reports["iii"] = _finish(witness, checked, skipped)

    # (iv) F(xy) = F(F(x) F(y))
    checked = skipped = 0
    witness = None
    for w in strings:
        n = len(w)
        for i in range(n + 1):
            u = vals[w[:i]]
            v = vals[w[i:]]
            if len(u) + len(v) > level:
                skipped += 1
                continue
            checked += 1
            if vals[w] != vals[u + v]:
                witness = Witness(
                    (("x", w[:i]), ("y", w[i:])), vals[w], vals[u + v]
                )
                break
        if witness:
            break
    reports["iv"] = _finish(witness, checked, skipped)

    return reports


# ---------------------------------------------------------------------------
# rigidity and absorption


def check_injective_rigidity(fn: BoundedFn, level: int) -> CheckReport:
    """If F is injective and idempotent on the domain, verify F = id.

    Vacuous (with the disqualifying pair in the witness) when F is not
    injective or not idempotent there.
    """
    _require_bound(fn, level)
    _require_string_valued(fn, "rigidity check")
    strings, vals = _domain(fn, level)

    seen: dict[Value, str] = {}
    for s in strings:
        v = vals[s]
        if v in seen:
            return CheckReport(
                VACUOUS,
                Witness((("x", seen[v]), ("y", s)), v, v),
                0,
                0,
                detail="not injective on the domain",
            )
        seen[v] = s

    skipped = 0
    for s in strings:
        v = vals[s]
        if len(v) > level:
            skipped += 1
            continue
        if vals[v] != v:
            return CheckReport(
                VACUOUS,
                Witness((("x", s),), vals[v], v),
                0,
                skipped,
                detail="not idempotent on the domain",
            )

    checked = 0
    for s in strings:
        checked += 1
        if vals[s] != s:
            return CheckReport(
                FAILS, Witness((("x", s),), vals[s], s), checked, skipped
            )
    return _finish(None, checked, skipped)


def find_absorbed_string(fn: BoundedFn, level: int) -> str | None:
    """Search for a nonempty string whose insertion anywhere never changes F.

    Candidates are the kernel-mates of the empty string, tried in
    length-lex order; each must verify F(xz) = F(x a z) for every context
    with |x a z| <= level.  Returns None when no candidate verifies.
    Raises NotApplicableError when F is standard on the domain.
    """
    _require_bound(fn, level)
    strings, vals = _domain(fn, level)
    base = vals[""]
    mates = [s for s in strings[1:] if vals[s] == base]
    if not mates:
        raise NotApplicableError(
            "function is standard on the bounded domain; nothing is absorbed"
        )
    contexts, cum = _context_pool(fn.alphabet, level)
    for a in mates:
        budget = level - len(a)
        good = True
        for x, z in contexts[: cum[budget]]:
            if vals[x + z] != vals[x + a + z]:
                good = False
                break
        if good:
            return a
    return None
