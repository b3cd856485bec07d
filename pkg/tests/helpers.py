"""Brute-force oracles used to cross-check the library's verdicts.

Everything here recomputes properties straight from their definitions with
nested loops and no shared bookkeeping, so a bug in the checkers cannot hide
behind the same bug in the tests.
"""

from __future__ import annotations

from strfn import BoundedFn, enumerate_strings


def oracle_associative(fn: BoundedFn, level: int) -> tuple[bool, int]:
    """Scan every split of every string; return (holds, skipped)."""
    ok = True
    skipped = 0
    for x in enumerate_strings(fn.alphabet, level):
        for y in enumerate_strings(fn.alphabet, level - len(x)):
            for z in enumerate_strings(fn.alphabet, level - len(x) - len(y)):
                inner = fn.eval(y)
                if len(x) + len(inner) + len(z) > level:
                    skipped += 1
                    continue
                if fn.eval(x + y + z) != fn.eval(x + inner + z):
                    ok = False
    return ok, skipped


def oracle_associative_reduced(fn: BoundedFn, level: int) -> tuple[bool, int]:
    """Same scan restricted to splits with at most one outer letter."""
    ok = True
    skipped = 0
    for x in enumerate_strings(fn.alphabet, level):
        for y in enumerate_strings(fn.alphabet, level - len(x)):
            for z in enumerate_strings(fn.alphabet, level - len(x) - len(y)):
                if len(x) + len(z) > 1:
                    continue
                inner = fn.eval(y)
                if len(x) + len(inner) + len(z) > level:
                    skipped += 1
                    continue
                if fn.eval(x + y + z) != fn.eval(x + inner + z):
                    ok = False
    return ok, skipped


def oracle_preassociative(fn: BoundedFn, level: int) -> tuple[bool, int]:
    """Check F(y) = F(y') implies F(xyz) = F(xy'z), straight from the definition."""
    ok = True
    skipped = 0
    strings = list(enumerate_strings(fn.alphabet, level))
    for y in strings:
        for y2 in strings:
            if fn.eval(y) != fn.eval(y2):
                continue
            for x in enumerate_strings(fn.alphabet, level):
                for z in enumerate_strings(fn.alphabet, level - len(x)):
                    long = max(len(y), len(y2))
                    if len(x) + len(z) + long > level:
                        if len(x) + len(z) + min(len(y), len(y2)) <= level:
                            skipped += 1
                        continue
                    if fn.eval(x + y + z) != fn.eval(x + y2 + z):
                        ok = False
    return ok, skipped


def oracle_standard(fn: BoundedFn, level: int) -> bool:
    base = fn.eval("")
    return all(
        fn.eval(s) != base for s in enumerate_strings(fn.alphabet, level, min_len=1)
    )


def witness_values(fn: BoundedFn, witness, names: tuple[str, ...]) -> list[str]:
    """Pull the named bindings out of a witness, in order."""
    return [witness.binding(name) for name in names]


def random_string_table(alphabet, bound, rng, out_max=1):
    """A random table mapping X^{<=bound} to short strings (out_max letters)."""
    from strfn import table_fn

    outputs = list(enumerate_strings(alphabet, out_max))
    entries = {s: rng.choice(outputs) for s in enumerate_strings(alphabet, bound)}
    return table_fn(alphabet, bound, entries)


def random_token_table(alphabet, bound, rng, pool):
    """A random table mapping X^{<=bound} into a fixed pool of tokens."""
    from strfn import table_fn

    entries = {s: rng.choice(pool) for s in enumerate_strings(alphabet, bound)}
    return table_fn(alphabet, bound, entries, codomain="token")
