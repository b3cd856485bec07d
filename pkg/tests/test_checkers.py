from __future__ import annotations

import itertools
import random

import pytest

from helpers import (
    oracle_associative,
    oracle_associative_reduced,
    oracle_preassociative,
    oracle_standard,
    random_string_table,
)
from strfn import (
    FAILS,
    HOLDS,
    VACUOUS,
    Alphabet,
    NotApplicableError,
    PreconditionError,
    Token,
    check_associative_full,
    check_associative_reduced,
    check_equivalent_definitions,
    check_idempotent,
    check_injective_rigidity,
    check_m_bounded,
    check_m_determined_range,
    check_preassociative,
    check_standard,
    constant_fn,
    enumerate_strings,
    find_absorbed_string,
    identity_fn,
    length_fn,
    length_of_fn,
    letter_remove_fn,
    letter_remove_g_fn,
    ofo_fn,
    separator_insert_fn,
    sort_fn,
    table_fn,
)


def fixture_functions(ab3):
    """The standard set of string-valued examples over {a, b, |}."""
    return {
        "identity": identity_fn(ab3, 5),
        "sort": sort_fn(ab3, 5),
        "ofo": ofo_fn(ab3, 5),
        "remove-a": letter_remove_fn(ab3, 5, "a"),
        "remove-a-marked": letter_remove_g_fn(ab3, 5, "a"),
        "separator": separator_insert_fn(ab3, 5, "|"),
    }


# ---------------------------------------------------------------- associativity


def test_associative_fixtures_hold(ab3):
    for name, fn in fixture_functions(ab3).items():
        report = check_associative_full(fn, 5)
        assert report.verdict == HOLDS, name
        assert report.ok


def test_ofo_associative_no_skips(ab3):
    report = check_associative_full(ofo_fn(ab3, 5), 5)
    assert report.verdict == HOLDS
    assert report.skipped == 0
    assert report.checked > 0


def test_bit_flip_not_associative(bit_flip):
    report = check_associative_full(bit_flip, 5)
    assert report.verdict == FAILS
    w = report.witness
    x, y, z = w.binding("x"), w.binding("y"), w.binding("z")
    lhs = bit_flip.eval(x + y + z)
    rhs = bit_flip.eval(x + bit_flip.eval(y) + z)
    assert lhs == w.lhs and rhs == w.rhs and lhs != rhs


def test_associativity_matches_oracle_on_fixtures(ab3):
    for name, fn in fixture_functions(ab3).items():
        ok, skipped = oracle_associative(fn, 4)
        report = check_associative_full(fn, 4)
        assert report.ok == ok, name
        assert report.skipped == skipped, name


def test_associativity_matches_oracle_on_random_tables(ab):
    # the checker stops at the first counterexample, so skip counts are
    # only comparable on a full scan
    rng = random.Random(9001)
    for _ in range(30):
        fn = random_string_table(ab, 4, rng)
        ok, skipped = oracle_associative(fn, 4)
        report = check_associative_full(fn, 4)
        assert report.ok == ok
        if ok:
            assert report.skipped == skipped
        ok_r, skipped_r = oracle_associative_reduced(fn, 4)
        report_r = check_associative_reduced(fn, 4)
        assert report_r.ok == ok_r
        if ok_r:
            assert report_r.skipped == skipped_r


def test_constant_skip_counting(ab):
    # F == "ab" everywhere: splitting can overflow the bound by one letter.
    fn = constant_fn(ab, 3, "ab")
    ok, skipped = oracle_associative(fn, 3)
    report = check_associative_full(fn, 3)
    assert ok and report.verdict == HOLDS
    assert skipped > 0
    assert report.skipped == skipped
    assert report.incomplete


def test_reduced_check_catches_unary_patch(ab):
    """Identity on single letters, constant 'a' elsewhere: fails immediately."""
    entries = {}
    for s in enumerate_strings(ab, 3):
        entries[s] = s if len(s) == 1 else "a"
    fn = table_fn(ab, 3, entries)
    report = check_associative_reduced(fn, 3)
    assert report.verdict == FAILS
    assert report.witness.bindings == (("x", ""), ("y", ""), ("z", "b"))
    assert report.witness.lhs == "b"
    assert report.witness.rhs == "a"
    assert report.checked == 5
    assert report.skipped == 0


def test_associative_requires_string_values(ab):
    with pytest.raises(PreconditionError):
        check_associative_full(length_fn(ab, 3), 3)


def test_level_cannot_exceed_bound(ab):
    from strfn import OutOfDomainError

    with pytest.raises(OutOfDomainError):
        check_associative_full(identity_fn(ab, 3), 4)


def test_jobs_do_not_change_the_report(ab3):
    fn = ofo_fn(ab3, 5)
    assert check_associative_full(fn, 5, jobs=2) == check_associative_full(fn, 5)
    flip = sort_fn(ab3, 5, order=("|", "b", "a"))
    assert check_associative_full(flip, 5, jobs=3) == check_associative_full(flip, 5)


# -------------------------------------------------------------- preassociativity


def test_length_is_preassociative(ab):
    report = check_preassociative(length_fn(ab, 5), 5)
    assert report.verdict == HOLDS
    assert report.skipped == 0


def test_length_of_marked_removal_not_preassociative(ab3):
    fn = length_of_fn(letter_remove_g_fn(ab3, 5, "a"))
    report = check_preassociative(fn, 5)
    assert report.verdict == FAILS
    assert report.witness.bindings == (
        ("y", ""), ("y2", "b"), ("x", ""), ("z", "b"),
    )
    assert report.witness.lhs == Token(1)
    assert report.witness.rhs == Token(2)


def test_length_of_ofo_not_preassociative(ab3):
    fn = length_of_fn(ofo_fn(ab3, 5))
    report = check_preassociative(fn, 5)
    assert report.verdict == FAILS
    assert report.witness.bindings == (
        ("y", "a"), ("y2", "b"), ("x", "a"), ("z", ""),
    )
    assert report.witness.lhs == Token(1)
    assert report.witness.rhs == Token(2)


def test_preassociativity_fixtures(ab3):
    # every associative string function is preassociative
    for name, fn in fixture_functions(ab3).items():
        assert check_preassociative(fn, 5).ok, name


def test_preassociativity_matches_oracle(ab):
    rng = random.Random(4242)
    for _ in range(20):
        fn = random_string_table(ab, 3, rng)
        ok, skipped = oracle_preassociative(fn, 3)
        report = check_preassociative(fn, 3)
        assert report.ok == ok
        assert (report.skipped > 0) == (skipped > 0)


def test_preassociative_witness_reevaluates(ab):
    rng = random.Random(77)
    seen = 0
    while seen < 5:
        fn = random_string_table(ab, 3, rng)
        report = check_preassociative(fn, 3)
        if report.verdict != FAILS:
            continue
        seen += 1
        w = report.witness
        y, y2 = w.binding("y"), w.binding("y2")
        x, z = w.binding("x"), w.binding("z")
        assert fn.eval(y) == fn.eval(y2)
        assert fn.eval(x + y + z) == w.lhs
        assert fn.eval(x + y2 + z) == w.rhs
        assert w.lhs != w.rhs


def test_preassociative_counts_skips(ab):
    # constant function: every pair of strings is a kernel pair, so long
    # partners get skipped at the boundary.
    fn = constant_fn(ab, 3, "a")
    report = check_preassociative(fn, 3)
    assert report.verdict == HOLDS
    assert report.skipped > 0
    assert report.incomplete


def test_injective_function_preassociative_vacuously(bit_flip):
    report = check_preassociative(bit_flip, 5)
    assert report.ok
    assert report.verdict in (HOLDS, VACUOUS)


# ------------------------------------------------------------------- standard


def test_standard_fixtures(ab3):
    assert check_standard(ofo_fn(ab3, 5), 5).verdict == HOLDS
    assert check_standard(identity_fn(ab3, 5), 5).verdict == HOLDS

    report = check_standard(letter_remove_fn(ab3, 5, "a"), 5)
    assert report.verdict == FAILS
    assert report.witness.bindings == (("x", "a"),)

    report = check_standard(letter_remove_g_fn(ab3, 5, "a"), 5)
    assert report.verdict == FAILS
    assert report.witness.bindings == (("x", "a"),)


def test_standard_matches_oracle(ab):
    rng = random.Random(31337)
    for _ in range(20):
        fn = random_string_table(ab, 3, rng)
        assert check_standard(fn, 3).ok == oracle_standard(fn, 3)


# ----------------------------------------------------------------- idempotence


def test_idempotent_fixtures(ab3, bit_flip):
    assert check_idempotent(sort_fn(ab3, 5), 5).verdict == HOLDS
    assert check_idempotent(ofo_fn(ab3, 5), 5).verdict == HOLDS
    report = check_idempotent(bit_flip, 5)
    assert report.verdict == FAILS
    assert report.witness.bindings == (("x", "0"),)
    assert bit_flip.eval(bit_flip.eval("0")) != bit_flip.eval("0")


def test_idempotent_skips_grown_outputs(ab3):
    # |F(x)| may exceed the bound, making F(F(x)) unevaluable.
    fn = separator_insert_fn(ab3, 3, "|")
    report = check_idempotent(fn, 3)
    assert report.skipped > 0


# ----------------------------------------------------- boundedness and range


def test_m_bounded(ab):
    assert check_m_bounded(constant_fn(ab, 4, ""), 0, 4).verdict == HOLDS
    # output size only makes sense for string values
    with pytest.raises(PreconditionError):
        check_m_bounded(length_fn(ab, 4), 0, 4)

    report = check_m_bounded(identity_fn(ab, 4), 1, 4)
    assert report.verdict == FAILS
    assert report.witness.bindings == (("x", "aa"),)

    report = check_m_bounded(letter_remove_fn(ab, 4, "a"), 1, 4)
    assert report.verdict == FAILS
    assert report.witness.bindings == (("x", "bb"),)


def test_first_letter_is_one_bounded(first_letter):
    assert check_m_bounded(first_letter, 1, 6).verdict == HOLDS


def test_m_determined_range(ab, first_letter):
    report = check_m_determined_range(length_fn(ab, 4), 1, 4)
    assert report.verdict == FAILS
    assert report.witness.bindings == (("x", "aa"),)
    assert report.witness.lhs == Token(2)

    assert check_m_determined_range(first_letter, 1, 6).verdict == HOLDS
    assert check_m_determined_range(constant_fn(ab, 4, Token("k")), 0, 4).verdict == HOLDS


# ------------------------------------------------------ equivalent definitions


def test_equivalent_definitions_all_hold_for_ofo(ab3):
    reports = check_equivalent_definitions(ofo_fn(ab3, 4), 4)
    assert set(reports) == {"i", "ii", "iii", "iv"}
    assert all(r.ok for r in reports.values())
    assert all(r.verdict == HOLDS for r in reports.values())


def test_equivalent_definitions_all_hold_for_identity(ab):
    reports = check_equivalent_definitions(identity_fn(ab, 4), 4)
    assert all(r.verdict == HOLDS for r in reports.values())


def test_equivalent_definitions_all_fail_together(bit_flip):
    reports = check_equivalent_definitions(bit_flip, 4)
    assert all(r.verdict == FAILS for r in reports.values())


def test_equivalent_definitions_need_empty_fixed(ab):
    # the equivalence is only stated for F(empty) = empty
    fn = letter_remove_g_fn(ab, 4, "a")
    with pytest.raises(PreconditionError):
        check_equivalent_definitions(fn, 4)


# -------------------------------------------------------------------- rigidity


def test_rigidity_of_identity(ab):
    report = check_injective_rigidity(identity_fn(ab, 4), 4)
    assert report.verdict == HOLDS
    assert report.checked == 31  # 2^0 + ... + 2^4


def test_rigidity_vacuous_for_sort(ab):
    report = check_injective_rigidity(sort_fn(ab, 4), 4)
    assert report.verdict == VACUOUS
    assert report.ok
    assert report.witness.bindings == (("x", "ab"), ("y", "ba"))
    assert "injective" in report.detail


def test_rigidity_vacuous_for_bit_flip(bit_flip):
    # injective but not idempotent: the claim does not apply
    report = check_injective_rigidity(bit_flip, 5)
    assert report.verdict == VACUOUS


def test_no_injective_idempotent_function_other_than_identity(ab):
    """Exhaustive search at bound 2: every injective idempotent table is the identity.

    An injective map from the 7 strings of length <= 2 into themselves is a
    bijection, and an idempotent bijection fixes everything.
    """
    strings = list(enumerate_strings(ab, 2))
    found = []
    for image in itertools.permutations(strings):
        table = dict(zip(strings, image))
        if all(table[table[s] if len(table[s]) <= 2 else s] == table[s]
               for s in strings):
            found.append(table)
    assert len(found) == 1
    assert found[0] == {s: s for s in strings}


# ------------------------------------------------------------ absorbed strings


def test_absorbed_string_for_removal(ab):
    assert find_absorbed_string(letter_remove_fn(ab, 4, "a"), 4) == "a"


def test_absorbed_string_for_length_composite(ab):
    fn = length_of_fn(letter_remove_fn(ab, 4, "a"))
    assert find_absorbed_string(fn, 4) == "a"


def test_absorbed_string_not_applicable_when_standard(ab):
    with pytest.raises(NotApplicableError):
        find_absorbed_string(ofo_fn(ab, 4), 4)


def test_absorbed_string_candidate_can_fail_verification(ab):
    # 'a' shares its value with the empty string but is not absorbed:
    # F("aa") = "b" differs from F("a") = "a".
    fn = table_fn(ab, 2, {"": "a", "a": "a", "b": "b",
                          "aa": "b", "ab": "b", "ba": "b", "bb": "b"})
    assert find_absorbed_string(fn, 2) is None


# ------------------------------------------------------------ cross invariants


def test_associative_iff_preassociative_and_idempotent(ab3, bit_flip):
    """For string functions the two-property split is exact (when no
    instance was skipped)."""
    candidates = list(fixture_functions(ab3).items()) + [("bit-flip", bit_flip)]
    rng = random.Random(555)
    for i in range(20):
        fn = random_string_table(ab3, 3, rng)
        if fn.eval("") == "":
            candidates.append((f"random-{i}", fn))
    for name, fn in candidates:
        level = min(fn.bound, 4)
        assoc = check_associative_full(fn, level)
        pre = check_preassociative(fn, level)
        idem = check_idempotent(fn, level)
        if assoc.skipped or pre.skipped or idem.skipped:
            continue
        assert assoc.ok == (pre.ok and idem.ok), name


def test_associative_standard_functions_fix_empty(ab3):
    for name, fn in fixture_functions(ab3).items():
        if check_associative_full(fn, 5).ok and check_standard(fn, 5).ok:
            assert fn.eval("") == "", name
