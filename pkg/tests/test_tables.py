"""Graded Betti tables, pure tables, and the finite-length numerator test.

Frozen multiplicities below were first computed by hand from the
alternating product formula (each beta_k is a product of degree
differences divided by the differences at k) and cross-checked against
the numerator divisibility route before being pinned.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betticone import (
    DegreeSequence,
    GradedBettiTable,
    HilbertNumerator,
    NonIncreasingDegrees,
    PureTable,
    check_hk_equations,
    coarsen,
    graded_from_json_obj,
    graded_to_json_obj,
    hilbert_numerator,
    hk_pure_table,
    is_finite_length_numerator,
    monomial_quotient,
    MonomialPair,
    bigraded_betti,
    normalize_positive_integers,
    proportionality_ratio,
    pure_from_json_obj,
    pure_to_json_obj,
)

# degree sequence -> minimal positive integer multiplicities
HK_FIXTURES = {
    (0, 1): (1, 1),
    (0, 1, 2): (1, 2, 1),
    (0, 2, 3): (1, 3, 2),
    (0, 1, 3): (2, 3, 1),
    (0, 1, 2, 3): (1, 3, 3, 1),
    (0, 1, 3, 5): (8, 15, 10, 3),
    (0, 3, 5, 6): (1, 5, 9, 5),
    (0, 4, 5, 6): (1, 15, 24, 10),
}


def _increasing_sequences(max_len=4, max_deg=9):
    strictly_increasing = st.lists(
        st.integers(min_value=-6, max_value=max_deg),
        min_size=2, max_size=max_len, unique=True,
    ).map(sorted)
    return strictly_increasing


def test_hk_fixed_points():
    for degs, mults in HK_FIXTURES.items():
        assert hk_pure_table(list(degs)).multiplicities == mults


def test_hk_returns_degree_sequence_unchanged():
    p = hk_pure_table([0, 1, 3, 5])
    assert p.degrees == DegreeSequence([0, 1, 3, 5])
    assert tuple(p.degrees) == (0, 1, 3, 5)


def test_hk_rejects_non_increasing():
    with pytest.raises(NonIncreasingDegrees) as exc:
        hk_pure_table([0, 0, 1])
    assert str(exc.value) == "degrees must be strictly increasing"
    with pytest.raises(NonIncreasingDegrees):
        hk_pure_table([3, 1])


def test_hk_single_degree_is_one():
    assert hk_pure_table([7]).multiplicities == (1,)


@given(_increasing_sequences())
def test_hk_translation_invariant(degs):
    shifted = [d + 11 for d in degs]
    assert hk_pure_table(degs).multiplicities == \
        hk_pure_table(shifted).multiplicities


@given(_increasing_sequences())
@settings(max_examples=150)
def test_hk_tables_satisfy_hk_equations(degs):
    table = hk_pure_table(degs).to_graded()
    assert check_hk_equations(table)
    h = hilbert_numerator(table)
    assert is_finite_length_numerator(h, table.nvars)


@given(_increasing_sequences())
def test_hk_multiplicities_are_coprime(degs):
    from math import gcd
    mults = hk_pure_table(degs).multiplicities
    g = 0
    for m in mults:
        g = gcd(g, m)
    assert g == 1


def test_graded_table_drops_zero_entries():
    t = GradedBettiTable(2, {(0, 0): 0, (1, 2): 3})
    assert (0, 0) not in t.entries
    assert t.entry(1, 2) == 3
    assert t.entry(5, 5) == 0


def test_graded_table_rejects_negative_entries():
    with pytest.raises(ValueError, match="negative Betti entry"):
        GradedBettiTable(2, {(0, 0): -1})


def test_graded_table_add_and_scale():
    a = hk_pure_table([0, 1, 2]).to_graded()
    b = a.add(a)
    assert b == a.scaled(2)
    assert b.entry(1, 1) == 4
    half = b.scaled(Fraction(1, 2))
    assert half == a


def test_graded_table_column():
    t = hk_pure_table([0, 1, 3, 5]).to_graded()
    assert t.column(2) == {3: 10}
    assert t.column(9) == {}


def test_projective_dimension():
    t = hk_pure_table([0, 1, 3, 5]).to_graded()
    assert t.projective_dimension() == 3
    assert GradedBettiTable(3, {}).projective_dimension() is None


def test_check_hk_equations_rejects_perturbed_table():
    t = hk_pure_table([0, 1, 3, 5]).to_graded()
    entries = dict(t.entries)
    entries[(1, 1)] = entries[(1, 1)] + 1
    assert not check_hk_equations(GradedBettiTable(t.nvars, entries))


def test_hilbert_numerator_coefficients():
    t = hk_pure_table([0, 1, 3, 5]).to_graded()
    h = hilbert_numerator(t)
    assert h.coefficients == {0: 8, 1: -15, 3: 10, 5: -3}
    assert h.coefficient(2) == 0
    assert not h.is_zero()


def test_hilbert_numerator_clears_denominators():
    t = GradedBettiTable(1, {(0, 0): Fraction(1, 2), (1, 1): Fraction(1, 2)})
    h = hilbert_numerator(t)
    # integer coefficient dict plus a scale factor keeps everything exact
    assert h.scale == 2
    assert h.coefficients == {0: 1, 1: -1}
    assert is_finite_length_numerator(h, 1)


def test_is_finite_length_numerator_negative_case():
    # (1 - t) is divisible by (1 - t) once, not twice
    h = HilbertNumerator({0: 1, 1: -1})
    assert is_finite_length_numerator(h, 1)
    assert not is_finite_length_numerator(h, 2)


def test_finite_length_numerator_zero_is_divisible():
    assert is_finite_length_numerator(HilbertNumerator({}), 4)


def test_normalize_positive_integers():
    values = [Fraction(4, 3), Fraction(2, 3), Fraction(2, 1)]
    assert normalize_positive_integers(values) == (2, 1, 3)
    assert normalize_positive_integers([Fraction(6), Fraction(10)]) == (3, 5)


def test_proportionality_ratio():
    base = hk_pure_table([0, 3, 5, 6]).to_graded()
    assert proportionality_ratio(base.scaled(4), base) == 4
    assert proportionality_ratio(base, base.scaled(4)) == Fraction(1, 4)
    other = hk_pure_table([0, 1, 3, 5]).to_graded()
    assert proportionality_ratio(base, other) is None


def test_coarsen_bigraded_to_graded():
    square = monomial_quotient(
        MonomialPair([(0, 0)], [(2, 0), (1, 1), (0, 2)]))
    fine = bigraded_betti(square)
    coarse = coarsen(fine)
    assert coarse.nvars == 2
    assert dict(coarse.entries) == {(0, 0): 1, (1, 2): 3, (2, 3): 2}


def test_coarsen_of_staircase_pair_is_not_pure():
    from betticone import is_pure
    pair = MonomialPair(
        [(4, 0), (2, 1), (1, 2), (0, 4)],
        [(6, 0), (3, 3), (0, 6)],
    )
    coarse = coarsen(bigraded_betti(monomial_quotient(pair)))
    assert is_pure(coarse) is None


def test_graded_json_round_trip():
    t = hk_pure_table([0, 1, 3, 5]).to_graded()
    obj = graded_to_json_obj(t)
    assert obj["kind"] == "graded"
    assert graded_from_json_obj(obj) == t


def test_graded_json_sums_duplicate_keys():
    obj = {
        "kind": "graded",
        "nvars": 2,
        "entries": [
            {"i": 0, "j": 0, "b": "1"},
            {"i": 0, "j": 0, "b": "2"},
        ],
    }
    assert graded_from_json_obj(obj).entry(0, 0) == 3


def test_pure_json_round_trip():
    p = hk_pure_table([0, 1, 3, 5])
    obj = pure_to_json_obj(p)
    assert pure_from_json_obj(obj) == p


def test_pure_to_graded_rejects_short_nvars():
    p = hk_pure_table([0, 1, 3, 5])
    with pytest.raises(ValueError):
        p.to_graded(nvars=1)


def _random_positive_combination(rng):
    n = rng.randint(1, 4)
    table = None
    for _ in range(rng.randint(1, 3)):
        degs = sorted(rng.sample(range(0, 10), n + 1))
        part = hk_pure_table(degs).to_graded(nvars=n).scaled(
            rng.randint(1, 5))
        table = part if table is None else table.add(part)
    return table


def test_hk_equations_iff_numerator_divisible():
    """The linear equations and the (1-t)^n divisibility test agree.

    Positive combinations of same-length pure tables satisfy both;
    random perturbations of one entry break both together.
    """
    rng = random.Random(20260816)
    for _ in range(200):
        t = _random_positive_combination(rng)
        assert check_hk_equations(t)
        assert is_finite_length_numerator(hilbert_numerator(t), t.nvars)
        entries = dict(t.entries)
        (i, j), b = next(iter(entries.items()))
        entries[(i, j)] = b + 1
        broken = GradedBettiTable(t.nvars, entries)
        eq = check_hk_equations(broken)
        div = is_finite_length_numerator(hilbert_numerator(broken),
                                         broken.nvars)
        assert eq == div
