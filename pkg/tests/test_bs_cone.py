"""Greedy decomposition of finite-length Betti tables into pure pieces.

The failure-path tests matter as much as the happy path here: a table
outside the cone must still hand back a conservation-respecting
partial decomposition on the exception.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from betticone import (
    DegreeSequence,
    GradedBettiTable,
    NotInConeCandidate,
    decompose_graded,
    hk_pure_table,
    is_pure,
)


def _table(degs, scale=1):
    return hk_pure_table(degs).to_graded().scaled(scale)


def test_is_pure_recovers_degrees():
    assert is_pure(_table([0, 1, 3, 5])) == DegreeSequence([0, 1, 3, 5])
    assert is_pure(_table([0, 2, 3], scale=7)) == DegreeSequence([0, 2, 3])


def test_is_pure_rejects_mixed_columns():
    t = GradedBettiTable(2, {(0, 0): 1, (1, 1): 1, (1, 2): 1, (2, 3): 1})
    assert is_pure(t) is None


def test_is_pure_rejects_column_gaps():
    # column 1 empty between occupied columns 0 and 2
    t = GradedBettiTable(2, {(0, 0): 1, (2, 3): 1})
    assert is_pure(t) is None


def test_is_pure_empty_table():
    assert is_pure(GradedBettiTable(2, {})) is None


def test_decompose_pure_table_is_single_part():
    d = decompose_graded(_table([0, 1, 3, 5], scale=3))
    assert len(d.parts) == 1
    coeff, part = d.parts[0]
    assert coeff == 3
    assert part.degrees == DegreeSequence([0, 1, 3, 5])
    assert d.residual.is_empty()
    assert d.is_complete()


def test_decompose_two_part_sum():
    total = _table([0, 1, 3, 5]).add(_table([0, 3, 5, 6]))
    d = decompose_graded(total)
    assert [(c, tuple(p.degrees)) for c, p in d.parts] == [
        (1, (0, 1, 3, 5)),
        (1, (0, 3, 5, 6)),
    ]
    assert d.resum() == total


def test_decompose_greedy_picks_lowest_degrees_first():
    total = _table([0, 2, 3]).add(_table([0, 1, 5]).scaled(2))
    d = decompose_graded(total)
    first = tuple(d.parts[0][1].degrees)
    # the first part reads the minimal occupied degree in each column
    assert first == (0, 1, 3)
    assert d.resum() == total
    assert d.is_complete()


def test_decompose_fractional_coefficients():
    total = _table([0, 1, 2]).scaled(Fraction(1, 2)).add(
        _table([0, 1, 3]).scaled(Fraction(1, 3)))
    d = decompose_graded(total)
    assert d.is_complete()
    assert d.resum() == total
    assert all(c > 0 for c, _ in d.parts)


def test_decompose_rejects_non_hk_table():
    t = GradedBettiTable(2, {(0, 0): 1, (1, 1): 1})
    with pytest.raises(NotInConeCandidate) as exc:
        decompose_graded(t)
    assert "Herzog-Kuhl" in str(exc.value)
    assert exc.value.decomposition is not None


def test_decompose_failure_preserves_conservation():
    # moving mass within a homological column keeps column sums but
    # breaks the degree-weighted equations, so the screen fires with
    # an empty partial decomposition that still resums to the input
    big = _table([0, 1, 2], scale=5)
    entries = dict(big.entries)
    entries[(1, 1)] -= 4
    entries[(1, 3)] = entries.get((1, 3), 0) + 4
    t = GradedBettiTable(2, entries)
    with pytest.raises(NotInConeCandidate) as exc:
        decompose_graded(t)
    d = exc.value.decomposition
    assert not d.is_complete()
    assert d.parts == ()
    assert d.resum() == t


def test_decompose_stalls_mid_greedy_with_partial_parts():
    # solves both length equations yet sits outside the cone: after
    # one greedy extraction column 0 empties while columns 1 and 2 do
    # not, and the exception carries the partial work
    t = GradedBettiTable(2, {(0, 0): 1, (1, 1): 3, (1, 3): 1, (2, 2): 3})
    from betticone import check_hk_equations
    assert check_hk_equations(t)
    with pytest.raises(NotInConeCandidate, match="greedy chain stuck"):
        decompose_graded(t)
    try:
        decompose_graded(t)
    except NotInConeCandidate as exc:
        d = exc.decomposition
    assert [(c, tuple(p.degrees)) for c, p in d.parts] == [(1, (0, 1, 2))]
    assert dict(d.residual.entries) == {(1, 1): 1, (1, 3): 1, (2, 2): 2}
    assert d.resum() == t


def test_decompose_empty_table():
    d = decompose_graded(GradedBettiTable(3, {}))
    assert d.parts == ()
    assert d.residual.is_empty()
    assert d.is_complete()


def test_decomposition_resum_includes_residual():
    t = GradedBettiTable(2, {(0, 0): 2, (1, 1): 3, (2, 2): 1})
    try:
        d = decompose_graded(t)
    except NotInConeCandidate as exc:
        d = exc.decomposition
    assert d.resum() == t


def test_random_combinations_decompose_exactly():
    rng = random.Random(997)
    for _ in range(60):
        n = rng.randint(1, 4)
        total = None
        npieces = rng.randint(1, 3)
        for _ in range(npieces):
            degs = sorted(rng.sample(range(0, 9), n + 1))
            piece = hk_pure_table(degs).to_graded(nvars=n).scaled(
                Fraction(rng.randint(1, 6), rng.randint(1, 3)))
            total = piece if total is None else total.add(piece)
        d = decompose_graded(total)
        assert d.is_complete()
        assert d.resum() == total
        # greedy merges same-degree picks, so at most npieces parts
        # cannot be asserted; termination bound is entry count
        assert len(d.parts) <= len(total.entries)
