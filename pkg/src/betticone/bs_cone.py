"""Greedy decomposition of a finite length Betti table into pure tables.

The cone of finite length Betti tables is generated by pure tables, and
the classical elimination order works from the bottom strand: read off
the minimal internal degree in each column, subtract the largest
allowed multiple of the corresponding pure table, repeat.  Each step
zeroes at least one entry, so the loop runs at most once per nonzero
entry.  When the minimal degrees stop forming a strictly increasing
chain the loop is stuck; that is reported as a greedy failure with full
diagnostics, never as a certificate of non-membership.
"""

from fractions import Fraction

from .errors import NotInConeCandidate
from .tables import (DegreeSequence, GradedBettiTable, check_hk_equations,
                     hk_pure_table)


class Decomposition:
    """Ordered parts (coefficient, pure table) plus a residual table.

    The defining identity sum(c * pure) + residual == input holds
    exactly; the residual is empty precisely on success.
    """

    __slots__ = ("parts", "residual")

    def __init__(self, parts, residual):
        self.parts = tuple(parts)
        self.residual = residual
        for c, _ in self.parts:
            if c <= 0:
                raise ValueError("part coefficients must be positive")

    def is_complete(self):
        return self.residual.is_empty()

    def resum(self):
        total = GradedBettiTable(self.residual.nvars, self.residual.entries)
        for c, pure in self.parts:
            total = total.add(pure.to_graded(self.residual.nvars).scaled(c))
        return total

    def __repr__(self):
        inner = " + ".join(f"{c}*{p!r}" for c, p in self.parts)
        return f"Decomposition({inner or '0'}, residual={self.residual!r})"


def is_pure(t):
    """Degree sequence of a pure table, or None.

    Pure means: homological degrees run contiguously from 0, each
    carries exactly one internal degree, and those degrees strictly
    increase.
    """
    if t.is_empty():
        return None
    columns = {}
    for (i, j), _ in t.entries.items():
        columns.setdefault(i, []).append(j)
    pd = max(columns)
    if set(columns) != set(range(pd + 1)):
        return None
    degrees = []
    for i in range(pd + 1):
        if len(columns[i]) != 1:
            return None
        degrees.append(columns[i][0])
    if any(a >= b for a, b in zip(degrees, degrees[1:])):
        return None
    return DegreeSequence(degrees)


def decompose_graded(t):
    """Greedy bottom-strand decomposition into pure tables.

    Returns a complete Decomposition on success.  Raises
    NotInConeCandidate (carrying the partial decomposition) when the
    input fails a precondition or the greedy chain gets stuck with a
    nonzero residual.
    """
    def stuck(msg, parts, residual_entries):
        residual = GradedBettiTable(t.nvars, residual_entries)
        raise NotInConeCandidate(msg, Decomposition(parts, residual))

    if not check_hk_equations(t):
        stuck("table fails the Herzog-Kuhl equations; "
              "not a finite length candidate", [], t.entries)

    work = dict(t.entries)
    parts = []
    while work:
        pd = max(i for i, _ in work)
        if pd != t.nvars:
            stuck(f"projective dimension {pd} != nvars {t.nvars}; "
                  "greedy chain stuck", parts, work)
        degrees = []
        for i in range(pd + 1):
            js = [j for (k, j) in work if k == i]
            if not js:
                stuck(f"no entry left in column {i}; greedy chain stuck",
                      parts, work)
            degrees.append(min(js))
        if any(a >= b for a, b in zip(degrees, degrees[1:])):
            stuck(f"minimal degrees {degrees} are not strictly "
                  "increasing; greedy chain stuck", parts, work)
        pure = hk_pure_table(degrees)
        c = min(work[(i, d)] / b
                for i, (d, b) in enumerate(zip(degrees,
                                               pure.multiplicities)))
        for i, (d, b) in enumerate(zip(degrees, pure.multiplicities)):
            remaining = work[(i, d)] - c * b
            if remaining:
                work[(i, d)] = remaining
            else:
                del work[(i, d)]
        parts.append((Fraction(c), pure))
    return Decomposition(parts, GradedBettiTable(t.nvars, {}))
