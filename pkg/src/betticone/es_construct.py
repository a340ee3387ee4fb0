"""Rank bookkeeping for pure resolutions built by pushing forward a
twisted Koszul complex along a product of projective spaces.

A strictly increasing degree sequence d_0 = 0 < d_1 < ... < d_n with
gaps m_i = d_i - d_{i-1} - 1 determines a product P^{m_1} x ... x P^{m_n}
(factors with m_i = 0 are points and are dropped).  The Koszul complex
on d_n variables, with factor i twisted by +d_{i-1}, collapses to a
pure complex: row t of the twist table survives exactly when every
factor twist d_{i-1} - t has cohomology, which happens for t in
{d_0, ..., d_n}.  The surviving rank is a binomial times a product of
line bundle cohomology dimensions; no differentials are computed here,
only twists, survivors, and ranks.
"""

from math import comb

from .errors import (CollapsedSurvivor, InternalInconsistency,
                     NoCollapsibleWindow)
from .tables import DegreeSequence, PureTable, as_degree_sequence


def line_bundle_cohomology(m, e):
    """Dimensions (h0, h_top) of O(e) on projective m-space.

    h0 = C(e+m, m) for e >= 0, the top cohomology is C(-e-1, m) for
    e <= -m-1, and everything vanishes for -m <= e <= -1.  On a point
    (m = 0) the answer is reported as (1, 0) so that callers never
    count the same line twice.
    """
    m = int(m)
    e = int(e)
    if m < 0:
        raise ValueError("projective space dimension must be >= 0")
    if m == 0:
        return (1, 0)
    if e >= 0:
        return (comb(e + m, m), 0)
    if e <= -m - 1:
        return (0, comb(-e - 1, m))
    return (0, 0)


class ESPlan:
    """Degree plan: gaps, projective factors with their twists, and the
    ambient variable count d_n."""

    __slots__ = ("degrees", "gaps", "factors", "ambient_vars",
                 "ambient_dim_check")

    def __init__(self, degrees, gaps, factors, ambient_vars):
        self.degrees = degrees
        self.gaps = tuple(gaps)
        self.factors = tuple(factors)
        self.ambient_vars = ambient_vars
        self.ambient_dim_check = ambient_vars - degrees.n
        assert sum(self.gaps) == self.ambient_dim_check, \
            "gap vector does not match ambient dimension"

    def __repr__(self):
        return (f"ESPlan(degrees={list(self.degrees)}, gaps={self.gaps}, "
                f"factors={self.factors}, ambient_vars={self.ambient_vars})")


class TwistRow:
    """One Koszul index t: ambient degree -t, per-factor twists, and
    whether the row survives the pushforward."""

    __slots__ = ("t", "ambient_degree", "twists", "survivor")

    def __init__(self, t, ambient_degree, twists, survivor):
        self.t = t
        self.ambient_degree = ambient_degree
        self.twists = tuple(twists)
        self.survivor = survivor

    def __repr__(self):
        star = "" if self.survivor else "*"
        return f"TwistRow(t={self.t}{star}, twists={self.twists})"


class TwistTable:
    __slots__ = ("plan", "rows")

    def __init__(self, plan, rows):
        self.plan = plan
        self.rows = tuple(rows)

    def survivors(self):
        return [row for row in self.rows if row.survivor]


def es_plan(d):
    """Build the degree plan for a strictly increasing sequence.

    Sequences with d_0 != 0 are first translated so d_0 = 0 (a global
    twist of the resolution that changes no rank).
    """
    d = as_degree_sequence(d)
    if d[0] != 0:
        d = d.translate(-d[0])
    degs = d.degrees
    gaps = tuple(degs[i] - degs[i - 1] - 1 for i in range(1, len(degs)))
    factors = tuple((m, degs[i]) for i, m in enumerate(gaps) if m > 0)
    return ESPlan(d, gaps, factors, degs[-1])


def twist_table(p):
    """All Koszul rows t = 0..d_n with their factor twists.

    Survivors are the rows with t in the degree sequence.  Every other
    row must be certified by a factor whose twist falls in the
    cohomology-free window [-m_i, -1]; a collapsed row without such a
    factor indicates a malformed plan and raises.
    """
    deg_set = set(p.degrees)
    rows = []
    for t in range(p.ambient_vars + 1):
        twists = tuple(base - t for _, base in p.factors)
        survivor = t in deg_set
        if not survivor:
            vanishing = any(-m <= e <= -1
                            for (m, _), e in zip(p.factors, twists))
            if not vanishing:
                raise InternalInconsistency(
                    f"row t={t} is not a survivor yet no factor twist "
                    f"vanishes: twists={twists}")
        rows.append(TwistRow(t, -t, twists, survivor))
    return TwistTable(p, rows)


def es_ranks(p):
    """Raw construction ranks of the pure resolution for plan p.

    beta_k = C(d_n, d_k) * prod_i h(P^{m_i}, O(d_{i-1} - d_k)) where h
    is the section count for nonnegative twist and the top cohomology
    for twist <= -m_i - 1.  Ranks are returned unnormalized so they can
    be compared directly against a construction's printed values;
    divide by the gcd to reach the minimal Herzog-Kuhl representative.
    """
    degs = p.degrees.degrees
    mults = []
    for k, dk in enumerate(degs):
        rank = comb(p.ambient_vars, dk)
        for m, base in p.factors:
            e = base - dk
            h0, htop = line_bundle_cohomology(m, e)
            if e >= 0:
                rank *= h0
            elif e <= -m - 1:
                rank *= htop
            else:
                raise CollapsedSurvivor(
                    f"survivor row d_{k}={dk} hits the vanishing window "
                    f"of a P^{m} factor (twist {e})")
        mults.append(rank)
    return PureTable(p.degrees, mults)


def collapse_step(twists, m, k):
    """Survivor map for one pushforward along a P^m factor.

    The strictly increasing twist list (e_0, ..., e_N) must contain the
    run (1, ..., m) at positions k+1..k+m.  Indices i <= k survive with
    their sections (label 'H0') and keep their position; indices
    i >= k+m+1 survive with top cohomology (label 'H{m}') and slide
    down to position i - m.  Returns a list of (old index, new index,
    label) triples.
    """
    e = tuple(twists)
    if any(a >= b for a, b in zip(e, e[1:])):
        raise ValueError("twists must be strictly increasing")
    m = int(m)
    k = int(k)
    n_last = len(e) - 1
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not -1 <= k <= n_last - m:
        raise ValueError(f"k={k} out of range for m={m}, N={n_last}")
    window = e[k + 1:k + 1 + m]
    if window != tuple(range(1, m + 1)):
        raise NoCollapsibleWindow(
            f"positions {k+1}..{k+m} hold {window}, expected "
            f"{tuple(range(1, m + 1))}")
    survivors = []
    for i in range(0, k + 1):
        survivors.append((i, i, "H0"))
    for i in range(k + m + 1, n_last + 1):
        survivors.append((i, i - m, f"H{m}"))
    return survivors


def render_plan_text(p):
    """Aligned text table: one row per Koszul index, ambient degree,
    one column per projective factor (vanishing twists starred), and
    the homological position of each survivor."""
    table = twist_table(p)
    headers = ["t", "ambient"]
    headers += [f"P^{m}(+{base})" for m, base in p.factors]
    headers += [""]
    body = []
    position = {dk: idx for idx, dk in enumerate(p.degrees)}
    for row in table.rows:
        cells = [str(row.t), str(row.ambient_degree)]
        for (m, _), e in zip(p.factors, row.twists):
            star = "*" if -m <= e <= -1 else ""
            cells.append(f"{e}{star}")
        cells.append(f"F_{position[row.t]}" if row.survivor else "")
        body.append(cells)
    widths = [max(len(r[c]) for r in [headers] + body)
              for c in range(len(headers))]
    lines = []
    for cells in [headers] + body:
        lines.append("  ".join(c.rjust(w) for c, w in zip(cells, widths))
                     .rstrip())
    return "\n".join(lines)
