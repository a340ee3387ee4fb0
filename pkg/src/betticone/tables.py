"""Graded Betti tables and the Herzog-Kuhl machinery.

The central objects are sparse tables beta_{i,j} indexed by homological
degree i and internal degree j.  A finite length module over a
polynomial ring in n variables satisfies the Herzog-Kuhl equations

    sum_{i,j} (-1)^i j^k beta_{i,j} = 0   for k = 0, ..., n-1,

and a pure table (one internal degree per column) solving them is
determined up to scalar; the minimal integral solution is

    b_i  proportional to  1 / prod_{l != i} |d_i - d_l|.

This module also carries the numerator of the Hilbert series, whose
divisibility by (1-t)^n is the same finite length condition in
generating function form.
"""

from fractions import Fraction
from math import gcd, lcm, prod

from .errors import NonIncreasingDegrees


class DegreeSequence:
    """Strictly increasing integers d_0 < d_1 < ... < d_n."""

    __slots__ = ("degrees",)

    def __init__(self, degrees):
        degs = tuple(degrees)
        if not degs:
            raise NonIncreasingDegrees("degree sequence must be nonempty")
        for d in degs:
            if not isinstance(d, int):
                raise NonIncreasingDegrees("degrees must be integers")
        if any(a >= b for a, b in zip(degs, degs[1:])):
            raise NonIncreasingDegrees("degrees must be strictly increasing")
        self.degrees = degs

    @property
    def n(self):
        """Length minus one: the homological degree of the last column."""
        return len(self.degrees) - 1

    def translate(self, shift):
        return DegreeSequence(tuple(d + shift for d in self.degrees))

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, k):
        return self.degrees[k]

    def __eq__(self, other):
        if isinstance(other, DegreeSequence):
            return self.degrees == other.degrees
        return NotImplemented

    def __hash__(self):
        return hash(self.degrees)

    def __repr__(self):
        return f"DegreeSequence({list(self.degrees)!r})"


def as_degree_sequence(d):
    return d if isinstance(d, DegreeSequence) else DegreeSequence(d)


class GradedBettiTable:
    """Sparse map (i, j) -> positive rational over a ring in nvars variables.

    Zero values are dropped on construction, so membership in .entries
    means a strictly positive entry.  Instances are treated as
    immutable: all operations return new tables.
    """

    __slots__ = ("nvars", "entries")

    def __init__(self, nvars, entries):
        nvars = int(nvars)
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        for (i, j), b in dict(entries).items():
            b = Fraction(b)
            if b == 0:
                continue
            if b < 0:
                raise ValueError(f"negative Betti entry at ({i},{j})")
            i = int(i)
            j = int(j)
            if not 0 <= i <= nvars:
                raise ValueError(
                    f"homological degree {i} outside 0..{nvars}")
            clean[(i, j)] = b
        self.nvars = nvars
        self.entries = clean

    def entry(self, i, j):
        return self.entries.get((i, j), Fraction(0))

    def is_empty(self):
        return not self.entries

    def projective_dimension(self):
        """Largest homological degree with a nonzero entry, or None."""
        return max((i for i, _ in self.entries), default=None)

    def column(self, i):
        """Map j -> beta_{i,j} for one homological degree."""
        return {j: b for (k, j), b in self.entries.items() if k == i}

    def add(self, other):
        if self.nvars != other.nvars:
            raise ValueError("cannot add tables over different nvars")
        merged = dict(self.entries)
        for key, b in other.entries.items():
            merged[key] = merged.get(key, Fraction(0)) + b
        return GradedBettiTable(self.nvars, merged)

    def scaled(self, c):
        c = Fraction(c)
        return GradedBettiTable(
            self.nvars, {key: c * b for key, b in self.entries.items()})

    def __eq__(self, other):
        if isinstance(other, GradedBettiTable):
            return self.nvars == other.nvars and self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.entries.items())))

    def __repr__(self):
        body = ", ".join(f"({i},{j}):{b}" for (i, j), b
                         in sorted(self.entries.items()))
        return f"GradedBettiTable(nvars={self.nvars}, {{{body}}})"


class PureTable:
    """Degree sequence plus positive integer multiplicities.

    hk_pure_table produces the gcd-normalized representative; raw
    construction ranks (not normalized) are also stored in this type.
    """

    __slots__ = ("degrees", "multiplicities")

    def __init__(self, degrees, multiplicities):
        self.degrees = as_degree_sequence(degrees)
        mult = tuple(multiplicities)
        if len(mult) != len(self.degrees):
            raise ValueError("one multiplicity per degree required")
        for b in mult:
            if not isinstance(b, int) or b <= 0:
                raise ValueError("multiplicities must be positive integers")
        self.multiplicities = mult

    def to_graded(self, nvars=None):
        if nvars is None:
            nvars = self.degrees.n
        return GradedBettiTable(
            nvars,
            {(i, d): Fraction(b)
             for i, (d, b) in enumerate(zip(self.degrees,
                                            self.multiplicities))})

    def __eq__(self, other):
        if isinstance(other, PureTable):
            return (self.degrees == other.degrees
                    and self.multiplicities == other.multiplicities)
        return NotImplemented

    def __hash__(self):
        return hash((self.degrees, self.multiplicities))

    def __repr__(self):
        return (f"PureTable({list(self.degrees.degrees)!r}, "
                f"{list(self.multiplicities)!r})")


class HilbertNumerator:
    """Integer Laurent polynomial sum_j c_j t^j with a positive scale.

    The rational numerator of a table is coefficients/scale; the pair
    is kept in lowest terms (gcd of all coefficients and the scale is
    divided out), so equal numerators compare equal as plain data.
    """

    __slots__ = ("coefficients", "scale")

    def __init__(self, coefficients, scale=1):
        scale = int(scale)
        if scale <= 0:
            raise ValueError("scale must be a positive integer")
        clean = {int(j): int(c) for j, c in dict(coefficients).items()
                 if int(c) != 0}
        g = gcd(scale, *map(abs, clean.values())) if clean else scale
        self.coefficients = {j: c // g for j, c in clean.items()}
        self.scale = scale // g

    def is_zero(self):
        return not self.coefficients

    def coefficient(self, j):
        """Exact rational coefficient of t^j."""
        return Fraction(self.coefficients.get(j, 0), self.scale)

    def add(self, other):
        m = lcm(self.scale, other.scale)
        a, b = m // self.scale, m // other.scale
        merged = {j: a * c for j, c in self.coefficients.items()}
        for j, c in other.coefficients.items():
            merged[j] = merged.get(j, 0) + b * c
        return HilbertNumerator(merged, m)

    def __eq__(self, other):
        if isinstance(other, HilbertNumerator):
            return (self.scale == other.scale
                    and self.coefficients == other.coefficients)
        return NotImplemented

    def __hash__(self):
        return hash((self.scale, frozenset(self.coefficients.items())))

    def __repr__(self):
        terms = " + ".join(f"{c}*t^{j}" for j, c
                           in sorted(self.coefficients.items()))
        suffix = f" / {self.scale}" if self.scale != 1 else ""
        return f"HilbertNumerator({terms or '0'}{suffix})"


def normalize_positive_integers(values):
    """Scale a positive rational vector to coprime positive integers.

    >>> normalize_positive_integers([Fraction(1, 90), Fraction(1, 18),
    ...                              Fraction(1, 10), Fraction(1, 18)])
    (1, 5, 9, 5)
    """
    fracs = [Fraction(v) for v in values]
    if any(v <= 0 for v in fracs):
        raise ValueError("expected strictly positive values")
    m = lcm(*(v.denominator for v in fracs))
    ints = [int(v * m) for v in fracs]
    g = gcd(*ints)
    return tuple(v // g for v in ints)


def hk_pure_table(d):
    """Minimal positive integral solution of the Herzog-Kuhl system.

    >>> hk_pure_table([0, 1, 3, 5]).multiplicities
    (8, 15, 10, 3)
    >>> hk_pure_table([0, 1, 2]).multiplicities
    (1, 2, 1)
    """
    d = as_degree_sequence(d)
    if len(d) == 1:
        return PureTable(d, (1,))
    vals = [Fraction(1, prod(abs(di - dl) for l, dl in enumerate(d)
                             if l != i))
            for i, di in enumerate(d)]
    return PureTable(d, normalize_positive_integers(vals))


def check_hk_equations(t):
    """True iff sum_{i,j} (-1)^i j^k beta_{i,j} = 0 for 0 <= k < nvars."""
    for k in range(t.nvars):
        total = Fraction(0)
        for (i, j), b in t.entries.items():
            term = b * j ** k
            total += -term if i % 2 else term
        if total != 0:
            return False
    return True


def hilbert_numerator(t):
    """Numerator sum_j (sum_i (-1)^i beta_{i,j}) t^j of the Hilbert series.

    Rational entries are cleared to a common denominator; the clearing
    factor is kept on the result as .scale.
    """
    raw = {}
    for (i, j), b in t.entries.items():
        raw[j] = raw.get(j, Fraction(0)) + (-b if i % 2 else b)
    raw = {j: c for j, c in raw.items() if c != 0}
    if not raw:
        return HilbertNumerator({}, 1)
    m = lcm(*(c.denominator for c in raw.values()))
    return HilbertNumerator({j: int(c * m) for j, c in raw.items()}, m)


def is_finite_length_numerator(h, nvars):
    """True iff (1-t)^nvars divides the numerator.

    Division happens over the integers by the running-sum rule: the
    quotient of p by (1-t) has q_j = sum_{k <= j} p_k, and the division
    is exact precisely when p(1) = 0.  Negative degrees are fine; t^m
    is a unit and does not affect divisibility by 1-t.
    """
    coeffs = dict(h.coefficients)
    for _ in range(int(nvars)):
        if not coeffs:
            return True
        if sum(coeffs.values()) != 0:
            return False
        lo, hi = min(coeffs), max(coeffs)
        quotient = {}
        running = 0
        for j in range(lo, hi):
            running += coeffs.get(j, 0)
            if running:
                quotient[j] = running
        coeffs = quotient
    return True


def coarsen(bt):
    """Collapse a bigraded table to the total grading j = a + b.

    Accepts any table whose .entries maps (i, (a, b)) to a count;
    returns a GradedBettiTable with nvars = 2.
    """
    merged = {}
    for (i, (a, b)), count in bt.entries.items():
        key = (i, a + b)
        merged[key] = merged.get(key, Fraction(0)) + count
    return GradedBettiTable(2, merged)


def proportionality_ratio(t1, t2):
    """Fraction c with t1 = c * t2, or None if no such c exists.

    Both tables empty counts as proportional with ratio 1.
    """
    if set(t1.entries) != set(t2.entries):
        return None
    if not t1.entries:
        return Fraction(1)
    key = next(iter(sorted(t1.entries)))
    ratio = t1.entries[key] / t2.entries[key]
    for k, b in t1.entries.items():
        if b != ratio * t2.entries[k]:
            return None
    return ratio


def graded_to_json_obj(t):
    return {
        "kind": "graded",
        "nvars": t.nvars,
        "entries": [{"i": i, "j": j, "b": str(b)}
                    for (i, j), b in sorted(t.entries.items())],
    }


def graded_from_json_obj(obj):
    if obj.get("kind") != "graded":
        raise ValueError("expected a graded table object")
    entries = {}
    for item in obj["entries"]:
        key = (int(item["i"]), int(item["j"]))
        entries[key] = entries.get(key, Fraction(0)) + Fraction(str(item["b"]))
    return GradedBettiTable(int(obj["nvars"]), entries)


def pure_to_json_obj(p):
    return {
        "kind": "pure",
        "degrees": list(p.degrees.degrees),
        "mult": list(p.multiplicities),
    }


def pure_from_json_obj(obj):
    if obj.get("kind") != "pure":
        raise ValueError("expected a pure table object")
    return PureTable(obj["degrees"], [int(b) for b in obj["mult"]])
