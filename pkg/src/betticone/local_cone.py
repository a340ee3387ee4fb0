"""The ungraded cone of Betti vectors over a regular local ring.

For finite length modules over an n-dimensional regular local ring the
cone of Betti vectors (beta_0, ..., beta_n) is the open positive span
of the rays rho_i = e_i + e_{i+1}, i = 0..n-1.  Membership is a pair of
exact conditions: the alternating sum vanishes (rank reasons), and all
back partial sums

    s_i = beta_i - beta_{i+1} + ... +- beta_n,   i = 1..n,

are strictly positive (partial Euler characteristics).  The s_i double
as the ray coefficients: v = sum c_i rho_i with c_i = s_{i+1}.  The
cone is open, so rays are approached but never reached; limit_table
builds the pure-table witnesses that converge to each ray.
"""

from fractions import Fraction

from .errors import DegenerateSequence, NonIncreasingDegrees, NotOnHyperplane
from .tables import hk_pure_table

INSIDE = "Inside"
BOUNDARY = "Boundary"
OUTSIDE = "Outside"


class LocalBettiVector:
    """Nonnegative rational vector (beta_0, ..., beta_n), n = dim R."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        vals = tuple(Fraction(v) for v in entries)
        if len(vals) < 2:
            raise ValueError("need at least beta_0 and beta_1 (dim >= 1)")
        if any(v < 0 for v in vals):
            raise ValueError("Betti numbers are nonnegative")
        self.entries = vals

    @property
    def n(self):
        return len(self.entries) - 1

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __eq__(self, other):
        if isinstance(other, LocalBettiVector):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"LocalBettiVector({[str(v) for v in self.entries]})"

    def add(self, other):
        if len(self) != len(other):
            return NotImplemented
        return LocalBettiVector(tuple(a + b for a, b
                                      in zip(self.entries, other.entries)))

    def scaled(self, c):
        c = Fraction(c)
        return LocalBettiVector(tuple(c * v for v in self.entries))


class LocalRay:
    """Index i standing for rho_i = e_i + e_{i+1} in dimension n."""

    __slots__ = ("index", "n")

    def __init__(self, index, n):
        if not 0 <= index <= n - 1:
            raise ValueError(f"ray index {index} outside 0..{n - 1}")
        self.index = index
        self.n = n

    def vector(self):
        v = [Fraction(0)] * (self.n + 1)
        v[self.index] = Fraction(1)
        v[self.index + 1] = Fraction(1)
        return LocalBettiVector(v)

    def __repr__(self):
        return f"LocalRay(rho_{self.index}, n={self.n})"


def ray_vector(index, n):
    return LocalRay(index, n).vector()


class LocalVerdict:
    """Membership verdict plus every sum the test computed."""

    __slots__ = ("verdict", "alternating_sum", "partial_sums")

    def __init__(self, verdict, alternating_sum, partial_sums):
        self.verdict = verdict
        self.alternating_sum = alternating_sum
        self.partial_sums = tuple(partial_sums)

    def is_inside(self):
        return self.verdict == INSIDE

    def __repr__(self):
        return (f"LocalVerdict({self.verdict}, total={self.alternating_sum},"
                f" partials={[str(s) for s in self.partial_sums]})")


def _back_partial_sums(v):
    """s_i = sum_{k=i}^{n} (-1)^(k-i) beta_k for i = n down to 0."""
    sums = []
    acc = Fraction(0)
    for beta in reversed(v.entries):
        acc = beta - acc
        sums.append(acc)
    sums.reverse()
    return sums  # sums[i] = s_i, including i = 0 (the alternating total)


def is_in_local_cone(v):
    """Classify v against the open cone.

    Inside: alternating sum zero and every back partial sum s_1..s_n
    strictly positive.  Boundary: on the hyperplane, all partial sums
    nonnegative, at least one zero.  Outside: off the hyperplane or
    some partial sum negative.
    """
    if not isinstance(v, LocalBettiVector):
        v = LocalBettiVector(v)
    sums = _back_partial_sums(v)
    total, partials = sums[0], sums[1:]
    if total != 0:
        verdict = OUTSIDE
    elif all(s > 0 for s in partials):
        verdict = INSIDE
    elif all(s >= 0 for s in partials):
        verdict = BOUNDARY
    else:
        verdict = OUTSIDE
    return LocalVerdict(verdict, total, partials)


def local_ray_coefficients(v):
    """The unique c_0..c_{n-1} with v = sum c_i rho_i.

    Only defined on the hyperplane where the alternating sum vanishes;
    there c_i = s_{i+1}, and all c_i > 0 exactly on cone members.
    """
    if not isinstance(v, LocalBettiVector):
        v = LocalBettiVector(v)
    sums = _back_partial_sums(v)
    if sums[0] != 0:
        raise NotOnHyperplane(
            f"alternating sum is {sums[0]}, not 0; the rays span only "
            "that hyperplane")
    return list(sums[1:])


def local_from_graded(t):
    """Column sums of a graded table: beta_i = sum_j beta_{i,j}."""
    vals = [Fraction(0)] * (t.nvars + 1)
    for (i, _), b in t.entries.items():
        vals[i] += b
    return LocalBettiVector(vals)


def limit_degrees(i, j, n):
    """The sequence d with d_k = k*j for k <= i, (k-1)*j + 1 for k > i."""
    i = int(i)
    j = int(j)
    n = int(n)
    if not 0 <= i <= n - 1:
        raise ValueError(f"ray index {i} outside 0..{n - 1}")
    if j < 2:
        raise DegenerateSequence("limit sequences need j >= 2")
    degs = [k * j if k <= i else (k - 1) * j + 1 for k in range(n + 1)]
    try:
        from .tables import DegreeSequence
        return DegreeSequence(degs)
    except NonIncreasingDegrees as exc:
        raise DegenerateSequence(str(exc)) from exc


def limit_table(i, j, n):
    """Normalized pure Betti vector converging to rho_i as j grows.

    The table of the limit sequence is rescaled so entry i equals 1;
    the sup-norm distance to rho_i decays like a constant over j.
    """
    d = limit_degrees(i, j, n)
    pure = hk_pure_table(d)
    scale = Fraction(1, pure.multiplicities[i])
    return LocalBettiVector(tuple(scale * b for b in pure.multiplicities))


def sup_distance(u, v):
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return max(abs(a - b) for a, b in zip(u, v))
