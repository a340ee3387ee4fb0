"""Finite length bigraded modules over T = k[x, y] presented
concretely, and a brute force Betti table oracle for them.

A module is stored one bidegree at a time: the dimension of each
graded piece together with the two multiplication maps as exact
rational matrices.  Betti numbers then come out of the Koszul complex

    M(-1,-1) --(y, -x)--> M(-1,0) + M(0,-1) --(x  y)--> M

restricted to a single bidegree, so no Groebner machinery is needed.
Everything runs over the prime field; the ranks involved are the same
for any field of characteristic zero.
"""

from fractions import Fraction

from ._linalg import (column_space_pivot_rows, nullspace_basis, rank,
                      reduce_against, transpose)
from .bigraded import BigradedBettiTable
from .errors import (KernelNotFinitelyResolvedInBox, NotContained,
                     NotFiniteLength, NotFiniteLengthWithinBox)

_X = (1, 0)
_Y = (0, 1)

_GROWTH_MARGINS = (2, 4, 8, 16, 32, 64)


def _shift(alpha, step):
    return (alpha[0] + step[0], alpha[1] + step[1])


def _compose(a, b, nrows, nmid, ncols):
    """Matrix product with explicit shapes so zero spaces behave."""
    if nrows == 0:
        return []
    if ncols == 0:
        return [[] for _ in range(nrows)]
    if nmid == 0:
        return [[Fraction(0)] * ncols for _ in range(nrows)]
    return [[sum((a[i][k] * b[k][j] for k in range(nmid)), Fraction(0))
             for j in range(ncols)] for i in range(nrows)]


class FiniteModule:
    """A finite length bigraded T-module given by components and maps.

    dims maps a bidegree to the dimension of that graded piece (zero
    pieces are dropped).  mult_x[alpha] is the matrix of multiplication
    by x from the piece at alpha to the piece at alpha + (1,0), columns
    indexed by the source; missing entries mean the zero map.  The
    constructor checks shapes and that the two multiplications commute.
    """

    __slots__ = ("dims", "mult_x", "mult_y")

    def __init__(self, dims, mult_x, mult_y):
        self.dims = {}
        for alpha, d in dict(dims).items():
            d = int(d)
            if d < 0:
                raise ValueError(f"negative dimension at {alpha}")
            if d:
                self.dims[(int(alpha[0]), int(alpha[1]))] = d
        self.mult_x = self._check_maps(mult_x, _X, "x")
        self.mult_y = self._check_maps(mult_y, _Y, "y")
        self._check_commuting()

    def _check_maps(self, maps, step, name):
        clean = {}
        for alpha, matrix in dict(maps).items():
            alpha = (int(alpha[0]), int(alpha[1]))
            src = self.dim(alpha)
            dst = self.dim(_shift(alpha, step))
            if src == 0 or dst == 0:
                continue
            matrix = [[Fraction(v) for v in row] for row in matrix]
            if len(matrix) != dst or any(len(r) != src for r in matrix):
                raise ValueError(
                    f"mult_{name} at {alpha} must be {dst} x {src}")
            clean[alpha] = matrix
        return clean

    def _check_commuting(self):
        for alpha in self.dims:
            top = _shift(alpha, (1, 1))
            if self.dim(top) == 0:
                continue
            d0 = self.dim(alpha)
            da = self.dim(_shift(alpha, _X))
            db = self.dim(_shift(alpha, _Y))
            via_x = _compose(self.map_y(_shift(alpha, _X)),
                             self.map_x(alpha), self.dim(top), da, d0)
            via_y = _compose(self.map_x(_shift(alpha, _Y)),
                             self.map_y(alpha), self.dim(top), db, d0)
            if via_x != via_y:
                raise ValueError(
                    f"multiplication maps do not commute at {alpha}")

    def dim(self, alpha):
        return self.dims.get(tuple(alpha), 0)

    def map_x(self, alpha):
        return self._materialize(self.mult_x, alpha, _X)

    def map_y(self, alpha):
        return self._materialize(self.mult_y, alpha, _Y)

    def _materialize(self, maps, alpha, step):
        alpha = tuple(alpha)
        if alpha in maps:
            return maps[alpha]
        dst = self.dim(_shift(alpha, step))
        src = self.dim(alpha)
        return [[Fraction(0)] * src for _ in range(dst)]

    def total_dim(self):
        return sum(self.dims.values())

    def support(self):
        return sorted(self.dims)

    def hull(self):
        """Smallest box ((alo, blo), (ahi, bhi)) containing the support."""
        if not self.dims:
            return ((0, 0), (0, 0))
        avals = [a for a, _ in self.dims]
        bvals = [b for _, b in self.dims]
        return ((min(avals), min(bvals)), (max(avals), max(bvals)))


class MonomialPair:
    """Monomial ideals J inside I of k[x, y], each by exponent pairs.

    Generating sets are reduced to the minimal ones (drop any exponent
    pair that is coordinatewise above another).  Containment J <= I is
    checked generator by generator.
    """

    __slots__ = ("gens_outer", "gens_inner")

    def __init__(self, gens_outer, gens_inner):
        self.gens_outer = _minimal_gens(gens_outer, "outer ideal")
        self.gens_inner = _minimal_gens(gens_inner, "inner ideal")
        for g in self.gens_inner:
            if not _divisible(g, self.gens_outer):
                raise NotContained(
                    f"inner generator {g} is not a multiple of any outer "
                    "generator")

    def __repr__(self):
        return (f"MonomialPair({list(self.gens_outer)}, "
                f"{list(self.gens_inner)})")


def _minimal_gens(gens, label):
    pts = sorted({(int(a), int(b)) for a, b in gens})
    if not pts:
        raise ValueError(f"{label} needs at least one generator")
    for a, b in pts:
        if a < 0 or b < 0:
            raise ValueError(f"{label} has a negative exponent ({a}, {b})")
    keep = []
    for p in pts:
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pts):
            keep.append(p)
    return tuple(keep)


def _divisible(point, gens):
    return any(g[0] <= point[0] and g[1] <= point[1] for g in gens)


def monomial_quotient(pair):
    """The module I/J of a monomial pair, as a FiniteModule.

    The graded pieces sit on the staircase region between the two
    ideals, every nonzero piece is one dimensional, and multiplication
    is the identity wherever source and target both lie in the region.
    Finite length fails exactly when the region escapes along a row or
    a column, which shows up on the guard row and column just past the
    generators; that is what gets checked.
    """
    go, gi = pair.gens_outer, pair.gens_inner
    amax = max(a for a, _ in go + gi) + 1
    bmax = max(b for _, b in go + gi) + 1
    region = set()
    for a in range(amax + 1):
        for b in range(bmax + 1):
            if _divisible((a, b), go) and not _divisible((a, b), gi):
                region.add((a, b))
    if any(a == amax or b == bmax for a, b in region):
        raise NotFiniteLength(
            f"quotient of {list(go)} by {list(gi)} has unbounded support")
    dims = {p: 1 for p in region}
    one = [[Fraction(1)]]
    mult_x = {p: one for p in region if _shift(p, _X) in region}
    mult_y = {p: one for p in region if _shift(p, _Y) in region}
    return FiniteModule(dims, mult_x, mult_y)


class PresentationMatrix:
    """A bigraded matrix between free modules F1 -> F0 over k[x, y].

    Row r carries the generator degree row_degrees[r] of F0, column c
    the degree col_degrees[c] of F1.  Bihomogeneity forces the (r, c)
    entry to be a scalar times the single monomial of exponent
    col - row, so each entry is given as a list of (coefficient,
    exponent pair) terms that must collapse to at most one term of
    exactly that exponent.
    """

    __slots__ = ("row_degrees", "col_degrees", "scalars")

    def __init__(self, rows, cols, entries):
        self.row_degrees = tuple((int(a), int(b)) for a, b in rows)
        self.col_degrees = tuple((int(a), int(b)) for a, b in cols)
        if len(entries) != len(self.row_degrees):
            raise ValueError("one entry row per row degree is required")
        scalars = []
        for r, row in enumerate(entries):
            if len(row) != len(self.col_degrees):
                raise ValueError(f"entry row {r} has the wrong length")
            out = []
            for c, terms in enumerate(row):
                merged = {}
                for coeff, expo in terms:
                    expo = (int(expo[0]), int(expo[1]))
                    merged[expo] = merged.get(expo, Fraction(0)) \
                        + Fraction(coeff)
                merged = {e: v for e, v in merged.items() if v != 0}
                forced = (self.col_degrees[c][0] - self.row_degrees[r][0],
                          self.col_degrees[c][1] - self.row_degrees[r][1])
                if not merged:
                    out.append(Fraction(0))
                    continue
                if list(merged) != [forced] or min(forced) < 0:
                    raise ValueError(
                        f"entry ({r}, {c}) must be a scalar multiple of "
                        f"the monomial with exponent {forced}")
                out.append(merged[forced])
            scalars.append(out)
        self.scalars = scalars

    def entry_exponent(self, r, c):
        return (self.col_degrees[c][0] - self.row_degrees[r][0],
                self.col_degrees[c][1] - self.row_degrees[r][1])

    def matrix_at(self, alpha):
        """The map F1 -> F0 in bidegree alpha, with the row and column
        index lists that survived the degree truncation."""
        rows = [r for r, d in enumerate(self.row_degrees)
                if d[0] <= alpha[0] and d[1] <= alpha[1]]
        cols = [c for c, d in enumerate(self.col_degrees)
                if d[0] <= alpha[0] and d[1] <= alpha[1]]
        matrix = [[self.scalars[r][c] for c in cols] for r in rows]
        return rows, cols, matrix


def generic_rank(pm):
    """Rank of the presentation matrix over the fraction field.

    Any minor is a polynomial of degree at most sa in x and sb in y,
    where sa and sb bound the sum of entry exponents along a product,
    so scanning a (sa + 1) by (sb + 1) grid of evaluation points must
    hit a point where some maximal nonzero minor survives.
    """
    nrows = len(pm.row_degrees)
    ncols = len(pm.col_degrees)
    size = min(nrows, ncols)
    if size == 0:
        return 0
    expa = [pm.entry_exponent(r, c)[0]
            for r in range(nrows) for c in range(ncols)
            if pm.scalars[r][c] != 0]
    if not expa:
        return 0
    expb = [pm.entry_exponent(r, c)[1]
            for r in range(nrows) for c in range(ncols)
            if pm.scalars[r][c] != 0]
    sa = size * max(expa)
    sb = size * max(expb)
    best = 0
    for px in range(1, sa + 2):
        for py in range(1, sb + 2):
            m = [[pm.scalars[r][c]
                  * Fraction(px) ** pm.entry_exponent(r, c)[0]
                  * Fraction(py) ** pm.entry_exponent(r, c)[1]
                  if pm.scalars[r][c] != 0 else Fraction(0)
                  for c in range(ncols)] for r in range(nrows)]
            best = max(best, rank(m))
            if best == size:
                return best
    return best


def coker_presentation(pm, box=None):
    """Cokernel of a presentation matrix as a FiniteModule.

    In each bidegree the free pieces are spanned by one monomial per
    surviving row or column, the matrix of the map is just the scalar
    grid restricted to those indices, and the cokernel basis is the set
    of rows missed by the column space pivots.  The result must vanish
    on the two outermost layers of the scan box; with the default box
    the scan grows until it does, an explicit box that fails raises
    NotFiniteLengthWithinBox.
    """
    if not pm.row_degrees:
        return FiniteModule({}, {}, {})
    lo = (min(a for a, _ in pm.row_degrees),
          min(b for _, b in pm.row_degrees))
    degs = pm.row_degrees + pm.col_degrees
    base = (max(a for a, _ in degs), max(b for _, b in degs))
    if box is not None:
        corners = [(int(box[0]), int(box[1]))]
    else:
        corners = [(base[0] + m, base[1] + m) for m in _GROWTH_MARGINS]
    last_error = None
    for corner in corners:
        result = _coker_scan(pm, lo, corner)
        if result is not None:
            return result
        last_error = NotFiniteLengthWithinBox(
            f"cokernel does not vanish on the boundary of "
            f"[{lo}, {corner}]")
    raise last_error


def _coker_scan(pm, lo, corner):
    if corner[0] < lo[0] or corner[1] < lo[1]:
        return None
    local = {}
    for a in range(lo[0], corner[0] + 1):
        for b in range(lo[1], corner[1] + 1):
            alpha = (a, b)
            rows, cols, matrix = pm.matrix_at(alpha)
            basis, pivots = column_space_pivot_rows(matrix)
            free = [k for k in range(len(rows)) if k not in set(pivots)]
            local[alpha] = (rows, free, basis, pivots)
            if free and (a >= corner[0] - 1 or b >= corner[1] - 1):
                return None
    dims = {alpha: len(free) for alpha, (_, free, _, _) in local.items()
            if free}
    mult_x = {}
    mult_y = {}
    for alpha, (rows, free, _, _) in local.items():
        if not free:
            continue
        for step, store in ((_X, mult_x), (_Y, mult_y)):
            target = _shift(alpha, step)
            if target not in local or not local[target][1]:
                continue
            t_rows, t_free, t_basis, t_pivots = local[target]
            pos = {rid: k for k, rid in enumerate(t_rows)}
            columns = []
            for rid_local in free:
                rid = rows[rid_local]
                vec = [Fraction(0)] * len(t_rows)
                vec[pos[rid]] = Fraction(1)
                vec = reduce_against(vec, t_basis, t_pivots)
                columns.append([vec[k] for k in t_free])
            store[alpha] = [[columns[j][i] for j in range(len(free))]
                            for i in range(len(t_free))]
    return FiniteModule(dims, mult_x, mult_y)


def bigraded_betti(mod):
    """Betti table of a finite module from Koszul homology.

    In bidegree alpha the complex is
        M(a-1, b-1) -> M(a-1, b) + M(a, b-1) -> M(a, b)
    with maps (y, -x) and (x, y); the three Betti numbers there are the
    dimensions of its homology, which elementary rank counting turns
    into the formulas below.
    """
    if not mod.dims:
        return BigradedBettiTable({})
    (alo, blo), (ahi, bhi) = mod.hull()
    entries = {}
    for a in range(alo, ahi + 2):
        for b in range(blo, bhi + 2):
            alpha = (a, b)
            corner = (a - 1, b - 1)
            left = (a - 1, b)
            below = (a, b - 1)
            d_corner = mod.dim(corner)
            d_left = mod.dim(left)
            d_below = mod.dim(below)
            d_here = mod.dim(alpha)
            r2 = 0
            if d_corner and (d_left or d_below):
                block = [row[:] for row in mod.map_y(corner)]
                block += [[-v for v in row] for row in mod.map_x(corner)]
                r2 = rank(block)
            r1 = 0
            if d_here and (d_left or d_below):
                mx = mod.map_x(left)
                my = mod.map_y(below)
                block = [mx[i] + my[i] for i in range(d_here)]
                r1 = rank(block)
            b2 = d_corner - r2
            b1 = d_left + d_below - r1 - r2
            b0 = d_here - r1
            if b1 < 0:
                raise AssertionError(f"negative middle homology at {alpha}")
            for i, value in ((0, b0), (1, b1), (2, b2)):
                if value:
                    entries[(i, alpha)] = value
    return BigradedBettiTable(entries)


def kernel_generator_degrees(pm, box=None):
    """Degrees (with multiplicity) of minimal kernel generators.

    The kernel of a map of free modules over k[x, y] is itself free,
    of rank (columns - generic rank), so the scan is complete exactly
    when the generators found add up to that rank.  With the default
    box the scan widens until they do; an explicit box that comes up
    short raises KernelNotFinitelyResolvedInBox.
    """
    ncols = len(pm.col_degrees)
    if ncols == 0:
        return []
    expected = ncols - generic_rank(pm)
    if expected == 0:
        return []
    lo = (min(a for a, _ in pm.col_degrees),
          min(b for _, b in pm.col_degrees))
    base = (max(a for a, _ in pm.col_degrees),
            max(b for _, b in pm.col_degrees))
    if box is not None:
        corners = [(int(box[0]), int(box[1]))]
    else:
        corners = [(base[0] + m, base[1] + m) for m in _GROWTH_MARGINS]
    found = {}
    for corner in corners:
        found = _kernel_scan(pm, lo, corner)
        if sum(found.values()) == expected:
            return [(alpha, found[alpha]) for alpha in sorted(found)]
    raise KernelNotFinitelyResolvedInBox(
        f"found {sum(found.values())} of {expected} kernel generators "
        f"inside the scan box; enlarge the box")


def _kernel_scan(pm, lo, corner):
    cache = {}

    def kernel_at(alpha):
        if alpha not in cache:
            _, cols, matrix = pm.matrix_at(alpha)
            cache[alpha] = (cols, nullspace_basis(matrix, ncols=len(cols)))
        return cache[alpha]

    gens = {}
    for a in range(lo[0], corner[0] + 1):
        for b in range(lo[1], corner[1] + 1):
            alpha = (a, b)
            cols, basis = kernel_at(alpha)
            if not basis:
                continue
            pos = {c: k for k, c in enumerate(cols)}
            span = []
            for prev in ((a - 1, b), (a, b - 1)):
                pcols, pbasis = kernel_at(prev)
                for v in pbasis:
                    w = [Fraction(0)] * len(cols)
                    for k, c in enumerate(pcols):
                        w[pos[c]] = v[k]
                    span.append(w)
            fresh = len(basis) - (rank(span) if span else 0)
            if fresh:
                gens[alpha] = fresh
    return gens


def dual_module(mod):
    """The graded dual, reflected so it is again nonnegatively graded.

    Writing c for the coordinatewise top corner of the support, the
    dual has dims'(alpha) = dims(c - alpha) and multiplication maps the
    transposes of the originals; Betti tables transform by
    beta'_{i, alpha} = beta_{2 - i, c + (1,1) - alpha}.
    """
    if not mod.dims:
        return mod
    c = (max(a for a, _ in mod.dims), max(b for _, b in mod.dims))
    dims = {(c[0] - a, c[1] - b): d for (a, b), d in mod.dims.items()}
    mult_x = {}
    mult_y = {}
    for alpha in dims:
        src_x = (c[0] - alpha[0] - 1, c[1] - alpha[1])
        if mod.dim(src_x) and mod.dim(_shift(src_x, _X)):
            mult_x[alpha] = transpose(mod.map_x(src_x))
        src_y = (c[0] - alpha[0], c[1] - alpha[1] - 1)
        if mod.dim(src_y) and mod.dim(_shift(src_y, _Y)):
            mult_y[alpha] = transpose(mod.map_y(src_y))
    return FiniteModule(dims, mult_x, mult_y)


def presentation_to_json_obj(pm):
    entries = []
    for r in range(len(pm.row_degrees)):
        row = []
        for c in range(len(pm.col_degrees)):
            s = pm.scalars[r][c]
            if s == 0:
                row.append([])
            else:
                e = pm.entry_exponent(r, c)
                row.append([[str(s), [e[0], e[1]]]])
        entries.append(row)
    return {
        "kind": "presentation",
        "rows": [[a, b] for a, b in pm.row_degrees],
        "cols": [[a, b] for a, b in pm.col_degrees],
        "entries": entries,
    }


def presentation_from_json_obj(obj):
    if obj.get("kind") != "presentation":
        raise ValueError("expected a presentation object")
    entries = [[[(term[0], (term[1][0], term[1][1])) for term in cell]
                for cell in row] for row in obj["entries"]]
    return PresentationMatrix(obj["rows"], obj["cols"], entries)


def module_from_json_obj(obj, box=None):
    """Build a FiniteModule from either JSON input form."""
    kind = obj.get("kind")
    if kind == "monomial_quotient":
        pair = MonomialPair([tuple(g) for g in obj["outer"]],
                            [tuple(g) for g in obj["inner"]])
        return monomial_quotient(pair)
    if kind == "presentation":
        return coker_presentation(presentation_from_json_obj(obj), box=box)
    raise ValueError(f"unknown module kind {kind!r}")
