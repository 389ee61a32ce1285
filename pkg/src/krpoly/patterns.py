"""Integer-grid model of Kirillov-Reshetikhin crystals of affine type A.

An element of B^{r,s} at rank n is a grid of non-negative integers a[p,q]
with column index p = 1..r and row index q = r..n, subject to the polytope
constraint: every monotone staircase of cells from (1, r) to (r, n) (each
step raises p or q by one) has entry sum at most s.

The grid carries the full affine crystal structure.  Classical colors
1..n act through pivot indices; color 0 acts on the single corner cell
(1, n).  Crystal zero (an undefined operator application) is represented
by ``None`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NegativeEntry,
    PathSumExceeded,
    SizeLimitExceeded,
)

ENUMERATION_CAP = 1_000_000


@dataclass(frozen=True)
class KRParams:
    """Crystal parameters: rank n of A_n^(1), classical node r, level s."""

    n: int
    r: int
    s: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be positive, got n={self.n}")
        if not 1 <= self.r <= self.n:
            raise ValueError(f"need 1 <= r <= n, got r={self.r}, n={self.n}")
        if self.s < 1:
            raise ValueError(f"level must be positive, got s={self.s}")

    @property
    def num_rows(self):
        return self.n - self.r + 1

    @property
    def num_cols(self):
        return self.r


@dataclass(frozen=True)
class AffineWeight:
    """Level-zero affine weight as a tuple of simple-coroot pairings.

    ``pairings[l]`` is the pairing of the weight with the l-th simple
    coroot, l = 0..n.  Weights of crystal elements sum to zero across all
    colors (every colabel of A_n^(1) equals 1).
    """

    pairings: tuple

    @property
    def level(self):
        return sum(self.pairings)

    @property
    def classical(self):
        """Pairings with the classical coroots only (colors 1..n)."""
        return self.pairings[1:]

    def __add__(self, other):
        if len(self.pairings) != len(other.pairings):
            raise ValueError("cannot add weights of different ranks")
        return AffineWeight(tuple(a + b for a, b in zip(self.pairings, other.pairings)))


@dataclass(frozen=True)
class KRPattern:
    """One element of B^{r,s}: rows[q-r][p-1] = a[p,q]."""

    params: KRParams
    rows: tuple

    @property
    def n(self):
        return self.params.n

    def a(self, p, q):
        """Entry at column p, row q; zero outside the grid."""
        pr = self.params
        if 1 <= p <= pr.r and pr.r <= q <= pr.n:
            return self.rows[q - pr.r][p - 1]
        return 0

    def entries_flat(self):
        return tuple(x for row in self.rows for x in row)

    def total(self):
        return sum(self.entries_flat())

    def sort_key(self):
        return self.entries_flat()

    # -- weights ---------------------------------------------------------

    def classical_weight(self):
        """Coefficients of the weight on the fundamental weights 1..n."""
        return _classical_weight(self)

    def affine_weight(self):
        """The level-zero affine weight (pairing with coroot 0 balances)."""
        cl = _classical_weight(self)
        return AffineWeight((-sum(cl),) + cl)

    # -- string statistics and operators ----------------------------------

    def phi(self, l):
        """Number of times f_l applies before hitting crystal zero."""
        return _phi(self, l)

    def eps(self, l):
        """Number of times e_l applies before hitting crystal zero."""
        return _eps(self, l)

    def f(self, l):
        """Lowering operator for color l; None at the end of the string."""
        return _f(self, l)

    def e(self, l):
        """Raising operator for color l; None at the top of the string."""
        return _e(self, l)

    # -- plumbing ----------------------------------------------------------

    def validate(self):
        validate_pattern(self.rows, self.params)
        return self

    def to_dict(self):
        pr = self.params
        return {"n": pr.n, "r": pr.r, "s": pr.s, "rows": [list(row) for row in self.rows]}


def zero_pattern(params):
    """The generator of B^{r,s}: all entries zero."""
    return KRPattern(params, tuple((0,) * params.num_cols for _ in range(params.num_rows)))


def pattern_from_dict(data):
    params = KRParams(int(data["n"]), int(data["r"]), int(data["s"]))
    return validate_pattern(data["rows"], params)


def validate_pattern(entries, params):
    """Check shape, non-negativity and the staircase constraint.

    Returns the validated KRPattern.  The polytope constraint is checked
    by max-path dynamic programming; on failure the witness staircase is
    attached to the raised PathSumExceeded.
    """
    rows = tuple(tuple(int(x) for x in row) for row in entries)
    if len(rows) != params.num_rows or any(len(row) != params.num_cols for row in rows):
        raise DimensionMismatch(
            f"expected {params.num_rows} rows x {params.num_cols} cols for "
            f"B^({params.r},{params.s}) at n={params.n}"
        )
    for qi, row in enumerate(rows):
        for pi, x in enumerate(row):
            if x < 0:
                raise NegativeEntry(f"entry a[{pi + 1},{qi + params.r}] = {x} is negative")
    # ms[qi][pi] = largest staircase sum from (1, r) to this cell
    ms = [[0] * params.num_cols for _ in range(params.num_rows)]
    for qi in range(params.num_rows):
        for pi in range(params.num_cols):
            best = 0
            if pi > 0:
                best = ms[qi][pi - 1]
            if qi > 0:
                best = max(best, ms[qi - 1][pi])
            ms[qi][pi] = best + rows[qi][pi]
    total = ms[params.num_rows - 1][params.num_cols - 1]
    if total > params.s:
        raise PathSumExceeded(
            f"maximal staircase sums to {total} > s = {params.s}",
            witness=_witness_path(rows, ms, params),
            total=total,
        )
    return KRPattern(params, rows)


def _witness_path(rows, ms, params):
    cells = []
    qi, pi = params.num_rows - 1, params.num_cols - 1
    while True:
        cells.append((pi + 1, qi + params.r))
        if qi == 0 and pi == 0:
            break
        if pi > 0 and (qi == 0 or ms[qi][pi - 1] >= ms[qi - 1][pi]):
            pi -= 1
        else:
            qi -= 1
    cells.reverse()
    return cells


def enumerate_crystal(params, max_size=ENUMERATION_CAP):
    """All elements of B^{r,s}, in lexicographic order of flattened rows.

    Cells are filled row-major; partial grids whose max-path DP already
    exceeds s are pruned, so only valid patterns are materialized.
    """
    nrows, ncols = params.num_rows, params.num_cols
    rows = [[0] * ncols for _ in range(nrows)]
    ms = [[0] * ncols for _ in range(nrows)]
    out = []

    def fill(idx):
        if idx == nrows * ncols:
            if max_size is not None and len(out) >= max_size:
                raise SizeLimitExceeded(
                    f"B^({params.r},{params.s}) at n={params.n} exceeds cap {max_size}"
                )
            out.append(KRPattern(params, tuple(tuple(row) for row in rows)))
            return
        qi, pi = divmod(idx, ncols)
        base = 0
        if pi > 0:
            base = ms[qi][pi - 1]
        if qi > 0:
            base = max(base, ms[qi - 1][pi])
        for val in range(params.s - base + 1):
            rows[qi][pi] = val
            ms[qi][pi] = base + val
            fill(idx + 1)
        rows[qi][pi] = 0

    fill(0)
    return out


# -- statistics ------------------------------------------------------------
#
# For a color l > r the relevant data live in rows l-1 and l; for l < r in
# columns l and l+1.  Both cases maximize a prefix+suffix objective whose
# extreme argmax positions are the pivots.


@lru_cache(maxsize=None)
def _plus_data(A, l):
    """(max value, argmin, argmax, row_{l-1} sum, row_l sum) for l > r."""
    r = A.params.r
    hi = [A.a(p, l - 1) for p in range(1, r + 1)]
    lo = [A.a(p, l) for p in range(1, r + 1)]
    suffix = sum(lo)
    run = 0
    best = None
    pmin = pmax = 1
    for p in range(1, r + 1):
        run += hi[p - 1]
        val = run + suffix
        suffix -= lo[p - 1]
        if best is None or val > best:
            best, pmin, pmax = val, p, p
        elif val == best:
            pmax = p
    return best, pmin, pmax, sum(hi), sum(lo)


@lru_cache(maxsize=None)
def _minus_data(A, l):
    """(max value, argmin, argmax, col_l sum, col_{l+1} sum) for l < r."""
    pr = A.params
    left = [A.a(l, q) for q in range(pr.r, pr.n + 1)]
    right = [A.a(l + 1, q) for q in range(pr.r, pr.n + 1)]
    suffix = sum(right)
    run = 0
    best = None
    qmin = qmax = pr.r
    for q in range(pr.r, pr.n + 1):
        run += left[q - pr.r]
        val = run + suffix
        suffix -= right[q - pr.r]
        if best is None or val > best:
            best, qmin, qmax = val, q, q
        elif val == best:
            qmax = q
    return best, qmin, qmax, sum(left), sum(right)


@lru_cache(maxsize=None)
def _phi(A, l):
    pr = A.params
    if not 0 <= l <= pr.n:
        raise IndexOutOfRange(f"color {l} outside 0..{pr.n}")
    if l == 0:
        return A.a(1, pr.n)
    if l == pr.r:
        top = sum(A.a(j, pr.r) for j in range(1, pr.r))
        last_col = sum(A.a(pr.r, q) for q in range(pr.r, pr.n + 1))
        return pr.s - top - last_col
    if l > pr.r:
        best, _, _, _, row_l = _plus_data(A, l)
        return best - row_l
    best, _, _, col_l, _ = _minus_data(A, l)
    return best - col_l


@lru_cache(maxsize=None)
def _eps(A, l):
    pr = A.params
    if not 0 <= l <= pr.n:
        raise IndexOutOfRange(f"color {l} outside 0..{pr.n}")
    if l == 0:
        first_col = sum(A.a(1, q) for q in range(pr.r, pr.n + 1))
        last_row = sum(A.a(p, pr.n) for p in range(2, pr.r + 1))
        return pr.s - first_col - last_row
    if l == pr.r:
        return A.a(pr.r, pr.r)
    if l > pr.r:
        best, _, _, row_hi, _ = _plus_data(A, l)
        return best - row_hi
    best, _, _, _, col_next = _minus_data(A, l)
    return best - col_next


@dataclass(frozen=True)
class PivotIndices:
    """Extreme argmax positions of the pivot objective for one color.

    For l > r the plus pair (p_plus <= q_plus) indexes columns; for l < r
    the minus pair (q_minus <= p_minus) indexes rows.
    """

    p_plus: int = None
    q_plus: int = None
    p_minus: int = None
    q_minus: int = None


def pivot(A, l, sign):
    """Pivot indices for color l; sign 'plus' needs l > r, 'minus' l < r."""
    pr = A.params
    if l == pr.r:
        raise IndexOutOfRange(f"color {l} equals r: no pivot needed")
    if sign == "plus":
        if not pr.r < l <= pr.n:
            raise IndexOutOfRange(f"plus pivot needs r < l <= n, got l={l}")
        _, pmin, pmax, _, _ = _plus_data(A, l)
        return PivotIndices(p_plus=pmin, q_plus=pmax)
    if sign == "minus":
        if not 1 <= l < pr.r:
            raise IndexOutOfRange(f"minus pivot needs 1 <= l < r, got l={l}")
        _, qmin, qmax, _, _ = _minus_data(A, l)
        return PivotIndices(p_minus=qmax, q_minus=qmin)
    raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")


def _bump(A, changes):
    """Return a copy of A with (p, q) -> delta applied."""
    pr = A.params
    rows = [list(row) for row in A.rows]
    for (p, q), delta in changes:
        rows[q - pr.r][p - 1] += delta
    return KRPattern(A.params, tuple(tuple(row) for row in rows))


@lru_cache(maxsize=None)
def _f(A, l):
    pr = A.params
    if _phi(A, l) == 0:
        return None
    if l == 0:
        return _bump(A, (((1, pr.n), -1),))
    if l == pr.r:
        return _bump(A, (((pr.r, pr.r), 1),))
    if l > pr.r:
        _, pmin, _, _, _ = _plus_data(A, l)
        return _bump(A, (((pmin, l - 1), -1), ((pmin, l), 1)))
    _, _, qmax, _, _ = _minus_data(A, l)
    return _bump(A, (((l, qmax), 1), ((l + 1, qmax), -1)))


@lru_cache(maxsize=None)
def _e(A, l):
    pr = A.params
    if _eps(A, l) == 0:
        return None
    if l == 0:
        return _bump(A, (((1, pr.n), 1),))
    if l == pr.r:
        return _bump(A, (((pr.r, pr.r), -1),))
    if l > pr.r:
        _, _, pmax, _, _ = _plus_data(A, l)
        return _bump(A, (((pmax, l - 1), 1), ((pmax, l), -1)))
    _, qmin, _, _, _ = _minus_data(A, l)
    return _bump(A, (((l, qmin), -1), ((l + 1, qmin), 1)))


@lru_cache(maxsize=None)
def _classical_weight(A):
    pr = A.params
    coeffs = [0] * (pr.n + 1)  # 1-indexed
    coeffs[pr.r] = pr.s
    for q in range(pr.r, pr.n + 1):
        for p in range(1, pr.r + 1):
            x = A.a(p, q)
            if x == 0:
                continue
            # <alpha_{p..q}, coroot_l> = 2*[p<=l<=q] - [p<=l-1<=q] - [p<=l+1<=q]
            for l in range(max(1, p - 1), min(pr.n, q + 1) + 1):
                pairing = 2 * (p <= l <= q) - (p <= l - 1 <= q) - (p <= l + 1 <= q)
                coeffs[l] -= x * pairing
    return tuple(coeffs[1 : pr.n + 1])


def apply_word_e(x, word):
    """Apply raising operators for the listed colors, left to right."""
    for l in word:
        x = x.e(l)
        if x is None:
            return None
    return x


def apply_word_f(x, word):
    """Apply lowering operators for the listed colors, left to right."""
    for l in word:
        x = x.f(l)
        if x is None:
            return None
    return x
