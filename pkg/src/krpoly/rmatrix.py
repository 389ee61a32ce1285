"""Combinatorial R-matrix on two-fold products of KR crystals.

Classical highest weight elements of B^{r1,s1} (x) B^{r2,s2} carry the
zero pattern in the second slot and are supported on the anti-diagonal
cells (r-j, rt+j), j = 0..k, of the first, where r = min(r1,r2),
rt = max(r1,r2) and k = min(r-1, n-rt); the entries along that diagonal
weakly decrease and are bounded by min(s1,s2).  The R-matrix keeps those
entries and only swaps the carrying shapes; arbitrary elements are handled
by transport to the highest weight representative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotHighestWeight, OracleFailure
from .graph import sort_key
from .patterns import KRParams, enumerate_crystal, zero_pattern
from .tensor import TensorElement, is_classical_hw


@dataclass(frozen=True)
class HighestWeightDatum:
    """Anti-diagonal entries (weakly decreasing, bounded by min(s1,s2))."""

    params1: KRParams
    params2: KRParams
    entries: tuple

    def __post_init__(self):
        cells, bound = hw_support(self.params1, self.params2)
        if len(self.entries) != len(cells):
            raise ValueError(f"expected {len(cells)} entries, got {len(self.entries)}")
        if any(self.entries[i] < self.entries[i + 1] for i in range(len(self.entries) - 1)):
            raise ValueError("entries must weakly decrease")
        if self.entries and (self.entries[-1] < 0 or self.entries[0] > bound):
            raise ValueError(f"entries must lie in 0..{bound}")

    def to_element(self):
        """The highest weight element A (x) 0 carrying these entries."""
        cells, _ = hw_support(self.params1, self.params2)
        rows = [[0] * self.params1.num_cols for _ in range(self.params1.num_rows)]
        for (p, q), value in zip(cells, self.entries):
            rows[q - self.params1.r][p - 1] = value
        first = zero_pattern(self.params1)
        first = type(first)(self.params1, tuple(tuple(row) for row in rows))
        return TensorElement((first, zero_pattern(self.params2)))


def hw_support(params1, params2):
    """Support cells (shared by both product orders) and the entry bound."""
    if params1.n != params2.n:
        raise ValueError("factors must share the same rank n")
    n = params1.n
    r = min(params1.r, params2.r)
    rt = max(params1.r, params2.r)
    k = min(r - 1, n - rt)
    cells = tuple((r - j, rt + j) for j in range(k + 1))
    return cells, min(params1.s, params2.s)


def highest_weight_elements(params1, params2):
    """All classical highest weight elements, lexicographic in the tuple."""
    cells, bound = hw_support(params1, params2)
    out = []

    def extend(prefix):
        if len(prefix) == len(cells):
            out.append(HighestWeightDatum(params1, params2, tuple(prefix)).to_element())
            return
        cap = bound if not prefix else prefix[-1]
        for v in range(cap + 1):
            extend(prefix + [v])

    extend([])
    return out


def rmatrix_on_hw(x):
    """Image of a classical highest weight element under the R-matrix."""
    if len(x.factors) != 2:
        raise ValueError("the R-matrix acts on two-fold products")
    if not is_classical_hw(x):
        raise NotHighestWeight("element is not killed by all classical raising operators")
    first, second = x.factors
    if second.total() != 0:
        raise NotHighestWeight("second factor of a highest weight element must be zero")
    cells, _ = hw_support(first.params, second.params)
    support = dict.fromkeys(cells, 0)
    for q in range(first.params.r, first.params.n + 1):
        for p in range(1, first.params.r + 1):
            v = first.a(p, q)
            if v == 0:
                continue
            if (p, q) not in support:
                raise NotHighestWeight(f"entry off the anti-diagonal at {(p, q)}")
            support[(p, q)] = v
    rows = [[0] * second.params.num_cols for _ in range(second.params.num_rows)]
    for (p, q), v in support.items():
        rows[q - second.params.r][p - 1] = v
    image_first = type(second)(second.params, tuple(tuple(row) for row in rows))
    return TensorElement((image_first, zero_pattern(first.params)))


def to_highest_weight(x):
    """Raise x to its classical highest weight element; returns (hw, word)."""
    word = []
    while True:
        for l in range(1, x.n + 1):
            if x.eps(l) > 0:
                x = x.e(l)
                word.append(l)
                break
        else:
            return x, tuple(word)


def rmatrix(x):
    """R-matrix on an arbitrary element of a two-fold product."""
    if len(x.factors) != 2:
        raise ValueError("the R-matrix acts on two-fold products")
    hw, word = to_highest_weight(x)
    y = rmatrix_on_hw(hw)
    for l in reversed(word):
        y = y.f(l)
        assert y is not None, "transport word failed on the image side"
    return y


def rmatrix_oracle(params1, params2, max_size=None):
    """The unique classical isomorphism, built without the shape law.

    Highest weight elements found by brute raising-operator scan are
    matched across the two product orders by classical weight, then the
    matching is propagated along lowering edges.  Conflicts, non-bijective
    weight matching, or a failure to intertwine the affine operators raise
    OracleFailure.
    """
    left = _product_elements(params1, params2, max_size)
    right = _product_elements(params2, params1, max_size)
    lhw = [x for x in left if is_classical_hw(x)]
    rhw = [y for y in right if is_classical_hw(y)]
    by_weight = {}
    for y in rhw:
        key = y.classical_weight()
        if key in by_weight:
            raise OracleFailure(f"duplicate highest weight {key} on the swapped side")
        by_weight[key] = y
    if len(lhw) != len(rhw):
        raise OracleFailure("highest weight counts differ between the two orders")
    mapping = {}
    queue = []
    for x in lhw:
        key = x.classical_weight()
        if key not in by_weight:
            raise OracleFailure(f"no weight match for highest weight element {key}")
        mapping[x] = by_weight[key]
        queue.append(x)
    while queue:
        x = queue.pop()
        y = mapping[x]
        for l in range(1, params1.n + 1):
            fx = x.f(l)
            fy = y.f(l)
            if (fx is None) != (fy is None):
                raise OracleFailure(f"f_{l} defined on one side only at {x}")
            if fx is None:
                continue
            if fx in mapping:
                if mapping[fx] != fy:
                    raise OracleFailure(f"edge propagation conflict at f_{l} of {x}")
            else:
                mapping[fx] = fy
                queue.append(fx)
    if len(mapping) != len(left):
        raise OracleFailure("classical components not exhausted from highest weights")
    for x, y in mapping.items():
        for op in ("f", "e"):
            fx = getattr(x, op)(0)
            fy = getattr(y, op)(0)
            if (fx is None) != (fy is None):
                raise OracleFailure(f"{op}_0 defined on one side only at {x}")
            if fx is not None and mapping[fx] != fy:
                raise OracleFailure(f"{op}_0 not intertwined at {x}")
    return mapping


def _product_elements(params1, params2, max_size=None):
    left = enumerate_crystal(params1, max_size)
    right = enumerate_crystal(params2, max_size)
    out = [TensorElement((a, b)) for a in left for b in right]
    out.sort(key=sort_key)
    return out
