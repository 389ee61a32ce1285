"""Local and global energy functions on products of KR crystals.

The local energy H on B1 (x) B2 is the integer function, normalized by
H(0 (x) 0) = 0, that is constant along classical edges and drops (grows)
by one along a raising 0-edge exactly when e_0 acts on the first (second)
factor of both the element and its R-matrix image.  Two routes are
implemented: a recursion oracle that propagates those increments over the
whole product, and the closed form that reads H off an intermediate
element produced by a fixed schedule of maximal raising moves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistentRecursion, NotHighestWeight
from .rmatrix import rmatrix, rmatrix_oracle, _product_elements
from .tensor import TensorElement, is_classical_hw


def truncate(x):
    """Truncated subtraction target: max(x, 0)."""
    return x if x > 0 else 0


def local_energy_hw(x):
    """H on a classical highest weight element: minus its entry sum."""
    if len(x.factors) != 2:
        raise ValueError("local energy lives on two-fold products")
    if not is_classical_hw(x):
        raise NotHighestWeight("element is not classical highest weight")
    return -x.factors[0].total()


@dataclass(frozen=True)
class IntermediateSeq:
    """The raising schedule applied to A (x) B, stage by stage.

    stages[s][r] is the pair (A, B) after step r of pass s; colors[s][r]
    and the applied exponents are recorded alongside.  corrections[s] is
    the truncated exponent of the final color-r2 application of pass s,
    the only move that can lower the tracked entry sum.
    """

    start: TensorElement
    stages: tuple
    colors: tuple
    exponents_a: tuple
    exponents_b: tuple
    corrections: tuple

    @property
    def final_pair(self):
        return self.stages[-1][-1]


def _pass_colors(r2, s):
    if s == 0:
        return tuple(range(1, r2 + 1))
    return tuple(range(1, r2)) + tuple(2 * r2 + s - r for r in range(r2, r2 + s + 1))


def intermediate_sequence(x):
    """Materialize the full raising schedule for a two-fold product."""
    if len(x.factors) != 2:
        raise ValueError("intermediate sequence lives on two-fold products")
    a, b = x.factors
    n = x.n
    r2 = b.params.r
    stages = []
    colors_all = []
    exps_a = []
    exps_b = []
    corrections = []
    for s in range(n - r2 + 1):
        stage = [(a, b)]
        colors = _pass_colors(r2, s)
        ea_pass = [0]
        eb_pass = [0]
        for step, color in enumerate(colors, start=1):
            ka = truncate(a.eps(color) - b.phi(color))
            kb = b.eps(color)
            if color == r2 and step == len(colors):
                corrections.append(ka)
            for _ in range(ka):
                a = a.e(color)
                assert a is not None, "raising exponent exceeded the string"
            for _ in range(kb):
                b = b.e(color)
                assert b is not None, "raising exponent exceeded the string"
            stage.append((a, b))
            ea_pass.append(ka)
            eb_pass.append(kb)
        stages.append(tuple(stage))
        colors_all.append((None,) + colors)
        exps_a.append(tuple(ea_pass))
        exps_b.append(tuple(eb_pass))
    seq = IntermediateSeq(
        start=x,
        stages=tuple(stages),
        colors=tuple(colors_all),
        exponents_a=tuple(exps_a),
        exponents_b=tuple(exps_b),
        corrections=tuple(corrections),
    )
    assert seq.final_pair[1].total() == 0, "schedule must raise the second factor to zero"
    return seq


def local_energy(x):
    """Closed-form local energy of an arbitrary two-fold element.

    Needs s1 <= s2; for s1 > s2 the value is computed on the R-matrix
    image, which lives on the swapped (sorted) pair and has the same
    energy.
    """
    if len(x.factors) != 2:
        raise ValueError("local energy lives on two-fold products")
    a, b = x.factors
    if a.params.s > b.params.s:
        return local_energy(rmatrix(x))
    r = min(a.params.r, b.params.r)
    rt = max(a.params.r, b.params.r)
    partial = sum(a.a(p, q) for p in range(1, r + 1) for q in range(rt, a.params.n + 1))
    seq = intermediate_sequence(x)
    return -partial + sum(seq.corrections)


def local_energy_oracle(params1, params2, max_size=None, sigma=None):
    """EnergyTable for B1 (x) B2 from the defining recursion.

    Propagates the 0-edge increments from 0 (x) 0 across the whole product
    and re-checks every edge afterwards; any conflict (which would mean
    the recursion is not well defined) raises InconsistentRecursion.
    """
    if sigma is None:
        sigma = rmatrix_oracle(params1, params2, max_size)
    elements = _product_elements(params1, params2, max_size)
    zero = min(elements, key=lambda t: sum(b.total() for b in t.factors))
    if any(b.total() for b in zero.factors):
        raise InconsistentRecursion("product has no zero element")

    def raising_delta(lower, l):
        # H(e_l lower) - H(lower)
        if l != 0:
            return 0
        side = lower.e_slot(0)
        side_image = sigma[lower].e_slot(0)
        if side == 0 and side_image == 0:
            return -1
        if side == 1 and side_image == 1:
            return 1
        return 0

    table = {zero: 0}
    queue = [zero]
    colors = range(params1.n + 1)
    while queue:
        x = queue.pop()
        for l in colors:
            up = x.e(l)
            if up is not None and up not in table:
                table[up] = table[x] + raising_delta(x, l)
                queue.append(up)
            down = x.f(l)
            if down is not None and down not in table:
                table[down] = table[x] - raising_delta(down, l)
                queue.append(down)
    if len(table) != len(elements):
        raise InconsistentRecursion("product crystal is not connected")
    for x in elements:
        for l in colors:
            up = x.e(l)
            if up is not None and table[up] - table[x] != raising_delta(x, l):
                raise InconsistentRecursion(f"recursion conflict along e_{l} at {x}")
    return table


def global_energy(x, energy=local_energy):
    """Sum of pairwise local energies after R-matrix transport.

    For each ordered pair i < j, factor j is carried next to factor i by
    successive R-matrix swaps of adjacent slots (j-1 down to i+1) and the
    local energy of slots (i, i+1) is evaluated on the transported tuple.
    """
    factors = x.factors
    total = 0
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            fs = list(factors)
            pos = j
            while pos > i + 1:
                pair = rmatrix(TensorElement((fs[pos - 1], fs[pos])))
                fs[pos - 1], fs[pos] = pair.factors
                pos -= 1
            total += energy(TensorElement((fs[i], fs[i + 1])))
    return total
