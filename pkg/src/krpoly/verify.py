"""Exhaustive verification suites, each pairing a construction with an
independent oracle.  The CLI `verify` subcommand and the acceptance tests
run these; every check returns a Check record rather than raising.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .energy import intermediate_sequence, local_energy, local_energy_hw, local_energy_oracle
from .graph import build_graph
from .nakajima import psi_crystal, psi_embedding
from .patterns import KRParams, enumerate_crystal, pivot
from .perfect import check_perfect, dominant_weights, eps_profile, ground_state_path
from .regularity import is_regular_rank2
from .rmatrix import highest_weight_elements, rmatrix, rmatrix_oracle, _product_elements
from .tensor import TensorElement, is_classical_hw


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


# -- independent oracles ------------------------------------------------------


def count_rect_ssyt(rows, cols, max_entry):
    """Semistandard fillings of an rows x cols rectangle with entries
    1..max_entry: weakly increasing rows, strictly increasing columns."""
    grid = [[0] * cols for _ in range(rows)]

    def fill(idx):
        if idx == rows * cols:
            return 1
        i, j = divmod(idx, cols)
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        total = 0
        for v in range(lo, max_entry + 1):
            grid[i][j] = v
            total += fill(idx + 1)
        return total

    return fill(0)


def signature_word(x, l):
    """Uncancelled plus/minus word of a tensor element for one color.

    Each factor contributes "+" * phi then "-" * eps; adjacent "-+" pairs
    cancel until none remain.  Survivors are returned as (sign, factor)
    pairs: the number of "+" is phi of the product, the number of "-" is
    eps, f acts at the rightmost "+" and e at the leftmost "-".
    """
    stack = []
    for idx, b in enumerate(x.factors):
        for _ in range(b.phi(l)):
            stack.append(("+", idx))
        for _ in range(b.eps(l)):
            stack.append(("-", idx))
    changed = True
    while changed:
        changed = False
        out = []
        i = 0
        while i < len(stack):
            if i + 1 < len(stack) and stack[i][0] == "-" and stack[i + 1][0] == "+":
                i += 2
                changed = True
            else:
                out.append(stack[i])
                i += 1
        stack = out
    return stack


def signature_f(x, l):
    word = [w for w in signature_word(x, l) if w[0] == "+"]
    if not word:
        return None
    idx = word[-1][1]
    y = x.factors[idx].f(l)
    if y is None:
        return None
    return TensorElement(x.factors[:idx] + (y,) + x.factors[idx + 1 :])


def signature_e(x, l):
    word = [w for w in signature_word(x, l) if w[0] == "-"]
    if not word:
        return None
    idx = word[0][1]
    y = x.factors[idx].e(l)
    if y is None:
        return None
    return TensorElement(x.factors[:idx] + (y,) + x.factors[idx + 1 :])


def string_eps(x, l):
    count = 0
    while True:
        x = x.e(l)
        if x is None:
            return count
        count += 1


def string_phi(x, l):
    count = 0
    while True:
        x = x.f(l)
        if x is None:
            return count
        count += 1


def brute_pivot(A, l, sign):
    """Pivot positions by direct enumeration of the defining objective."""
    pr = A.params
    if sign == "plus":
        vals = {
            p: sum(A.a(j, l - 1) for j in range(1, p + 1))
            + sum(A.a(j, l) for j in range(p, pr.r + 1))
            for p in range(1, pr.r + 1)
        }
    else:
        vals = {
            p: sum(A.a(l, j) for j in range(pr.r, p + 1))
            + sum(A.a(l + 1, j) for j in range(p, pr.n + 1))
            for p in range(pr.r, pr.n + 1)
        }
    best = max(vals.values())
    winners = [p for p, v in vals.items() if v == best]
    return min(winners), max(winners)


# -- suites -------------------------------------------------------------------


def _all_params(n, max_s):
    return [KRParams(n, r, s) for r in range(1, n + 1) for s in range(1, max_s + 1)]


def suite_ops(n, max_s):
    """Single-crystal structure: strings, weights, pivots, commutation."""
    checks = []
    for params in _all_params(n, max_s):
        crystal = enumerate_crystal(params)
        bad = []
        for b in crystal:
            for l in range(n + 1):
                if b.phi(l) != string_phi(b, l) or b.eps(l) != string_eps(b, l):
                    bad.append(f"string stats at {b} color {l}")
                fb = b.f(l)
                if fb is not None and (fb.e(l) != b or fb.validate() is None):
                    bad.append(f"e o f at {b} color {l}")
                eb = b.e(l)
                if eb is not None and (eb.f(l) != b or eb.validate() is None):
                    bad.append(f"f o e at {b} color {l}")
            pair = b.affine_weight().pairings
            if sum(pair) != 0:
                bad.append(f"nonzero level at {b}")
            if any(b.phi(l) - b.eps(l) != pair[l] for l in range(n + 1)):
                bad.append(f"phi - eps mismatch at {b}")
            for l in range(2, n):
                for first, second in (("f", "f"), ("f", "e"), ("e", "f"), ("e", "e")):
                    lhs = _compose(b, ((first, 0), (second, l)))
                    rhs = _compose(b, ((second, l), (first, 0)))
                    if lhs != rhs:
                        bad.append(f"color-0 commutation at {b} with {second}_{l}")
            for l in range(1, n + 1):
                if l == params.r:
                    continue
                sign = "plus" if l > params.r else "minus"
                piv = pivot(b, l, sign)
                lo, hi = brute_pivot(b, l, sign)
                got = (piv.p_plus, piv.q_plus) if sign == "plus" else (piv.q_minus, piv.p_minus)
                if got != (lo, hi):
                    bad.append(f"pivot mismatch at {b} color {l}")
        graph = build_graph(crystal, range(n + 1))
        if not graph.is_connected():
            bad.append("affine graph disconnected")
        if not graph.is_connected(range(1, n + 1)):
            bad.append("classical graph disconnected")
        checks.append(
            Check(f"ops B^({params.r},{params.s}) n={n}", not bad, "; ".join(bad[:3]))
        )
    return checks


def _compose(b, steps):
    for op, l in steps:
        if b is None:
            return None
        b = b.f(l) if op == "f" else b.e(l)
    return b


def suite_tensor(n, max_s):
    """Recursive tensor rule against the signature-cancellation rule."""
    checks = []
    combos = [(p1, p2) for p1 in _all_params(n, max_s) for p2 in _all_params(n, max_s)]
    for params1, params2 in combos:
        bad = []
        for x in _product_elements(params1, params2):
            for l in range(n + 1):
                word = signature_word(x, l)
                if x.phi(l) != sum(1 for w in word if w[0] == "+"):
                    bad.append(f"phi vs signature at {x} color {l}")
                if x.eps(l) != sum(1 for w in word if w[0] == "-"):
                    bad.append(f"eps vs signature at {x} color {l}")
                if x.f(l) != signature_f(x, l):
                    bad.append(f"f vs signature at {x} color {l}")
                if x.e(l) != signature_e(x, l):
                    bad.append(f"e vs signature at {x} color {l}")
                fx = x.f(l)
                if fx is not None and fx.e(l) != x:
                    bad.append(f"partial inverse at {x} color {l}")
            if sum(x.affine_weight().pairings) != 0:
                bad.append(f"nonzero level at {x}")
        checks.append(
            Check(
                f"tensor B^({params1.r},{params1.s})xB^({params2.r},{params2.s}) n={n}",
                not bad,
                "; ".join(bad[:3]),
            )
        )
    return checks


def suite_rmatrix(n, max_s):
    """Transported R-matrix against the weight-matching oracle."""
    checks = []
    for params1 in _all_params(n, max_s):
        for params2 in _all_params(n, max_s):
            bad = []
            try:
                oracle = rmatrix_oracle(params1, params2)
                reverse = rmatrix_oracle(params2, params1)
            except Exception as exc:  # suite reports failures instead of raising
                checks.append(
                    Check(
                        f"rmatrix B^({params1.r},{params1.s})xB^({params2.r},{params2.s}) n={n}",
                        False,
                        f"oracle failed: {exc}",
                    )
                )
                continue
            for x, y in oracle.items():
                if rmatrix(x) != y:
                    bad.append(f"transport differs from oracle at {x}")
                if reverse[y] != x:
                    bad.append(f"oracle not an involution at {x}")
                if x.affine_weight() != y.affine_weight():
                    bad.append(f"weight not preserved at {x}")
            checks.append(
                Check(
                    f"rmatrix B^({params1.r},{params1.s})xB^({params2.r},{params2.s}) n={n}",
                    not bad,
                    "; ".join(bad[:3]),
                )
            )
    return checks


def suite_energy(n, max_s):
    """Closed-form energy against the recursion oracle, plus the hw law."""
    checks = []
    for params1 in _all_params(n, max_s):
        for params2 in _all_params(n, max_s):
            bad = []
            sigma = rmatrix_oracle(params1, params2)
            table = local_energy_oracle(params1, params2, sigma=sigma)
            for x, h in table.items():
                if local_energy(x) != h:
                    bad.append(f"closed form differs at {x}")
                if is_classical_hw(x) and local_energy_hw(x) != h:
                    bad.append(f"hw law differs at {x}")
                if h > 0:
                    bad.append(f"positive energy at {x}")
            for x in highest_weight_elements(params1, params2):
                if local_energy_hw(x) != -x.factors[0].total():
                    bad.append(f"hw law broken at {x}")
                seq = intermediate_sequence(x)
                if seq.final_pair[1].total() != 0:
                    bad.append(f"schedule leaves nonzero second factor at {x}")
            checks.append(
                Check(
                    f"energy B^({params1.r},{params1.s})xB^({params2.r},{params2.s}) n={n}",
                    not bad,
                    "; ".join(bad[:3]),
                )
            )
    return checks


def suite_regular(n, max_s):
    """Rank-2 string axioms for every color pair on every B^{r,s}."""
    checks = []
    for params in _all_params(n, max_s):
        graph = build_graph(enumerate_crystal(params), range(n + 1))
        bad = []
        for pair in itertools.combinations(range(n + 1), 2):
            report = is_regular_rank2(graph, pair)
            if not report.ok:
                bad.append(f"pair {pair}: {report.violations[0]}")
        checks.append(
            Check(f"regular B^({params.r},{params.s}) n={n}", not bad, "; ".join(bad[:3]))
        )
    return checks


def suite_nakajima(n, max_s):
    """Corner embedding: statistics, operator intertwining, pivots."""
    crystal2 = psi_crystal()
    checks = []
    for params in _all_params(n, max_s):
        bad = []
        for b in enumerate_crystal(params):
            m = psi_embedding(b)
            if crystal2.phi(m, 1) != b.phi(0) or crystal2.eps(m, 1) != b.eps(0):
                bad.append(f"color-0 statistics differ at {b}")
            if not _psi_commutes(crystal2, b, m, 0, 1):
                bad.append(f"color-0 operators differ at {b}")
            if params.r >= 2:
                if crystal2.phi(m, 2) != b.phi(1) or crystal2.eps(m, 2) != b.eps(1):
                    bad.append(f"color-1 statistics differ at {b}")
                if not _psi_commutes(crystal2, b, m, 1, 2):
                    bad.append(f"color-1 operators differ at {b}")
                if b.phi(1) > 0:
                    piv = pivot(b, 1, "minus")
                    if crystal2.nf(m, 2) != params.n - piv.p_minus:
                        bad.append(f"nf pivot identity fails at {b}")
                if b.eps(1) > 0:
                    piv = pivot(b, 1, "minus")
                    if crystal2.ne(m, 2) != params.n - piv.q_minus:
                        bad.append(f"ne pivot identity fails at {b}")
        checks.append(
            Check(f"nakajima B^({params.r},{params.s}) n={n}", not bad, "; ".join(bad[:3]))
        )
    return checks


def _psi_commutes(crystal2, b, m, pattern_color, monomial_color):
    fb = b.f(pattern_color)
    fm = crystal2.f(m, monomial_color)
    if (fb is None) != (fm is None):
        return False
    if fb is not None and psi_embedding(fb) != fm:
        return False
    eb = b.e(pattern_color)
    em = crystal2.e(m, monomial_color)
    if (eb is None) != (em is None):
        return False
    if eb is not None and psi_embedding(eb) != em:
        return False
    return True


def suite_perfect(n, max_level):
    """Perfectness reports plus ground-state path recursion."""
    checks = []
    for level in range(1, max_level + 1):
        for r in range(1, n + 1):
            params = KRParams(n, r, level)
            report = check_perfect(params)
            checks.append(
                Check(
                    f"perfect B^({r},{level}) n={n}",
                    report.ok,
                    "; ".join(report.violations[:3]),
                )
            )
            weight = dominant_weights(n, level)[0]
            path = ground_state_path(weight, params, 2 * (n + 1))
            rotated = all(
                path.weights[k + 1] == path.weights[k].rotate(r)
                for k in range(len(path.weights) - 1)
            )
            recursion = all(
                eps_profile(path.elements[k]) == path.weights[k].rotate(r).coeffs
                for k in range(len(path.elements))
            )
            checks.append(
                Check(
                    f"ground-state path B^({r},{level}) n={n}",
                    rotated and recursion,
                    "" if rotated and recursion else "rotation or recursion failed",
                )
            )
    return checks


def suite_cardinality(n, max_s):
    """Crystal sizes against the semistandard-tableau count."""
    checks = []
    for params in _all_params(n, max_s):
        got = len(enumerate_crystal(params))
        want = count_rect_ssyt(params.r, params.s, n + 1)
        checks.append(
            Check(
                f"cardinality B^({params.r},{params.s}) n={n}",
                got == want,
                f"enumerated {got}, tableau count {want}",
            )
        )
    return checks


SUITES = {
    "ops": suite_ops,
    "tensor": suite_tensor,
    "rmatrix": suite_rmatrix,
    "energy": suite_energy,
    "regular": suite_regular,
    "nakajima": suite_nakajima,
    "perfect": suite_perfect,
    "cardinality": suite_cardinality,
}


def run_suite(name, n, max_s):
    if name == "all":
        checks = []
        for key in sorted(SUITES):
            if key == "regular" and n < 2:
                continue
            checks.extend(SUITES[key](n, max_s))
        return checks
    return SUITES[name](n, max_s)
