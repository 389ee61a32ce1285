"""Tensor products of crystals.

The operator rule compares statistics of the two factors: f_l acts on the
first factor when eps_l(b1) >= phi_l(b2) and on the second otherwise;
e_l acts on the first exactly when eps_l(b1) > phi_l(b2).  This is the
convention under which highest weight elements carry the zero pattern in
the *second* slot.  Products of three or more factors associate to the
left.
"""

from __future__ import annotations

from dataclasses import dataclass

from .patterns import KRPattern, pattern_from_dict


@dataclass(frozen=True)
class TensorElement:
    """Ordered factors b_1 (x) ... (x) b_N, each a KRPattern."""

    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ValueError("tensor element needs at least one factor")
        n = self.factors[0].n
        if any(b.n != n for b in self.factors):
            raise ValueError("all factors must share the same rank n")

    @property
    def n(self):
        return self.factors[0].n

    def sort_key(self):
        return tuple(b.entries_flat() for b in self.factors)

    # -- statistics --------------------------------------------------------

    def phi(self, l):
        val = self.factors[0].phi(l)
        ep = self.factors[0].eps(l)
        for b in self.factors[1:]:
            val = max(val, val + b.phi(l) - ep)
            ep = max(b.eps(l), ep + b.eps(l) - b.phi(l))
        return val

    def eps(self, l):
        ep = self.factors[0].eps(l)
        for b in self.factors[1:]:
            ep = max(b.eps(l), ep + b.eps(l) - b.phi(l))
        return ep

    def classical_weight(self):
        coeffs = [0] * self.n
        for b in self.factors:
            for i, c in enumerate(b.classical_weight()):
                coeffs[i] += c
        return tuple(coeffs)

    def affine_weight(self):
        total = self.factors[0].affine_weight()
        for b in self.factors[1:]:
            total = total + b.affine_weight()
        return total

    # -- operators -----------------------------------------------------------

    def _prefix_eps(self, l):
        """eps_l of every proper left prefix (index m holds factors 0..m)."""
        out = []
        ep = None
        for b in self.factors[:-1]:
            if ep is None:
                ep = b.eps(l)
            else:
                ep = max(b.eps(l), ep + b.eps(l) - b.phi(l))
            out.append(ep)
        return out

    def f_slot(self, l):
        """Index of the factor f_l acts on (left-associated rule)."""
        prefix = self._prefix_eps(l)
        m = len(self.factors) - 1
        while m > 0 and prefix[m - 1] >= self.factors[m].phi(l):
            m -= 1
        return m

    def e_slot(self, l):
        """Index of the factor e_l acts on."""
        prefix = self._prefix_eps(l)
        m = len(self.factors) - 1
        while m > 0 and prefix[m - 1] > self.factors[m].phi(l):
            m -= 1
        return m

    def f(self, l):
        m = self.f_slot(l)
        y = self.factors[m].f(l)
        if y is None:
            return None
        return TensorElement(self.factors[:m] + (y,) + self.factors[m + 1 :])

    def e(self, l):
        m = self.e_slot(l)
        y = self.factors[m].e(l)
        if y is None:
            return None
        return TensorElement(self.factors[:m] + (y,) + self.factors[m + 1 :])

    def to_dict(self):
        return {"factors": [b.to_dict() for b in self.factors]}


def tensor(*factors):
    """Build a TensorElement from patterns (or collapse a single pattern)."""
    return TensorElement(tuple(factors))


def tensor_from_dict(data):
    return TensorElement(tuple(pattern_from_dict(d) for d in data["factors"]))


def is_classical_hw(x):
    """True when every classical raising operator kills x."""
    return all(x.eps(l) == 0 for l in range(1, x.n + 1))


def tensor_product_elements(crystals):
    """All elements of a product, factors drawn lexicographically."""
    if isinstance(crystals[0], KRPattern):
        raise TypeError("expected a list of crystals (lists of patterns)")
    out = [()]
    for crystal in crystals:
        out = [prefix + (b,) for prefix in out for b in crystal]
    return [TensorElement(factors) for factors in out]
