"""Independent brute-force oracles used by the tests.

Everything here recomputes results through exact rational linear algebra
on explicit bracket expansions, deliberately avoiding the boolean-pattern
shortcuts of the package under test.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from regalg import linalg
from regalg.core import RegularSubalgebra, full_nil_set


class _Element:
    """Exact algebra element: coefficients on matrix units plus a diagonal."""

    __slots__ = ("n", "nil", "diag")

    def __init__(self, n, nil=None, diag=None):
        self.n = n
        self.nil = dict(nil or {})
        self.diag = list(diag) if diag is not None else [Fraction(0)] * n

    def is_zero(self):
        return all(c == 0 for c in self.nil.values()) and all(d == 0 for d in self.diag)


def _elem_bracket(x: _Element, y: _Element) -> _Element:
    n = x.n
    out = _Element(n)
    for (i, j), a in x.nil.items():
        if a == 0:
            continue
        for (k, l), b in y.nil.items():
            if b == 0:
                continue
            if j == k:
                out.nil[(i, l)] = out.nil.get((i, l), Fraction(0)) + a * b
            if l == i:
                out.nil[(k, j)] = out.nil.get((k, j), Fraction(0)) - a * b
    for (k, l), b in y.nil.items():
        c = x.diag[k - 1] - x.diag[l - 1]
        if c != 0 and b != 0:
            out.nil[(k, l)] = out.nil.get((k, l), Fraction(0)) + c * b
    for (i, j), a in x.nil.items():
        c = y.diag[i - 1] - y.diag[j - 1]
        if c != 0 and a != 0:
            out.nil[(i, j)] = out.nil.get((i, j), Fraction(0)) - c * a
    return out


def _to_vector(el: _Element, positions):
    vec = [Fraction(0)] * (len(positions) + el.n)
    for idx, p in enumerate(positions):
        vec[idx] = el.nil.get(p, Fraction(0))
    for i in range(el.n):
        vec[len(positions) + i] = el.diag[i]
    return vec


def _from_vector(vec, positions, n):
    el = _Element(n)
    for idx, p in enumerate(positions):
        if vec[idx] != 0:
            el.nil[p] = vec[idx]
    el.diag = list(vec[len(positions):])
    return el


def span_derived_series(algebra: RegularSubalgebra):
    """Derived series dims and nil-support patterns by exact span brackets.

    Returns (dims, patterns): dims starts at the full dimension and ends at
    the first 0; patterns[k] is the nil support of the (k+1)-th term.
    """
    n = algebra.n
    positions = sorted(full_nil_set(n))
    current = []
    for (i, j) in sorted(algebra.nil_set):
        current.append(_Element(n, nil={(i, j): Fraction(1)}))
    for v in algebra.cartan_gens:
        current.append(_Element(n, diag=[Fraction(x) for x in v]))
    dims = [len(current)]
    patterns = []
    while dims[-1] != 0:
        produced = []
        for x, y in combinations(current, 2):
            b = _elem_bracket(x, y)
            if not b.is_zero():
                produced.append(_to_vector(b, positions))
        basis = linalg.rref(produced) if produced else []
        dims.append(len(basis))
        support = set()
        for row in basis:
            for idx, val in enumerate(row):
                if val != 0 and idx < len(positions):
                    support.add(positions[idx])
        patterns.append(frozenset(support))
        current = [_from_vector(row, positions, n) for row in basis]
    return dims, patterns


def span_power_action_dims(algebra: RegularSubalgebra, side: str):
    """Column/row action sizes of successive products of the nilpotent part,
    recomputed by exact products of generic instantiations of the span.

    Works on supports of exact matrix products: the image support of the
    m-fold product of the generic nil element.
    """
    n = algebra.n
    mat = [[Fraction(0)] * n for _ in range(n)]
    value = 2
    for (i, j) in sorted(algebra.nil_set):
        mat[i - 1][j - 1] = Fraction(value)
        value += 3  # distinct positive entries; no cancellation possible
    power = [row[:] for row in mat]
    dims = []
    while True:
        if side == "column":
            size = sum(1 for r in range(n) if any(power[r][c] != 0 for c in range(n)))
        else:
            size = sum(1 for c in range(n) if any(power[r][c] != 0 for r in range(n)))
        dims.append(size)
        if size == 0:
            break
        power = [
            [sum((power[r][k] * mat[k][c] for k in range(n)), Fraction(0)) for c in range(n)]
            for r in range(n)
        ]
    return dims


def brute_commutator_dim(algebra: RegularSubalgebra) -> int:
    """Dimension of the commutator: exact rank of all pairwise brackets."""
    n = algebra.n
    positions = sorted(full_nil_set(n))
    elements = [_Element(n, nil={(i, j): Fraction(1)}) for (i, j) in sorted(algebra.nil_set)]
    elements += [_Element(n, diag=[Fraction(x) for x in v]) for v in algebra.cartan_gens]
    produced = []
    for x, y in combinations(elements, 2):
        b = _elem_bracket(x, y)
        if not b.is_zero():
            produced.append(_to_vector(b, positions))
    return linalg.rank(produced) if produced else 0
