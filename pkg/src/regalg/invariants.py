"""Conjugation invariants assembled into a comparable signature.

Equal signatures are a necessary condition for conjugacy, never proof of
it; the conjugacy layer only trusts differences (as separators) and
explicit permutation witnesses (as conjugators).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .core import NotClosedError, RegularSubalgebra, closure_defect, is_closed
from .starcalc import (
    SupportVector,
    action_dim_seq,
    adjoint_image_pattern,
    col_action,
    derived_series_dims,
    diag_eigen_multiset,
    generic_max_rank,
    min_rank,
    nil_star,
    row_action,
)

# Comparison order for separate(); names double as JSON keys.
FIELD_ORDER = (
    ("dim", "dim"),
    ("nil_dim", "nilDim"),
    ("derived_dims", "derivedDims"),
    ("col_action_seq", "colActionSeq"),
    ("row_action_seq", "rowActionSeq"),
    ("max_rank", "maxRank"),
    ("min_rank", "minRank"),
    ("cartan_signature", "cartanSignature"),
    ("last_row_cartan_flag", "lastRowCartanFlag"),
)


@dataclass(frozen=True)
class CartanRecord:
    """Per-generator invariants of the adjoint action on the nil part."""

    eigen_multiset: tuple[int, ...]
    adj_col_dim: int
    adj_row_dim: int
    adj_max_rank: int

    def sort_key(self):
        return (self.eigen_multiset, self.adj_col_dim, self.adj_row_dim, self.adj_max_rank)

    def to_json(self):
        return {
            "eigenMultiset": list(self.eigen_multiset),
            "adjColDim": self.adj_col_dim,
            "adjRowDim": self.adj_row_dim,
            "adjMaxRank": self.adj_max_rank,
        }


@dataclass(frozen=True)
class InvariantSignature:
    dim: int
    nil_dim: int
    derived_dims: tuple[int, ...]
    col_action_seq: tuple[int, ...]
    row_action_seq: tuple[int, ...]
    max_rank: int
    min_rank: int
    cartan_signature: tuple[CartanRecord, ...]
    last_row_cartan_flag: bool

    def to_json(self):
        out = {}
        for attr, name in FIELD_ORDER:
            value = getattr(self, attr)
            if attr == "cartan_signature":
                out[name] = [rec.to_json() for rec in value]
            elif isinstance(value, tuple):
                out[name] = list(value)
            else:
                out[name] = value
        return out


def canonical_cartan_basis(algebra: RegularSubalgebra) -> tuple[tuple[int, ...], ...]:
    """Basis-independent generators of the diagonal part: the rational RREF
    of the generator matrix scaled to primitive integer vectors."""
    if not algebra.cartan_gens:
        return ()
    return linalg.rref_primitive(algebra.cartan_gens)


def root_vectors_in_span(algebra: RegularSubalgebra) -> tuple[tuple[int, ...], ...]:
    """Two-entry diagonal vectors e_p - e_q (p < q) lying in the diagonal
    span.  Simultaneous relabeling by sigma maps this set onto the set of
    the image span (up to irrelevant sign), which makes any multiset built
    over it an exact monomial-conjugation invariant; an RREF basis has no
    such equivariance because row reduction is coordinate-order sensitive.
    """
    if not algebra.cartan_gens:
        return ()
    n = algebra.n
    out = []
    for p in range(1, n):
        for q in range(p + 1, n + 1):
            v = [0] * n
            v[p - 1], v[q - 1] = 1, -1
            if linalg.in_span(v, algebra.cartan_gens):
                out.append(tuple(v))
    return tuple(out)


def _cartan_record(h: tuple[int, ...], algebra: RegularSubalgebra, seed: int) -> CartanRecord:
    pattern = adjoint_image_pattern(h, algebra)
    full = SupportVector.full(algebra.n)
    return CartanRecord(
        eigen_multiset=diag_eigen_multiset(h),
        adj_col_dim=col_action(pattern, full).size,
        adj_row_dim=row_action(full, pattern).size,
        adj_max_rank=generic_max_rank(pattern, seed),
    )


def _empty_row_anchored_flag(algebra: RegularSubalgebra) -> bool:
    """Whether the diagonal part reaches a coordinate whose pattern row is
    empty (for full and near-full nil parts that coordinate is n, so this
    is "some canonical generator has a nonzero last entry").

    The naive "nonzero n-th entry" reading is not preserved by monomial
    conjugation once sparse patterns are allowed, because nothing then ties
    coordinate n to the pattern; anchoring to empty rows restores exact
    equivariance under simultaneous relabeling.
    """
    if not algebra.cartan_gens:
        return False
    star = nil_star(algebra)
    empty_rows = [i for i in range(algebra.n) if star.rows[i] == 0]
    if not empty_rows:
        return False
    basis = canonical_cartan_basis(algebra)
    return any(any(v[i] != 0 for i in empty_rows) for v in basis)


@lru_cache(maxsize=None)
def signature(algebra: RegularSubalgebra, seed: int = 0) -> InvariantSignature:
    """Full invariant tuple of a closed subalgebra.

    Series and action sequences are taken on the maximal nilpotent part;
    dim and the rank fields see the whole algebra.  Deterministic for a
    fixed seed.
    """
    if not is_closed(algebra):
        raise NotClosedError(closure_defect(algebra))
    nil_part = algebra.nil_part()
    records = tuple(sorted(
        (_cartan_record(h, algebra, seed) for h in root_vectors_in_span(algebra)),
        key=CartanRecord.sort_key,
    ))
    if algebra.dim == 0:
        max_rank = 0
        min_rank_value = 0
    else:
        max_rank = generic_max_rank(algebra, seed)
        min_rank_value = min_rank(algebra)
    return InvariantSignature(
        dim=algebra.dim,
        nil_dim=algebra.nil_dim,
        derived_dims=tuple(derived_series_dims(nil_part)),
        col_action_seq=tuple(action_dim_seq(nil_part, "column")),
        row_action_seq=tuple(action_dim_seq(nil_part, "row")),
        max_rank=max_rank,
        min_rank=min_rank_value,
        cartan_signature=records,
        last_row_cartan_flag=_empty_row_anchored_flag(algebra),
    )


def separate(a: InvariantSignature, b: InvariantSignature) -> str | None:
    """Name of the first field (in the fixed order) where the signatures
    differ, or None if they are equal."""
    for attr, name in FIELD_ORDER:
        if getattr(a, attr) != getattr(b, attr):
            return name
    return None
