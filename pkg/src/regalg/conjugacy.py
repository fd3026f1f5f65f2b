"""Conjugacy decisions: permutation witnesses and invariant separation.

A monomial matrix (permutation times invertible diagonal) conjugates
E_ij to a nonzero multiple of E_{sigma(i),sigma(j)}, so spans of standard
basis elements move by the permutation alone; the witness space searched
here is the full symmetric group.  Absence of a permutation witness is
never reported as non-conjugacy: that verdict requires a separating
invariant, and pairs with equal signatures and no witness stay UNRESOLVED.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as iter_permutations

from . import linalg
from .core import (
    DimensionMismatchError,
    NotClosedError,
    RegularSubalgebra,
    closure_defect,
    is_closed,
)
from .families import FamilyLabel
from .invariants import InvariantSignature, separate, signature

PERM_SEARCH_MAX_N = 8

Perm = tuple[int, ...]  # sigma[i-1] is the image of i, values 1..n


class RecipeError(ValueError):
    """The requested pair is not covered by any explicit witness recipe."""


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose_perm(p: Perm, q: Perm) -> Perm:
    """Composition applying q first, then p."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def invert_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, image in enumerate(p):
        out[image - 1] = i + 1
    return tuple(out)


def transposition(n: int, a: int, b: int) -> Perm:
    out = list(range(1, n + 1))
    out[a - 1], out[b - 1] = b, a
    return tuple(out)


def perm_from_partial(n: int, mapping: dict[int, int]) -> Perm:
    """Extend an injective partial map on {1..n} to a permutation, sending
    the remaining sources to the remaining targets in increasing order."""
    targets = set(mapping.values())
    if len(targets) != len(mapping):
        raise ValueError(f"partial map is not injective: {mapping}")
    for x in list(mapping) + list(targets):
        if not 1 <= x <= n:
            raise ValueError(f"index {x} out of range for n={n}")
    free_targets = iter(sorted(set(range(1, n + 1)) - targets))
    out = []
    for i in range(1, n + 1):
        out.append(mapping[i] if i in mapping else next(free_targets))
    return tuple(out)


def _check_perm(sigma, n: int) -> Perm:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def permute_subalgebra(algebra: RegularSubalgebra, sigma) -> RegularSubalgebra | None:
    """Image of the subalgebra under simultaneous row/column relabeling.

    Returns None when some nil position lands below the diagonal, i.e. the
    image is no longer upper-triangular regular.  Diagonal sign factors of a
    monomial conjugation rescale basis elements without changing spans, so
    this captures every monomial conjugation exactly.
    """
    sigma = _check_perm(sigma, algebra.n)
    nil = set()
    for i, j in algebra.nil_set:
        si, sj = sigma[i - 1], sigma[j - 1]
        if si >= sj:
            return None
        nil.add((si, sj))
    gens = []
    for v in algebra.cartan_gens:
        w = [0] * algebra.n
        for idx, x in enumerate(v):
            w[sigma[idx] - 1] = x
        gens.append(tuple(w))
    return RegularSubalgebra(algebra.n, frozenset(nil), tuple(gens))


def same_algebra(a: RegularSubalgebra, b: RegularSubalgebra) -> bool:
    """Equality as subalgebras: identical nil sets and equal diagonal spans
    (compared through the canonical basis, not the stored generator lists)."""
    return (
        a.n == b.n
        and a.nil_set == b.nil_set
        and linalg.spans_equal(a.cartan_gens, b.cartan_gens)
    )


def _require_pair(a: RegularSubalgebra, b: RegularSubalgebra) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"operands have n={a.n} and n={b.n}")
    for x in (a, b):
        if not is_closed(x):
            raise NotClosedError(closure_defect(x))


def _witness_scan(a: RegularSubalgebra, b: RegularSubalgebra) -> Perm | None:
    """Exhaustive lexicographic scan for a permutation mapping a onto b."""
    n = a.n
    target_nil = b.nil_set
    target_span = linalg.rref_primitive(b.cartan_gens) if b.cartan_gens else ()
    nil = tuple(a.nil_set)
    gens = a.cartan_gens
    for sigma in iter_permutations(range(1, n + 1)):
        image = set()
        ok = True
        for i, j in nil:
            si, sj = sigma[i - 1], sigma[j - 1]
            if si >= sj:
                ok = False
                break
            image.add((si, sj))
        if not ok or image != target_nil:
            continue
        if gens or target_span:
            permuted = []
            for v in gens:
                w = [0] * n
                for idx, x in enumerate(v):
                    w[sigma[idx] - 1] = x
                permuted.append(w)
            if linalg.rref_primitive(permuted) != target_span:
                continue
        return tuple(sigma)
    return None


def perm_conjugate(
    a: RegularSubalgebra, b: RegularSubalgebra, seed: int = 0
) -> Perm | None:
    """First permutation (in lexicographic order) carrying a exactly onto b,
    or None when no permutation does.

    Signature equality is checked first as a cheap necessary condition;
    the scan itself covers all n! candidates (guarded at n <= 8).
    """
    _require_pair(a, b)
    if a.n > PERM_SEARCH_MAX_N:
        raise ValueError(f"witness search guarded at n <= {PERM_SEARCH_MAX_N}, got n={a.n}")
    if signature(a, seed) != signature(b, seed):
        return None
    return _witness_scan(a, b)


@dataclass(frozen=True)
class ConjugacyVerdict:
    kind: str  # "conjugate" | "distinct" | "unresolved"
    witness: Perm | None = None
    separator: str | None = None

    @property
    def is_conjugate(self) -> bool:
        return self.kind == "conjugate"

    def to_json(self):
        out: dict = {"verdict": self.kind.upper()}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.separator is not None:
            out["separator"] = self.separator
        return out


def conjugate_verdict(witness: Perm) -> ConjugacyVerdict:
    return ConjugacyVerdict("conjugate", witness=witness)


def distinct_verdict(separator: str) -> ConjugacyVerdict:
    return ConjugacyVerdict("distinct", separator=separator)


UNRESOLVED = ConjugacyVerdict("unresolved")


def decide(a: RegularSubalgebra, b: RegularSubalgebra, seed: int = 0) -> ConjugacyVerdict:
    """Conjugate(witness) when a permutation witness exists, Distinct(name)
    when some invariant separates, Unresolved otherwise.  A failed witness
    search alone never yields Distinct."""
    sigma = perm_conjugate(a, b, seed)
    if sigma is not None:
        image = permute_subalgebra(a, sigma)
        if image is None or not same_algebra(image, b):
            raise AssertionError("witness failed re-verification")
        return conjugate_verdict(sigma)
    name = separate(signature(a, seed), signature(b, seed))
    if name is not None:
        return distinct_verdict(name)
    return UNRESOLVED


@dataclass(frozen=True)
class ClassPartition:
    """Partition of a member list into conjugacy classes.

    classes holds member indices; every within-class consecutive pair has a
    verified witness edge, and every cross-class pair either appears in
    separators (with the first separating invariant) or in unresolved.
    """

    members: tuple[RegularSubalgebra, ...]
    classes: tuple[tuple[int, ...], ...]
    witness_edges: tuple[tuple[int, int, Perm], ...]
    separators: tuple[tuple[int, int, str], ...]
    unresolved: tuple[tuple[int, int], ...] = ()
    labels: tuple[str, ...] | None = None

    def class_of(self, idx: int) -> int:
        for c, members in enumerate(self.classes):
            if idx in members:
                return c
        raise KeyError(idx)

    def to_json(self):
        descs = [m.descriptor() for m in self.members]
        pair_key = lambda e: (e["a"], e["b"])  # noqa: E731
        classes = sorted(sorted(descs[i] for i in cls) for cls in self.classes)
        witnesses = sorted(
            [{"a": descs[i], "b": descs[j], "sigma": list(sigma)}
             for i, j, sigma in self.witness_edges],
            key=pair_key,
        )
        separators = sorted(
            [{"a": descs[i], "b": descs[j], "invariant": name}
             for i, j, name in self.separators],
            key=pair_key,
        )
        unresolved = sorted(
            [{"a": descs[i], "b": descs[j]} for i, j in self.unresolved],
            key=pair_key,
        )
        return {
            "classes": classes,
            "witnesses": witnesses,
            "separators": separators,
            "unresolved": unresolved,
        }


def classify_family(members, seed: int = 0) -> ClassPartition:
    """Group members into conjugacy classes by witness search, merging only
    on verified witnesses; signature comparison fills the separator table.

    Witness existence is an equivalence, so one failed scan against a
    component representative rules out the whole component.
    """
    members = tuple(members)
    if not members:
        return ClassPartition((), (), (), ())
    n = members[0].n
    for m in members:
        if m.n != n:
            raise DimensionMismatchError("members mix different n")
        if not is_closed(m):
            raise NotClosedError(closure_defect(m))
    sigs = [signature(m, seed) for m in members]

    groups: dict[InvariantSignature, list[int]] = {}
    for idx, sig in enumerate(sigs):
        groups.setdefault(sig, []).append(idx)

    components: list[list[int]] = []
    to_rep: dict[int, Perm] = {}  # witness: member -> its component representative
    for group in groups.values():
        group_comps: list[int] = []  # indices into components
        for idx in group:
            placed = False
            for comp_id in group_comps:
                rep = components[comp_id][0]
                sigma = _witness_scan(members[idx], members[rep])
                if sigma is not None:
                    components[comp_id].append(idx)
                    to_rep[idx] = sigma
                    placed = True
                    break
            if not placed:
                group_comps.append(len(components))
                components.append([idx])
                to_rep[idx] = identity_perm(n)

    classes = tuple(tuple(sorted(comp)) for comp in sorted(components, key=min))

    edges = []
    for cls in classes:
        for a, b in zip(cls, cls[1:]):
            sigma = compose_perm(invert_perm(to_rep[b]), to_rep[a])
            image = permute_subalgebra(members[a], sigma)
            if image is None or not same_algebra(image, members[b]):
                raise AssertionError("composed witness failed re-verification")
            edges.append((a, b, sigma))

    class_index = {}
    for c, cls in enumerate(classes):
        for idx in cls:
            class_index[idx] = c
    separators = []
    unresolved = []
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if class_index[i] == class_index[j]:
                continue
            name = separate(sigs[i], sigs[j])
            if name is None:
                unresolved.append((i, j))
            else:
                separators.append((i, j, name))

    return ClassPartition(
        members=members,
        classes=classes,
        witness_edges=tuple(edges),
        separators=tuple(separators),
        unresolved=tuple(unresolved),
    )


# ── explicit witness recipes ────────────────────────────────────────────
#
# Each recipe realises the index correspondence of the published
# transposition products directly as a permutation (partial index map
# completed to a bijection).  Composing the printed transpositions
# literally breaks down when their index pairs collide, so the
# correspondence form is used for every recipe and the caller verifies the
# result like any other candidate witness.


def _dim2_correspondence(a: FamilyLabel, b: FamilyLabel) -> dict[int, int]:
    kind = a.kind
    if kind == "A1":
        i, j, k, l = a.indices
        m, nn, s, t = b.indices
        return {i: m, j: nn, k: s, l: t}
    if kind == "A2":
        i, j, l = a.indices
        k, m, nn = b.indices
        return {i: k, j: m, l: nn}
    if kind == "A3":
        i, k, j = a.indices
        m, s, nn = b.indices
        return {i: m, k: s, j: nn}
    if kind == "B1":
        i, j, k = a.indices
        m, nn, l = b.indices
        return {i: m, j: nn, k: l, k + 1: l + 1}
    if kind in ("B2", "B3"):
        i, j, k = a.indices
        m, nn, l = b.indices
        # row of the unit sits at the diagonal index or one below it
        row_map = {k: l, k + 1: l + 1} if (i == k) == (m == l) else {k: l + 1, k + 1: l}
        row_map[j] = nn
        return row_map
    if kind == "B4":
        i, j, k = a.indices
        m, nn, l = b.indices
        col_map = {k: l, k + 1: l + 1} if (j == k) == (nn == l) else {k: l + 1, k + 1: l}
        col_map[i] = m
        return col_map
    if kind == "C1":
        k, l = a.indices
        m, nn = b.indices
        return {k: m, k + 1: m + 1, l: nn, l + 1: nn + 1}
    if kind == "C2":
        k, _ = a.indices
        m, _ = b.indices
        return {k: m, k + 1: m + 1, k + 2: m + 2}
    raise RecipeError(f"no intra-family recipe for kind {a.kind!r}")


_NIL_TRIPLE_KINDS = ("N", "NR", "NC")


def _triple_index(label: FamilyLabel) -> int | None:
    """Index i when the label belongs to the conjugate triple built around
    the i-th superdiagonal (unit pair, row pair, column pair removals)."""
    if label.kind == "N" and label.indices[1] == label.indices[0] + 1:
        return label.indices[0]
    if label.kind in ("NR", "NC"):
        return label.indices[0]
    return None


def _cycle_map(start: int, length: int) -> dict[int, int]:
    out = {start + t: start + t + 1 for t in range(length)}
    out[start + length] = start
    return out


def recipe_witness(a: FamilyLabel, b: FamilyLabel) -> Perm:
    """Composed permutation from the explicit recipe covering this pair:
    intra-family two-dimensional pairs, the codimension-two nil triples, and
    the column-to-row segment conjugation.  The caller verifies the result
    via permute_subalgebra."""
    if a.n != b.n:
        raise DimensionMismatchError(f"labels have n={a.n} and n={b.n}")
    n = a.n
    if a == b:
        return identity_perm(n)
    if a.kind in ("A1", "A2", "A3", "B1", "B2", "B3", "B4", "C1", "C2"):
        if b.kind != a.kind:
            raise RecipeError(f"no recipe across families {a.kind} and {b.kind}")
        return perm_from_partial(n, _dim2_correspondence(a, b))
    ti, tj = _triple_index(a), _triple_index(b)
    if ti is not None and tj is not None and ti == tj:
        i = ti
        moves = {
            ("NC", "N"): transposition(n, i + 1, i + 2),
            ("N", "NC"): transposition(n, i + 1, i + 2),
            ("N", "NR"): transposition(n, i, i + 1),
            ("NR", "N"): transposition(n, i, i + 1),
            ("NC", "NR"): perm_from_partial(n, _cycle_map(i, 2)),
            ("NR", "NC"): invert_perm(perm_from_partial(n, _cycle_map(i, 2))),
        }
        key = (a.kind, b.kind)
        if key in moves:
            return moves[key]
    if a.kind == "C" and b.kind == "R" and a.indices == b.indices and a.k == b.k:
        return perm_from_partial(n, _cycle_map(a.indices[0], a.k))
    if a.kind == "R" and b.kind == "C" and a.indices == b.indices and a.k == b.k:
        return invert_perm(perm_from_partial(n, _cycle_map(a.indices[0], a.k)))
    raise RecipeError(f"no recipe covers the pair {a.text()} / {b.text()}")
