"""Star-pattern calculus: products, series, actions, generic ranks."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regalg.core import (
    DimensionMismatchError,
    NotClosedError,
    RegularSubalgebra,
    full_cartan,
    full_nil_set,
    h_pq_vector,
    h_vector,
)
from regalg.starcalc import (
    StarMatrix,
    SupportVector,
    action_dim_seq,
    adjoint_image_pattern,
    bool_mul,
    col_action,
    derived_series_dims,
    diag_eigen_multiset,
    generic_max_rank,
    min_rank,
    min_rank_detail,
    nil_star,
    row_action,
)

import bruteforce


def patterns(n):
    return st.builds(
        lambda s: StarMatrix.from_positions(n, s),
        st.sets(st.sampled_from(sorted(full_nil_set(n))), max_size=n * (n - 1) // 2),
    )


class TestStarMatrix:
    def test_nil_star_example(self):
        algebra = RegularSubalgebra(4, {(1, 3), (1, 4), (3, 4)}, ())
        star = nil_star(algebra)
        assert sorted(star.positions()) == [(1, 3), (1, 4), (3, 4)]
        assert star.render().splitlines() == [
            "0 0 * *",
            "0 0 0 0",
            "0 0 0 *",
            "0 0 0 0",
        ]

    def test_nil_star_empty_and_full(self):
        assert nil_star(RegularSubalgebra(3)).is_zero
        star = nil_star(RegularSubalgebra(3, full_nil_set(3), ()))
        assert star == StarMatrix.full_upper(3)

    def test_from_positions_range_check(self):
        with pytest.raises(ValueError):
            StarMatrix.from_positions(3, [(1, 4)])


class TestBoolMul:
    def test_full_upper_squared(self):
        square = bool_mul(StarMatrix.full_upper(4), StarMatrix.full_upper(4))
        assert sorted(square.positions()) == [(1, 3), (1, 4), (2, 4)]

    def test_zero_annihilates(self):
        x = StarMatrix.from_positions(3, [(1, 2), (2, 3)])
        assert bool_mul(x, StarMatrix.zeros(3)).is_zero
        assert bool_mul(StarMatrix.zeros(3), x).is_zero

    def test_single_path(self):
        x = StarMatrix.from_positions(3, [(1, 2)])
        y = StarMatrix.from_positions(3, [(2, 3)])
        assert bool_mul(x, y).positions() == [(1, 3)]
        assert bool_mul(y, x).is_zero

    def test_size_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            bool_mul(StarMatrix.zeros(3), StarMatrix.zeros(4))

    @settings(max_examples=60, deadline=None)
    @given(patterns(4), patterns(4), patterns(4))
    def test_associative(self, x, y, z):
        assert bool_mul(bool_mul(x, y), z) == bool_mul(x, bool_mul(y, z))

    @settings(max_examples=60, deadline=None)
    @given(patterns(4), patterns(4))
    def test_monotone(self, x, y):
        grown = StarMatrix(4, tuple(r | 1 for r in x.rows))  # add stars in column 1
        small = set(bool_mul(x, y).positions())
        big = set(bool_mul(grown, y).positions())
        assert small <= big


class TestActions:
    def test_col_action_missing_last_offdiagonal(self):
        algebra = RegularSubalgebra(4, full_nil_set(4) - {(3, 4)}, ())
        out = col_action(nil_star(algebra), SupportVector.full(4))
        assert out.indices() == [1, 2]

    def test_col_action_zero_vector(self):
        assert col_action(StarMatrix.full_upper(4), SupportVector.empty(4)).size == 0

    def test_col_action_full_upper(self):
        out = col_action(StarMatrix.full_upper(4), SupportVector.full(4))
        assert out.indices() == [1, 2, 3]

    def test_row_action_full_upper(self):
        out = row_action(SupportVector.full(4), StarMatrix.full_upper(4))
        assert out.indices() == [2, 3, 4]

    def test_row_action_zero(self):
        assert row_action(SupportVector.empty(4), StarMatrix.full_upper(4)).size == 0

    def test_row_action_single_star(self):
        out = row_action(SupportVector.full(3), StarMatrix.from_positions(3, [(1, 3)]))
        assert out.indices() == [3]

    def test_size_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            col_action(StarMatrix.zeros(3), SupportVector.full(4))

    @settings(max_examples=60, deadline=None)
    @given(patterns(5))
    def test_full_support_identities(self, x):
        nonempty_rows = [i for i in range(1, 6) if x.rows[i - 1]]
        assert col_action(x, SupportVector.full(5)).indices() == nonempty_rows
        nonempty_cols = sorted({j for _, j in x.positions()})
        assert row_action(SupportVector.full(5), x).indices() == nonempty_cols


class TestDerivedSeries:
    def test_full_solvable(self):
        algebra = RegularSubalgebra(4, full_nil_set(4), full_cartan(4))
        assert derived_series_dims(algebra) == [9, 6, 3, 0]

    def test_abelian_single_star(self):
        assert derived_series_dims(RegularSubalgebra(3, {(1, 3)}, ())) == [1, 0]

    def test_full_nilpotent(self):
        assert derived_series_dims(RegularSubalgebra(4, full_nil_set(4), ())) == [6, 3, 0]

    def test_not_closed_error(self):
        with pytest.raises(NotClosedError) as info:
            derived_series_dims(RegularSubalgebra(3, {(1, 2), (2, 3)}, ()))
        assert info.value.defects == [(1, 3)]

    def test_matches_span_bracket_oracle_nilpotent(self):
        from regalg.families import enum_all_nilpotent_oracle

        for n in (2, 3, 4):
            for algebra in enum_all_nilpotent_oracle(n):
                dims, _ = bruteforce.span_derived_series(algebra)
                assert derived_series_dims(algebra) == dims, algebra.descriptor()

    def test_matches_span_bracket_oracle_solvable(self):
        from regalg.families import enum_codim1, enum_codim2

        cases = [alg for _, alg in enum_codim1(4)] + [alg for _, alg in enum_codim2(4)]
        cases.append(RegularSubalgebra(4, full_nil_set(4), full_cartan(4)))
        cases.append(RegularSubalgebra(4, {(1, 4)}, (h_pq_vector(4, 2, 3),)))
        for algebra in cases:
            dims, _ = bruteforce.span_derived_series(algebra)
            assert derived_series_dims(algebra) == dims, algebra.descriptor()


class TestActionDimSeq:
    def test_full_nilpotent_column(self):
        algebra = RegularSubalgebra(4, full_nil_set(4), ())
        assert action_dim_seq(algebra, "column") == [3, 2, 1, 0]

    def test_abelian(self):
        algebra = RegularSubalgebra(4, {(2, 3)}, ())
        assert action_dim_seq(algebra, "column") == [1, 0]
        assert action_dim_seq(algebra, "row") == [1, 0]

    def test_missing_last_offdiagonal_column(self):
        algebra = RegularSubalgebra(4, full_nil_set(4) - {(3, 4)}, ())
        assert action_dim_seq(algebra, "column") == [2, 1, 0]

    def test_side_validation(self):
        with pytest.raises(ValueError):
            action_dim_seq(RegularSubalgebra(3), "sideways")

    def test_matches_exact_power_supports(self):
        from regalg.families import enum_all_nilpotent_oracle

        for algebra in enum_all_nilpotent_oracle(4):
            for side in ("column", "row"):
                assert action_dim_seq(algebra, side) == bruteforce.span_power_action_dims(
                    algebra, side
                ), (algebra.descriptor(), side)


class TestAdjointImagePattern:
    def test_h13_on_full(self):
        algebra = RegularSubalgebra(4, full_nil_set(4), ())
        pattern = adjoint_image_pattern(h_pq_vector(4, 1, 3), algebra)
        assert sorted(pattern.positions()) == [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]
        assert col_action(pattern, SupportVector.full(4)).size == 3

    def test_zero_vector(self):
        algebra = RegularSubalgebra(4, full_nil_set(4), ())
        assert adjoint_image_pattern((0, 0, 0, 0), algebra).is_zero

    def test_h1_on_full_n3(self):
        algebra = RegularSubalgebra(3, full_nil_set(3), ())
        pattern = adjoint_image_pattern(h_vector(3, 1), algebra)
        assert sorted(pattern.positions()) == [(1, 2), (1, 3), (2, 3)]

    def test_subset_of_nil_star(self):
        algebra = RegularSubalgebra(5, full_nil_set(5) - {(1, 2), (2, 5)}, ())
        for vec in (h_vector(5, 2), h_pq_vector(5, 1, 4), (2, -1, 0, 0, -1)):
            pattern = adjoint_image_pattern(vec, algebra)
            assert set(pattern.positions()) <= algebra.nil_set

    def test_rejects_non_traceless(self):
        with pytest.raises(ValueError):
            adjoint_image_pattern((1, 0, 0), RegularSubalgebra(3))


class TestGenericMaxRank:
    def test_shared_column(self):
        assert generic_max_rank(StarMatrix.from_positions(3, [(1, 3), (2, 3)])) == 1

    def test_zero_pattern(self):
        assert generic_max_rank(StarMatrix.zeros(4)) == 0

    def test_adjoint_case_separation(self):
        # near-full nil part missing the last superdiagonal unit: generators
        # e_2-e_4 and e_2-e_5 produce adjoint images of different max rank
        algebra = RegularSubalgebra(6, full_nil_set(6) - {(5, 6)}, ())
        low = adjoint_image_pattern(h_pq_vector(6, 2, 5), algebra)
        high = adjoint_image_pattern(h_pq_vector(6, 2, 4), algebra)
        assert generic_max_rank(high) == 4
        assert generic_max_rank(low) == 3

    def test_full_solvable_rank(self):
        algebra = RegularSubalgebra(4, full_nil_set(4), full_cartan(4))
        assert generic_max_rank(algebra) == 4

    def test_permutation_invariance(self):
        from itertools import permutations

        pattern = StarMatrix.from_positions(5, [(1, 2), (1, 5), (2, 4), (3, 4), (4, 5)])
        base = generic_max_rank(pattern)
        for sigma in permutations(range(1, 6)):
            moved = StarMatrix.from_positions(
                5, [(sigma[i - 1], sigma[j - 1]) for i, j in pattern.positions()]
            )
            assert generic_max_rank(moved) == base

    def test_seed_determinism(self):
        algebra = RegularSubalgebra(5, full_nil_set(5), full_cartan(5))
        assert generic_max_rank(algebra, seed=7) == generic_max_rank(algebra, seed=7)


class TestMinRank:
    def test_nil_member_gives_one(self):
        assert min_rank(RegularSubalgebra(4, {(1, 4)}, full_cartan(4))) == 1

    def test_single_h(self):
        assert min_rank(RegularSubalgebra(4, frozenset(), (h_vector(4, 2),))) == 2

    def test_pair_span(self):
        algebra = RegularSubalgebra(4, frozenset(), (h_vector(4, 1), h_vector(4, 3)))
        detail = min_rank_detail(algebra)
        assert detail.value == 2 and detail.confirmed

    def test_wide_vector_upper_bound(self):
        detail = min_rank_detail(RegularSubalgebra(4, frozenset(), ((1, 1, -1, -1),)))
        assert detail.value == 4 and detail.confirmed  # single generator: exact

    def test_zero_algebra_rejected(self):
        with pytest.raises(ValueError):
            min_rank(RegularSubalgebra(3))


class TestDiagEigenMultiset:
    def test_h2(self):
        assert diag_eigen_multiset(h_vector(4, 2)) == (-1, 0, 0, 1)

    def test_h13(self):
        assert diag_eigen_multiset(h_pq_vector(4, 1, 3)) == (-1, 0, 0, 1)

    def test_combination(self):
        v = tuple(2 * a + b for a, b in zip(h_vector(3, 1), h_vector(3, 2)))
        assert diag_eigen_multiset(v) == (-1, -1, 2)

    def test_rejects_non_traceless(self):
        with pytest.raises(ValueError):
            diag_eigen_multiset((1, 0, 0))
