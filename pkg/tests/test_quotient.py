import pytest

from walkrank.graphs import adjacency_matrix, make_extended_dynkin, make_path
from walkrank.intmatrix import IntMatrix, rank_fraction_free, walk_matrix
from walkrank.quotient import (
    EquitablePartition,
    NotEquitableError,
    canonical_partition,
    characteristic_matrix,
    divisor_matrix,
    hat_walk_matrix,
    is_equitable,
)


def _cells(*groups):
    return EquitablePartition(tuple(frozenset(g) for g in groups))


class TestPartitionType:
    def test_rejects_empty_cell(self):
        with pytest.raises(ValueError):
            _cells({1, 2}, set())

    def test_rejects_overlap(self):
        with pytest.raises(ValueError):
            _cells({1, 2}, {2, 3})

    def test_rejects_no_cells(self):
        with pytest.raises(ValueError):
            EquitablePartition(())

    def test_vertex_set(self):
        assert _cells({1, 2}, {3}).vertex_set == frozenset({1, 2, 3})


class TestCanonicalPartition:
    def test_smallest(self):
        p = canonical_partition(4)
        assert p.cells == (frozenset({1, 2}), frozenset({3}), frozenset({4, 5}))

    def test_order8(self):
        p = canonical_partition(8)
        assert p.cell_count == 7
        assert p.cells[0] == frozenset({1, 2})
        assert p.cells[-1] == frozenset({8, 9})

    @pytest.mark.parametrize("n", range(4, 40))
    def test_cell_count(self, n):
        assert canonical_partition(n).cell_count == n - 1

    def test_rejects_small_order(self):
        with pytest.raises(ValueError):
            canonical_partition(3)


class TestIsEquitable:
    @pytest.mark.parametrize("n", range(4, 24))
    def test_canonical_partition_is_equitable(self, n):
        assert is_equitable(make_extended_dynkin(n), canonical_partition(n))

    def test_singleton_partition_always_equitable(self):
        g = make_extended_dynkin(6)
        p = _cells(*({v} for v in range(1, g.order + 1)))
        assert is_equitable(g, p)

    def test_path3_cases(self):
        # endpoints {1,3} each see one neighbor in {2}: equitable;
        # merging an endpoint with the middle vertex breaks the count
        g = make_path(3)
        assert is_equitable(g, _cells({1, 3}, {2}))
        assert not is_equitable(g, _cells({1, 2}, {3}))

    def test_rejects_cover_mismatch(self):
        with pytest.raises(ValueError):
            is_equitable(make_path(3), _cells({1, 2}))


class TestCharacteristicMatrix:
    def test_smallest_case(self):
        p = canonical_partition(4)
        m = characteristic_matrix(p, 5)
        assert m.to_rows() == [
            [1, 0, 0],
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [0, 0, 1],
        ]

    @pytest.mark.parametrize("n", range(4, 16))
    def test_each_row_has_one_entry(self, n):
        m = characteristic_matrix(canonical_partition(n), n + 1)
        assert all(sum(m.row(i)) == 1 for i in range(m.rows))

    @pytest.mark.parametrize("n", range(4, 16))
    def test_maps_ones_to_ones(self, n):
        m = characteristic_matrix(canonical_partition(n), n + 1)
        ones = IntMatrix(m.cols, 1, [1] * m.cols)
        assert (m @ ones).column(0) == (1,) * (n + 1)

    def test_rejects_cover_mismatch(self):
        with pytest.raises(ValueError):
            characteristic_matrix(canonical_partition(4), 6)


class TestDivisorMatrix:
    def test_smallest_case(self):
        g = make_extended_dynkin(4)
        b = divisor_matrix(g, canonical_partition(4))
        assert b.to_rows() == [[0, 1, 0], [2, 0, 2], [0, 1, 0]]

    def test_order8_band_structure(self):
        b = divisor_matrix(make_extended_dynkin(8), canonical_partition(8))
        assert b.row(0) == (0, 1, 0, 0, 0, 0, 0)
        assert b.row(1) == (2, 0, 1, 0, 0, 0, 0)
        assert b.row(6) == (0, 0, 0, 0, 0, 1, 0)
        assert b.row(5) == (0, 0, 0, 0, 1, 0, 2)

    @pytest.mark.parametrize("n", range(4, 33))
    def test_intertwining_identity(self, n):
        g = make_extended_dynkin(n)
        a = adjacency_matrix(g)
        part = canonical_partition(n)
        p = characteristic_matrix(part, n + 1)
        b = divisor_matrix(g, part)
        assert a @ p == p @ b

    @pytest.mark.parametrize("n", range(4, 25))
    def test_iterated_walk_vectors_factor_through_quotient(self, n):
        # the first n-1 walk-count columns all factor through the quotient
        g = make_extended_dynkin(n)
        part = canonical_partition(n)
        p = characteristic_matrix(part, n + 1)
        b = divisor_matrix(g, part)
        slab = walk_matrix(adjacency_matrix(g), width=n - 1)
        assert slab == p @ walk_matrix(b, width=n - 1)

    def test_not_equitable_reports_witness(self):
        g = make_path(3)
        with pytest.raises(NotEquitableError) as err:
            divisor_matrix(g, _cells({1, 2}, {3}))
        assert (err.value.cell_a, err.value.cell_b) == (1, 2)

    def test_rejects_cover_mismatch(self):
        with pytest.raises(ValueError):
            divisor_matrix(make_path(4), _cells({1, 2}, {3}))


class TestHatWalkMatrix:
    def test_order8_first_row(self):
        w = walk_matrix(adjacency_matrix(make_extended_dynkin(8)))
        assert hat_walk_matrix(w).row(0) == (1, 1, 3, 4, 11, 16, 43)

    @pytest.mark.parametrize("n", range(4, 33))
    def test_equals_quotient_walk_matrix(self, n):
        g = make_extended_dynkin(n)
        w = walk_matrix(adjacency_matrix(g))
        b = divisor_matrix(g, canonical_partition(n))
        assert hat_walk_matrix(w) == walk_matrix(b)

    @pytest.mark.parametrize("n", range(4, 16))
    def test_dimensions(self, n):
        w = walk_matrix(adjacency_matrix(make_extended_dynkin(n)))
        hat = hat_walk_matrix(w)
        assert (hat.rows, hat.cols) == (n - 1, n - 1)

    @pytest.mark.parametrize("n", range(4, 20))
    def test_rank_matches_formula(self, n):
        w = walk_matrix(adjacency_matrix(make_extended_dynkin(n)))
        assert rank_fraction_free(hat_walk_matrix(w)) == n // 2

    def test_rejects_small_input(self):
        with pytest.raises(ValueError):
            hat_walk_matrix(IntMatrix.identity(4))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            hat_walk_matrix(IntMatrix.zero(6, 5))
