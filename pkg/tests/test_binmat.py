import pytest
from hypothesis import given
from hypothesis import strategies as st

from pglatin.binmat import (
    BinaryMatrix,
    BlockPartition,
    FormatError,
    Permutation,
    assemble,
    block,
    from_inc_text,
    is_permutation_matrix,
    permute,
    to_inc_text,
)


def small_matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.tuples(*([st.integers(0, 1)] * (r * c))).map(
                lambda data: BinaryMatrix(r, c, data)
            )
        )
    )


def permutations_of(n):
    return st.permutations(list(range(n))).map(lambda images: Permutation(tuple(images)))


class TestBinaryMatrix:
    def test_rejects_empty_dimensions(self):
        with pytest.raises(ValueError):
            BinaryMatrix(0, 3, ())
        with pytest.raises(ValueError):
            BinaryMatrix(3, 0, ())

    def test_rejects_wrong_data_length(self):
        with pytest.raises(ValueError):
            BinaryMatrix(2, 2, (1, 0, 1))

    def test_rejects_non_binary_entries(self):
        with pytest.raises(ValueError):
            BinaryMatrix(1, 3, (0, 2, 1))

    def test_from_rows_rejects_ragged(self):
        with pytest.raises(ValueError):
            BinaryMatrix.from_rows([[1, 0], [1]])
        with pytest.raises(ValueError):
            BinaryMatrix.from_rows([])

    def test_accessors(self):
        m = BinaryMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
        assert m[(0, 2)] == 1
        assert m[(1, 0)] == 0
        assert m.row(1) == (0, 1, 1)
        assert m.col(2) == (1, 1)
        assert m.row_sums() == (2, 2)
        assert m.col_sums() == (1, 1, 2)
        assert m.to_grid() == [[1, 0, 1], [0, 1, 1]]
        with pytest.raises(IndexError):
            m[(2, 0)]
        with pytest.raises(IndexError):
            m.row(5)
        with pytest.raises(IndexError):
            m.col(-1)

    def test_constructors(self):
        assert BinaryMatrix.zeros(2, 3).data == (0,) * 6
        assert BinaryMatrix.ones(2, 2).data == (1,) * 4
        assert BinaryMatrix.identity(3).to_grid() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_transpose(self):
        m = BinaryMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
        assert m.transpose().to_grid() == [[1, 0], [0, 1], [1, 1]]

    @given(small_matrices())
    def test_transpose_involution(self, m):
        assert m.transpose().transpose() == m

    def test_repr_is_compact(self):
        assert repr(BinaryMatrix.ones(7, 7)) == "BinaryMatrix(7x7)"


class TestPermutation:
    def test_validation(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))
        with pytest.raises(ValueError):
            Permutation((1, 2, 3))

    def test_identity_and_inverse(self):
        p = Permutation((2, 0, 1))
        assert p(0) == 2 and p.size == 3
        assert p.inverse().images == (1, 2, 0)
        assert not p.is_identity()
        assert Permutation.identity(4).is_identity()

    def test_to_matrix_places_row_ones(self):
        p = Permutation((1, 2, 0))
        assert p.to_matrix().to_grid() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
        assert is_permutation_matrix(p.to_matrix())

    @given(permutations_of(5))
    def test_inverse_composes_to_identity(self, p):
        q = p.inverse()
        assert all(q(p(i)) == i for i in range(5))


class TestPermute:
    def test_moves_cells(self):
        m = BinaryMatrix.from_rows([[1, 0], [0, 0]])
        out = permute(m, Permutation((1, 0)), Permutation((1, 0)))
        assert out.to_grid() == [[0, 0], [0, 1]]

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            permute(BinaryMatrix.ones(2, 3), Permutation((0, 1)), Permutation((0, 1)))

    @given(small_matrices(4, 4))
    def test_identity_permutation_is_noop(self, m):
        out = permute(m, Permutation.identity(m.rows), Permutation.identity(m.cols))
        assert out == m

    @given(
        st.tuples(*([st.integers(0, 1)] * 12)).map(lambda d: BinaryMatrix(3, 4, d)),
        permutations_of(3),
        permutations_of(4),
    )
    def test_round_trip_via_inverse(self, m, rp, cp):
        there = permute(m, rp, cp)
        assert permute(there, rp.inverse(), cp.inverse()) == m
        assert there[(rp(1), cp(2))] == m[(1, 2)]


class TestBlocks:
    def test_partition_validation(self):
        with pytest.raises(ValueError):
            BlockPartition((1, 3), (0, 3))
        with pytest.raises(ValueError):
            BlockPartition((0, 3, 3), (0, 3))
        with pytest.raises(ValueError):
            BlockPartition((0,), (0, 2))

    def test_from_sizes_and_spans(self):
        p = BlockPartition.from_sizes([3, 2, 2], [4, 3])
        assert p.row_cuts == (0, 3, 5, 7)
        assert p.col_cuts == (0, 4, 7)
        assert p.row_blocks == 3 and p.col_blocks == 2
        assert p.row_span(1) == (3, 5)
        assert p.col_span(0) == (0, 4)
        with pytest.raises(IndexError):
            p.row_span(3)

    def test_block_extraction(self):
        m = BinaryMatrix.from_rows([[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        p = BlockPartition.from_sizes([2, 2], [2, 2])
        assert block(m, p, 0, 0) == BinaryMatrix.ones(2, 2)
        assert block(m, p, 1, 1) == BinaryMatrix.identity(2)
        assert block(m, p, 0, 1) == BinaryMatrix.zeros(2, 2)

    def test_block_partition_must_cover(self):
        with pytest.raises(ValueError):
            block(BinaryMatrix.ones(3, 3), BlockPartition.from_sizes([2], [3]), 0, 0)

    def test_assemble_round_trip(self):
        m = BinaryMatrix.from_rows([[1, 0, 1], [0, 1, 1], [1, 1, 0]])
        p = BlockPartition.from_sizes([2, 1], [1, 2])
        grid = [[block(m, p, i, j) for j in range(2)] for i in range(2)]
        assert assemble(grid) == m

    def test_assemble_rejects_ragged(self):
        with pytest.raises(ValueError):
            assemble([[BinaryMatrix.ones(2, 2), BinaryMatrix.ones(1, 2)]])
        with pytest.raises(ValueError):
            assemble([[BinaryMatrix.ones(2, 2)], [BinaryMatrix.ones(2, 3)]])
        with pytest.raises(ValueError):
            assemble([])


def test_is_permutation_matrix():
    assert is_permutation_matrix(BinaryMatrix.identity(4))
    assert not is_permutation_matrix(BinaryMatrix.ones(2, 2))
    assert not is_permutation_matrix(BinaryMatrix.ones(1, 2))
    assert is_permutation_matrix(BinaryMatrix.from_rows([[0, 1], [1, 0]]))


class TestIncText:
    def test_known_rendering(self):
        m = BinaryMatrix.from_rows([[1, 0], [0, 1]])
        assert to_inc_text(m) == "2 2\n1 0\n0 1\n"

    @given(small_matrices(6, 6))
    def test_round_trip(self, m):
        assert from_inc_text(to_inc_text(m)) == m

    def test_rejects_bad_characters(self):
        with pytest.raises(FormatError):
            from_inc_text("2 2\n1 0\n0 x\n")

    def test_rejects_bad_header(self):
        with pytest.raises(FormatError):
            from_inc_text("2\n1 0\n")
        with pytest.raises(FormatError):
            from_inc_text("0 2\n")
        with pytest.raises(FormatError):
            from_inc_text("")

    def test_rejects_wrong_line_count(self):
        with pytest.raises(FormatError):
            from_inc_text("2 2\n1 0\n")

    def test_rejects_wrong_entry_count(self):
        with pytest.raises(FormatError):
            from_inc_text("1 3\n1 0\n")

    def test_rejects_non_binary_tokens(self):
        with pytest.raises(FormatError):
            from_inc_text("1 2\n1 2\n")
