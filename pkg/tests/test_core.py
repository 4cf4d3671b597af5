from fractions import Fraction
from itertools import combinations

import pytest

from conftest import det_cofactor, minor_cofactor, random_rational_matrix, seeded
from tnnlu import (
    IndexSet,
    Mat,
    ParseError,
    all_minors,
    as_scalar,
    delete_col,
    delete_row,
    det,
    format_matrix,
    format_scalar,
    indexset_leq,
    inversion_count,
    matmul,
    minor,
    parse_matrix,
    parse_scalar,
    rank,
    submatrix,
)

CRYER = Mat.from_rows([[0, 0, 0], [1, 0, 1], [1, 0, 1]])
A4 = Mat.from_rows([[0, 1, 2, 1], [0, 2, 4, 2], [0, 1, 2, 3], [0, 3, 6, 11]])


class TestIndexSet:
    def test_validation(self):
        assert tuple(IndexSet((1, 3, 7))) == (1, 3, 7)
        assert len(IndexSet()) == 0
        with pytest.raises(ValueError):
            IndexSet((3, 1))
        with pytest.raises(ValueError):
            IndexSet((1, 1))
        with pytest.raises(ValueError):
            IndexSet((0, 2))
        with pytest.raises(ValueError):
            IndexSet((1, -2))

    def test_leq_examples(self):
        assert indexset_leq([1, 3], [2, 4]) is True
        assert indexset_leq([1, 3], [1, 3]) is True
        assert indexset_leq([2, 3], [1, 4]) is False

    def test_leq_cardinality_mismatch(self):
        with pytest.raises(ValueError):
            indexset_leq([1], [1, 2])

    def test_leq_is_partial_order(self):
        universe = [IndexSet(c) for c in combinations(range(1, 5), 2)]
        for a in universe:
            assert indexset_leq(a, a)
            for b in universe:
                if indexset_leq(a, b) and indexset_leq(b, a):
                    assert a == b
                for c in universe:
                    if indexset_leq(a, b) and indexset_leq(b, c):
                        assert indexset_leq(a, c)

    def test_set_operations(self):
        a = IndexSet((1, 4))
        b = IndexSet((2, 3))
        assert a.disjoint_union(b) == IndexSet((1, 2, 3, 4))
        with pytest.raises(ValueError):
            a.disjoint_union(IndexSet((4, 5)))
        assert IndexSet((1, 4)).difference([4]) == IndexSet((1,))
        assert IndexSet((1, 2)).issubset([1, 2, 3])
        assert not IndexSet((1, 5)).issubset([1, 2, 3])


class TestSubmatrixAndMinor:
    def test_submatrix_cryer(self):
        assert submatrix(CRYER, [2, 3], [1, 3]) == Mat.from_rows([[1, 1], [1, 1]])

    def test_submatrix_degenerate(self):
        empty = submatrix(CRYER, [], [])
        assert (empty.nrows, empty.ncols) == (0, 0)
        eye = Mat.identity(3)
        assert submatrix(eye, [1, 2, 3], [1, 2, 3]) == eye

    def test_submatrix_out_of_range(self):
        with pytest.raises(IndexError):
            submatrix(CRYER, [4], [1])
        with pytest.raises(IndexError):
            submatrix(CRYER, [1], [5])

    def test_minor_examples(self):
        assert minor(CRYER, [2, 3], [1, 3]) == 0
        assert minor(CRYER, [], []) == 1
        assert minor(A4, [1, 4], [2, 4]) == 8
        # cross-check the frozen value against the naive oracle
        assert minor_cofactor(A4, [1, 4], [2, 4]) == 8

    def test_minor_cardinality_mismatch(self):
        with pytest.raises(ValueError):
            minor(A4, [1, 2], [1])

    def test_det_matches_cofactor_oracle(self):
        rng = seeded(101)
        for _ in range(60):
            n = rng.randint(0, 5)
            A = random_rational_matrix(rng, n, n)
            assert det(A) == det_cofactor(A.to_rows())

    def test_det_nonsquare(self):
        with pytest.raises(ValueError):
            det(Mat.zeros(2, 3))

    def test_minor_is_alternating(self):
        rng = seeded(77)
        for _ in range(20):
            A = random_rational_matrix(rng, 5, 5)
            sub = submatrix(A, [1, 3, 4], [2, 3, 5])
            rows = sub.to_rows()
            rows[0], rows[2] = rows[2], rows[0]
            swapped = Mat.from_rows(rows)
            assert det(swapped) == -det(sub)


class TestRankAndMatmul:
    def test_rank_examples(self):
        assert rank(CRYER) == 1
        assert rank(Mat.zeros(3, 3)) == 0
        assert rank(A4) == 2

    def test_matmul_outer_product_is_cryer(self):
        L = Mat.from_rows([[0], [1], [1]])
        U = Mat.from_rows([[1, 0, 1]])
        assert matmul(L, U) == CRYER

    def test_matmul_empty_inner_dimension(self):
        assert matmul(Mat.zeros(3, 0), Mat.zeros(0, 3)) == Mat.zeros(3, 3)

    def test_matmul_identity(self):
        B = Mat.from_rows([[1, 2, 3], [4, 5, 6]])
        assert matmul(Mat.identity(2), B) == B

    def test_matmul_shape_mismatch(self):
        with pytest.raises(ValueError):
            matmul(Mat.zeros(2, 3), Mat.zeros(2, 3))

    def test_rank_of_product_bounded(self):
        rng = seeded(11)
        for _ in range(25):
            A = random_rational_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
            B = random_rational_matrix(rng, A.ncols, rng.randint(1, 4))
            assert rank(matmul(A, B)) <= min(rank(A), rank(B))


class TestInversionCount:
    def test_examples(self):
        assert inversion_count([1], [2]) == 0
        assert inversion_count([3], [1, 2]) == 2
        assert inversion_count([2, 4], [1, 3]) == 3

    def test_matches_enumeration(self):
        rng = seeded(5)
        for _ in range(30):
            I = sorted(rng.sample(range(1, 8), rng.randint(0, 4)))
            J = sorted(rng.sample(range(1, 8), rng.randint(0, 4)))
            assert inversion_count(I, J) == sum(1 for i in I for j in J if i > j)


class TestDeletion:
    def test_delete_row_example(self):
        A = Mat.from_rows([[1, 0, 1], [0, 0, 0]])
        assert delete_row(A, 2) == Mat.from_rows([[1, 0, 1]])

    def test_delete_col_identity(self):
        assert delete_col(Mat.identity(3), 3) == Mat.from_rows([[1, 0], [0, 1], [0, 0]])

    def test_delete_to_zero_rows(self):
        A = Mat.from_rows([[1, 2, 3]])
        gone = delete_row(A, 1)
        assert (gone.nrows, gone.ncols) == (0, 3)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            delete_row(CRYER, 4)
        with pytest.raises(IndexError):
            delete_col(CRYER, 0)


class TestAllMinors:
    def test_matches_single_minor_calls(self):
        rng = seeded(42)
        for shape in ((3, 5), (4, 4)):
            A = random_rational_matrix(rng, *shape)
            table = all_minors(A)
            assert table[((), ())] == 1
            for (rows, cols), value in table.items():
                assert value == minor(A, rows, cols)

    def test_max_order_truncates(self):
        table = all_minors(A4, max_order=1)
        assert max(len(rows) for rows, _ in table) == 1


class TestScalarsAndText:
    def test_parse_format_scalar(self):
        assert parse_scalar("7") == 7
        assert parse_scalar("-3/6") == Fraction(-1, 2)
        assert format_scalar(Fraction(8, 4)) == "2"
        assert format_scalar(Fraction(-1, 2)) == "-1/2"
        for bad in ("1.5", "1/0", "1/-2", "x", "", "2/"):
            with pytest.raises(ParseError):
                parse_scalar(bad)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            as_scalar(0.5)
        with pytest.raises(TypeError):
            Mat(1, 1, [0.5])

    def test_entry_access_is_one_based(self):
        A = Mat.from_rows([[1, 2], [3, 4]])
        assert A.entry(1, 1) == 1
        assert A.entry(2, 1) == 3
        assert A.row(2) == (Fraction(3), Fraction(4))
        assert A.col(2) == (Fraction(2), Fraction(4))
        with pytest.raises(IndexError):
            A.entry(0, 1)
        with pytest.raises(IndexError):
            A.entry(1, 3)

    def test_matrix_text_round_trip(self):
        rng = seeded(9)
        for _ in range(15):
            A = random_rational_matrix(rng, rng.randint(0, 4), rng.randint(0, 4))
            assert parse_matrix(format_matrix(A)) == A

    def test_parse_matrix_example(self):
        A = parse_matrix("2 3\n1 0 1/2\n-2 3/4 5\n")
        assert A == Mat.from_rows([[1, 0, Fraction(1, 2)], [-2, Fraction(3, 4), 5]])

    def test_parse_matrix_errors(self):
        for text in (
            "",
            "2\n1 2\n3 4",
            "a b\n",
            "2 2\n1 2\n",
            "1 2\n1 2 3\n",
            "1 1\n0.5\n",
            "-1 2\n",
            "0 0\n1\n",
        ):
            with pytest.raises(ParseError):
                parse_matrix(text)

    def test_zero_dimension_round_trip(self):
        for A in (Mat.zeros(0, 3), Mat.zeros(3, 0), Mat.zeros(0, 0)):
            assert parse_matrix(format_matrix(A)) == A
