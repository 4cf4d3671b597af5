"""Exact rational scalars, index sets, matrices, minors, and rank.

All arithmetic in this package is exact: scalars are `fractions.Fraction`
values and there is no floating point anywhere.  Class membership and
elimination pivoting branch on exact zero tests of minors, which floats
cannot decide.

Public indices are 1-based throughout (rows, columns, and the contents of
index sets); internal storage is row-major and 0-based but never leaks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import ParseError

Scalar = Fraction
ScalarLike = Union[int, str, Fraction]

__all__ = [
    "Scalar",
    "ScalarLike",
    "IndexSet",
    "IndexSetLike",
    "Mat",
    "as_scalar",
    "parse_scalar",
    "format_scalar",
    "indexset_leq",
    "inversion_count",
    "submatrix",
    "minor",
    "det",
    "rank",
    "matmul",
    "delete_row",
    "delete_col",
    "all_minors",
    "iter_minor_layers",
    "parse_matrix",
    "format_matrix",
]


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact rational.

    Floats are rejected outright: they carry silent binary rounding and
    would poison exact zero tests downstream.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("exact rational expected, got bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def parse_scalar(token: str) -> Fraction:
    """Parse an integer or "p/q" token (q > 0) into an exact rational."""
    text = token.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            p, q = int(num), int(den)
        else:
            return Fraction(int(text))
    except ValueError:
        raise ParseError(f"not an exact rational: {token!r}") from None
    if q <= 0:
        raise ParseError(f"denominator must be positive: {token!r}")
    return Fraction(p, q)


def format_scalar(value: Fraction) -> str:
    """Render a rational as "p" (integer) or "p/q", the parseable form."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class IndexSet:
    """A strictly ascending tuple of 1-based indices; may be empty."""

    __slots__ = ("indices",)

    def __init__(self, indices: Iterable[int] = ()):
        idx = tuple(indices)
        for value in idx:
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"indices must be positive integers, got {value!r}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"indices must be strictly ascending, got {idx}")
        self.indices = idx

    @classmethod
    def coerce(cls, value: "IndexSetLike") -> "IndexSet":
        return value if isinstance(value, IndexSet) else cls(value)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __getitem__(self, k: int) -> int:
        return self.indices[k]

    def __contains__(self, value: object) -> bool:
        return value in self.indices

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IndexSet):
            return self.indices == other.indices
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.indices)

    def __repr__(self) -> str:
        return f"IndexSet({self.indices!r})"

    def prefix(self, count: int) -> "IndexSet":
        """The first ``count`` indices."""
        return IndexSet(self.indices[:count])

    def issubset(self, other: "IndexSetLike") -> bool:
        pool = set(IndexSet.coerce(other).indices)
        return all(i in pool for i in self.indices)

    def isdisjoint(self, other: "IndexSetLike") -> bool:
        pool = set(IndexSet.coerce(other).indices)
        return not any(i in pool for i in self.indices)

    def disjoint_union(self, other: "IndexSetLike") -> "IndexSet":
        other = IndexSet.coerce(other)
        if not self.isdisjoint(other):
            raise ValueError(f"index sets overlap: {self!r}, {other!r}")
        return IndexSet(sorted(self.indices + other.indices))

    def difference(self, other: "IndexSetLike") -> "IndexSet":
        pool = set(IndexSet.coerce(other).indices)
        return IndexSet(i for i in self.indices if i not in pool)


IndexSetLike = Union[IndexSet, Iterable[int]]


def indexset_leq(first: IndexSetLike, second: IndexSetLike) -> bool:
    """Componentwise order on equal-cardinality ascending index sets."""
    a = IndexSet.coerce(first)
    b = IndexSet.coerce(second)
    if len(a) != len(b):
        raise ValueError(f"index sets must have equal cardinality: {a!r}, {b!r}")
    return all(x <= y for x, y in zip(a, b))


def inversion_count(first: IndexSetLike, second: IndexSetLike) -> int:
    """Number of pairs (i, j) with i from the first set, j from the second,
    and i > j.  This is the sign exponent used by the Laplace relations."""
    a = IndexSet.coerce(first)
    b = IndexSet.coerce(second)
    return sum(1 for i in a for j in b if i > j)


class Mat:
    """Immutable dense matrix of exact rationals.

    Either dimension may be zero: a rank-0 decomposition produces genuine
    m-by-0 and 0-by-n factors.  Entry access is 1-based.
    """

    __slots__ = ("nrows", "ncols", "_cells")

    def __init__(self, nrows: int, ncols: int, entries: Iterable[ScalarLike]):
        if nrows < 0 or ncols < 0:
            raise ValueError(f"negative dimensions: {nrows}x{ncols}")
        cells = tuple(as_scalar(x) for x in entries)
        if len(cells) != nrows * ncols:
            raise ValueError(
                f"expected {nrows * ncols} entries for {nrows}x{ncols}, got {len(cells)}"
            )
        self.nrows = nrows
        self.ncols = ncols
        self._cells = cells

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[ScalarLike]], ncols: Optional[int] = None
    ) -> "Mat":
        rows = [list(row) for row in rows]
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("rows have unequal lengths")
            if ncols is not None and ncols != width:
                raise ValueError(f"declared {ncols} columns, rows have {width}")
        else:
            width = 0 if ncols is None else ncols
        return cls(len(rows), width, (x for row in rows for x in row))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Mat":
        return cls(nrows, ncols, [0] * (nrows * ncols))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> Fraction:
        """The (i, j) entry, 1-based."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexError(f"entry ({i},{j}) out of range for {self.nrows}x{self.ncols}")
        return self._cells[(i - 1) * self.ncols + (j - 1)]

    def row(self, i: int) -> tuple[Fraction, ...]:
        if not 1 <= i <= self.nrows:
            raise IndexError(f"row {i} out of range for {self.nrows}x{self.ncols}")
        start = (i - 1) * self.ncols
        return self._cells[start : start + self.ncols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        if not 1 <= j <= self.ncols:
            raise IndexError(f"column {j} out of range for {self.nrows}x{self.ncols}")
        return self._cells[j - 1 :: self.ncols] if self.ncols else ()

    def iter_rows(self) -> Iterator[tuple[Fraction, ...]]:
        for i in range(self.nrows):
            start = i * self.ncols
            yield self._cells[start : start + self.ncols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self.iter_rows()]

    def transpose(self) -> "Mat":
        return Mat(
            self.ncols,
            self.nrows,
            (self._cells[i * self.ncols + j] for j in range(self.ncols) for i in range(self.nrows)),
        )

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._cells)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Mat):
            return (
                self.nrows == other.nrows
                and self.ncols == other.ncols
                and self._cells == other._cells
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self._cells))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(format_scalar(x) for x in row) for row in self.iter_rows()
        )
        return f"Mat({self.nrows}x{self.ncols}: {body})"


def submatrix(A: Mat, rows: IndexSetLike, cols: IndexSetLike) -> Mat:
    """The |rows| x |cols| matrix picking the given 1-based rows and columns."""
    I = IndexSet.coerce(rows)
    J = IndexSet.coerce(cols)
    if I and I[-1] > A.nrows:
        raise IndexError(f"row index {I[-1]} out of range for {A.nrows}x{A.ncols}")
    if J and J[-1] > A.ncols:
        raise IndexError(f"column index {J[-1]} out of range for {A.nrows}x{A.ncols}")
    return Mat(len(I), len(J), (A.entry(i, j) for i in I for j in J))


def delete_row(A: Mat, i: int) -> Mat:
    """Copy of A with 1-based row i removed; a 1xn input yields a 0xn matrix."""
    if not 1 <= i <= A.nrows:
        raise IndexError(f"row {i} out of range for {A.nrows}x{A.ncols}")
    kept = (row for k, row in enumerate(A.iter_rows(), start=1) if k != i)
    return Mat(A.nrows - 1, A.ncols, (x for row in kept for x in row))


def delete_col(A: Mat, j: int) -> Mat:
    """Copy of A with 1-based column j removed."""
    if not 1 <= j <= A.ncols:
        raise IndexError(f"column {j} out of range for {A.nrows}x{A.ncols}")
    return Mat(
        A.nrows,
        A.ncols - 1,
        (x for row in A.iter_rows() for k, x in enumerate(row, start=1) if k != j),
    )


def matmul(A: Mat, B: Mat) -> Mat:
    """Exact product; an empty shared dimension yields the zero matrix."""
    if A.ncols != B.nrows:
        raise ValueError(f"cannot multiply {A.nrows}x{A.ncols} by {B.nrows}x{B.ncols}")
    arows = A.to_rows()
    bcols = [B.col(j) for j in range(1, B.ncols + 1)]
    zero = Fraction(0)
    return Mat(
        A.nrows,
        B.ncols,
        (sum((x * y for x, y in zip(row, col)), zero) for row in arows for col in bcols),
    )


def _integer_lift(A: Mat) -> tuple[list[list[int]], list[int]]:
    """Scale each row by the lcm of its denominators; returns (rows, scales)."""
    lifted = []
    scales = []
    for row in A.iter_rows():
        scale = 1
        for x in row:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
        lifted.append([x.numerator * (scale // x.denominator) for x in row])
        scales.append(scale)
    return lifted, scales


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix; mutates its argument.

    Every intermediate entry is itself a minor of the input, so all
    divisions are exact and coefficient growth stays polynomial.
    """
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri = rows[i]
            rk = rows[k]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[-1][-1]


def det(A: Mat) -> Fraction:
    """Exact determinant of a square matrix (1 for the 0x0 matrix)."""
    if A.nrows != A.ncols:
        raise ValueError(f"determinant of non-square {A.nrows}x{A.ncols} matrix")
    if A.nrows == 0:
        return Fraction(1)
    lifted, scales = _integer_lift(A)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(_bareiss_det(lifted), denom)


def minor(A: Mat, rows: IndexSetLike, cols: IndexSetLike) -> Fraction:
    """The minor on the given rows and columns; the empty minor is 1."""
    I = IndexSet.coerce(rows)
    J = IndexSet.coerce(cols)
    if len(I) != len(J):
        raise ValueError(f"minor needs equal-cardinality index sets: {I!r}, {J!r}")
    if not I:
        return Fraction(1)
    return det(submatrix(A, I, J))


def rank(A: Mat) -> int:
    """Exact rank over the rationals, by Gaussian elimination."""
    rows = A.to_rows()
    lead = 0
    for col in range(A.ncols):
        if lead == len(rows):
            break
        pivot = next((i for i in range(lead, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[lead], rows[pivot] = rows[pivot], rows[lead]
        p = rows[lead][col]
        for i in range(lead + 1, len(rows)):
            f = rows[i][col]
            if f:
                factor = f / p
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[lead])]
        lead += 1
    return lead


MinorKey = tuple[tuple[int, ...], tuple[int, ...]]


def iter_minor_layers(
    A: Mat, max_order: Optional[int] = None
) -> Iterator[tuple[int, dict[MinorKey, Fraction]]]:
    """Yield (size, {(rows, cols): minor}) for all square minors, size by size.

    Uses cofactor expansion along each row set's last row, reusing the
    previous layer, so enumerating every minor costs far less than
    independent determinants.  Keys are ascending 1-based index tuples;
    within a layer, insertion order is lexicographic in (rows, cols).
    """
    m, n = A.nrows, A.ncols
    top = min(m, n) if max_order is None else min(max_order, m, n)
    yield 0, {((), ()): Fraction(1)}
    lifted, scales = _integer_lift(A)
    prev: dict[MinorKey, int] = {((), ()): 1}
    for s in range(1, top + 1):
        layer_int: dict[MinorKey, int] = {}
        layer: dict[MinorKey, Fraction] = {}
        for I in combinations(range(1, m + 1), s):
            base = I[:-1]
            last_row = lifted[I[-1] - 1]
            denom = 1
            for i in I:
                denom *= scales[i - 1]
            for J in combinations(range(1, n + 1), s):
                acc = 0
                for pos, col in enumerate(J):
                    entry = last_row[col - 1]
                    if entry:
                        sub = prev[(base, J[:pos] + J[pos + 1 :])]
                        if (s + pos) % 2:
                            acc += entry * sub
                        else:
                            acc -= entry * sub
                layer_int[(I, J)] = acc
                layer[(I, J)] = Fraction(acc, denom)
        yield s, layer
        prev = layer_int


def all_minors(A: Mat, max_order: Optional[int] = None) -> dict[MinorKey, Fraction]:
    """All square minors up to ``max_order``, keyed by (rows, cols) tuples."""
    table: dict[MinorKey, Fraction] = {}
    for _, layer in iter_minor_layers(A, max_order):
        table.update(layer)
    return table


def parse_matrix(text: str) -> Mat:
    """Parse the matrix text format: a "m n" header line, then m rows of n
    whitespace-separated exact rationals.  Any other token is an error."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"header must be 'm n', got {lines[0]!r}")
    try:
        nrows, ncols = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"header must be 'm n', got {lines[0]!r}") from None
    if nrows < 0 or ncols < 0:
        raise ParseError(f"negative dimensions in header: {lines[0]!r}")
    data = [line for line in lines[1:] if line.strip()]
    if nrows == 0 or ncols == 0:
        if data:
            raise ParseError("unexpected entries after zero-dimension header")
        return Mat.zeros(nrows, ncols)
    if len(data) != nrows:
        raise ParseError(f"expected {nrows} rows, got {len(data)}")
    entries: list[Fraction] = []
    for line in data:
        tokens = line.split()
        if len(tokens) != ncols:
            raise ParseError(f"expected {ncols} entries per row, got {len(tokens)}: {line!r}")
        entries.extend(parse_scalar(tok) for tok in tokens)
    return Mat(nrows, ncols, entries)


def format_matrix(A: Mat) -> str:
    """Render in the text format accepted by `parse_matrix`; exact round trip."""
    lines = [f"{A.nrows} {A.ncols}"]
    if A.ncols:
        lines.extend(" ".join(format_scalar(x) for x in row) for row in A.iter_rows())
    return "\n".join(lines) + "\n"
