"""Total nonnegativity testing, the zero-pattern check, and corpus generation.

A matrix is totally nonnegative (TNN) when every square minor of every
size is >= 0, and totally positive (TP) when every minor is > 0.  Testing
is brute-force by design: there is no cheap criterion covering the
singular case, and singular matrices are exactly the interesting ones
here.  The enumeration refuses matrices beyond the size guard.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .core import IndexSet, Mat, iter_minor_layers
from .errors import SizeGuardError

Witness = tuple[IndexSet, IndexSet, Fraction]


@dataclass(frozen=True)
class TnnReport:
    """Outcome of a minor-sign sweep.

    `witness` is present exactly when the test failed: the first offending
    (rows, cols, value) triple in the fixed scan order (size ascending,
    then lexicographic), so reports are reproducible.
    """

    is_tnn: bool
    witness: Optional[Witness] = None


def _guard(A: Mat, max_size: int) -> None:
    if min(A.nrows, A.ncols) > max_size:
        raise SizeGuardError(
            f"brute-force minor enumeration refused for {A.nrows}x{A.ncols} "
            f"(min dimension > {max_size}); pass a larger max_size to override"
        )


def is_tnn(A: Mat, max_size: int = 8) -> TnnReport:
    """Sweep all square minors for a negative one."""
    _guard(A, max_size)
    for s, layer in iter_minor_layers(A):
        if s == 0:
            continue
        for (rows, cols), value in layer.items():
            if value < 0:
                return TnnReport(False, (IndexSet(rows), IndexSet(cols), value))
    return TnnReport(True)


def is_tp(A: Mat, max_size: int = 8) -> TnnReport:
    """Variant demanding strict positivity: `is_tnn` is True iff every
    minor is > 0, and the witness is the first minor <= 0."""
    _guard(A, max_size)
    for s, layer in iter_minor_layers(A):
        if s == 0:
            continue
        for (rows, cols), value in layer.items():
            if value <= 0:
                return TnnReport(False, (IndexSet(rows), IndexSet(cols), value))
    return TnnReport(True)


def cauchon_check(A: Mat) -> Union[bool, tuple[int, int, int, int]]:
    """Zero-pattern test that every TNN matrix satisfies.

    Looks for rows i < k and columns j < l with a[i,j] = 0 but a[i,l] != 0
    and a[k,j] != 0 (a zero with nonzero entries both to its right and
    below).  Returns True when none exists, else the first violation in
    row-major scan order of the zero entry, as (i, k, j, l).  Such a
    pattern forces a negative 2x2 minor, which is what legitimizes the
    elimination pivot choice downstream.
    """
    rows = A.to_rows()
    for i in range(1, A.nrows + 1):
        for j in range(1, A.ncols + 1):
            if rows[i - 1][j - 1] != 0:
                continue
            k = next((k for k in range(i + 1, A.nrows + 1) if rows[k - 1][j - 1] != 0), None)
            if k is None:
                continue
            l = next((l for l in range(j + 1, A.ncols + 1) if rows[i - 1][l - 1] != 0), None)
            if l is None:
                continue
            return (i, k, j, l)
    return True


def _small_positive(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 3), rng.randint(1, 2))


def random_tnn(m: int, n: int, seed: int, factors: int = 12) -> Mat:
    """Deterministic seeded TNN test matrix, biased toward singular output.

    Starts from the rectangular identity and applies ``factors`` random
    factors, each one either a nonnegative bidiagonal elementary matrix
    (on the left or the right) or a nonnegative diagonal that may contain
    zeros.  Every factor is TNN, so the product is TNN; zero diagonal
    entries and the rectangular shape keep the rank low on purpose.  With
    ``factors`` = 0 the result is exactly the rectangular identity.
    """
    rng = random.Random(f"{seed}:{m}:{n}:{factors}")
    work = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(m)]
    for _ in range(factors):
        roll = rng.random()
        if roll < 0.3 or (m < 2 and n < 2):
            # diagonal factor, zeros allowed
            if rng.random() < 0.5 and m >= 1:
                i = rng.randint(1, m)
                d = Fraction(0) if rng.random() < 0.35 else _small_positive(rng)
                work[i - 1] = [d * x for x in work[i - 1]]
            elif n >= 1:
                j = rng.randint(1, n)
                d = Fraction(0) if rng.random() < 0.35 else _small_positive(rng)
                for row in work:
                    row[j - 1] = d * row[j - 1]
        else:
            lam = Fraction(rng.randint(0, 4), rng.randint(1, 3))
            if (rng.random() < 0.5 and m >= 2) or n < 2:
                i = rng.randint(1, m - 1)
                if rng.random() < 0.5:
                    # row i+1 += lam * row i
                    work[i] = [x + lam * y for x, y in zip(work[i], work[i - 1])]
                else:
                    work[i - 1] = [x + lam * y for x, y in zip(work[i - 1], work[i])]
            else:
                j = rng.randint(1, n - 1)
                if rng.random() < 0.5:
                    # col j += lam * col j+1
                    for row in work:
                        row[j - 1] = row[j - 1] + lam * row[j]
                else:
                    for row in work:
                        row[j] = row[j] + lam * row[j - 1]
    return Mat.from_rows(work, ncols=n)
