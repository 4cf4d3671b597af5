"""Membership testing and detection for the leader-pair matrix classes.

A rank-t matrix belongs to the class named by leader sets (r, c) when its
leading minors along (r, c) are all nonzero and every minor whose row or
column set fails to dominate the corresponding leader prefix vanishes.
A matrix belongs to at most one such class, and may belong to none.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import IndexSet, IndexSetLike, Mat, iter_minor_layers, minor, rank
from .errors import SizeGuardError


@dataclass(frozen=True)
class ClassDesc:
    """Equal-cardinality row-leader and column-leader index sets."""

    r: IndexSet
    c: IndexSet

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", IndexSet.coerce(self.r))
        object.__setattr__(self, "c", IndexSet.coerce(self.c))
        if len(self.r) != len(self.c):
            raise ValueError(f"leader sets must have equal cardinality: {self.r!r}, {self.c!r}")


def _validate_desc(A: Mat, desc: ClassDesc) -> None:
    if desc.r and desc.r[-1] > A.nrows:
        raise ValueError(f"row leader {desc.r[-1]} out of range for {A.nrows}x{A.ncols}")
    if desc.c and desc.c[-1] > A.ncols:
        raise ValueError(f"column leader {desc.c[-1]} out of range for {A.nrows}x{A.ncols}")


def _guard(A: Mat, max_size: int) -> None:
    if min(A.nrows, A.ncols) > max_size:
        raise SizeGuardError(
            f"exhaustive minor enumeration refused for {A.nrows}x{A.ncols} "
            f"(min dimension > {max_size}); pass a larger max_size to override"
        )


def in_class_M(A: Mat, desc: ClassDesc, max_size: int = 8) -> bool:
    """Exhaustive class membership test.

    Checks rank, the chain of leading minors, and the vanishing of every
    minor of each size s <= t whose row or column set is not componentwise
    >= the length-s leader prefix.  Cost is exponential in min(m, n),
    hence the size guard.
    """
    _validate_desc(A, desc)
    _guard(A, max_size)
    t = len(desc.r)
    if rank(A) != t:
        return False
    for s, layer in iter_minor_layers(A, max_order=t):
        if s == 0:
            continue
        rp = desc.r.indices[:s]
        cp = desc.c.indices[:s]
        for (rows, cols), value in layer.items():
            dominates = all(i >= p for i, p in zip(rows, rp)) and all(
                j >= q for j, q in zip(cols, cp)
            )
            if not dominates:
                if value != 0:
                    return False
            elif rows == rp and cols == cp and value == 0:
                return False
    return True


def greedy_leaders(A: Mat) -> Optional[ClassDesc]:
    """Unverified candidate leader pair, grown one rank step at a time.

    At each step the scan picks the lexicographically first (i, j) beyond
    the previous leaders whose bordered leading minor is nonzero.  For a
    matrix that is in some class this provably finds its leaders, but the
    result is only trustworthy after `in_class_M` confirms it.
    """
    r: list[int] = []
    c: list[int] = []
    for _ in range(rank(A)):
        found = None
        for i in range((r[-1] if r else 0) + 1, A.nrows + 1):
            for j in range((c[-1] if c else 0) + 1, A.ncols + 1):
                if minor(A, r + [i], c + [j]) != 0:
                    found = (i, j)
                    break
            if found:
                break
        if found is None:
            return None
        r.append(found[0])
        c.append(found[1])
    return ClassDesc(IndexSet(r), IndexSet(c))


def detect_class(A: Mat, max_size: int = 8) -> Optional[ClassDesc]:
    """The unique class of A, or None when A belongs to no class.

    Greedy leader growth proposes a candidate; exhaustive verification by
    `in_class_M` is mandatory, so absence is reported rather than guessed.
    """
    desc = greedy_leaders(A)
    if desc is None:
        return None
    return desc if in_class_M(A, desc, max_size) else None
