"""Staircase (echelon) form predicates and the leader-indexed factor classes.

An upper echelon matrix has its rows' leftmost nonzero entries in strictly
increasing columns, with zero rows only at the bottom; "strict" means no
zero rows at all.  Lower echelon is the transposed picture on columns.
The classes checked by `in_class_L` / `in_class_U` pin the leading entry
of each column (resp. row) to a prescribed index list.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import IndexSet, IndexSetLike, Mat


@dataclass(frozen=True)
class EchelonReport:
    """Echelon verdict plus pivot positions.

    For upper form, `pivots` lists the column of each nonzero row's
    leftmost nonzero entry; for lower form, the row of each nonzero
    column's uppermost nonzero entry.  Empty when `is_echelon` is false.
    """

    is_echelon: bool
    is_strict: bool
    pivots: IndexSet


_NOT_ECHELON = EchelonReport(False, False, IndexSet())


def is_upper_echelon(U: Mat) -> EchelonReport:
    """Check the upper staircase pattern row by row."""
    leads: list[int] = []
    saw_zero_row = False
    for row in U.iter_rows():
        lead = next((j for j, x in enumerate(row, start=1) if x != 0), None)
        if lead is None:
            saw_zero_row = True
            continue
        if saw_zero_row:
            return _NOT_ECHELON
        if leads and lead <= leads[-1]:
            return _NOT_ECHELON
        leads.append(lead)
    return EchelonReport(True, not saw_zero_row, IndexSet(leads))


def is_lower_echelon(L: Mat) -> EchelonReport:
    """Check the lower staircase pattern column by column."""
    leads: list[int] = []
    saw_zero_col = False
    for j in range(1, L.ncols + 1):
        col = L.col(j)
        lead = next((i for i, x in enumerate(col, start=1) if x != 0), None)
        if lead is None:
            saw_zero_col = True
            continue
        if saw_zero_col:
            return _NOT_ECHELON
        if leads and lead <= leads[-1]:
            return _NOT_ECHELON
        leads.append(lead)
    return EchelonReport(True, not saw_zero_col, IndexSet(leads))


def in_class_L(L: Mat, r: IndexSetLike, starred: bool = False) -> bool:
    """True iff column j of L leads with a nonzero entry exactly at row r_j
    (zeros above it) for every j; `starred` further requires that leading
    entry to be 1.  Entries below the leader are unconstrained."""
    leaders = IndexSet.coerce(r)
    if L.ncols != len(leaders):
        raise ValueError(f"{L.nrows}x{L.ncols} matrix needs {L.ncols} leaders, got {len(leaders)}")
    if leaders and leaders[-1] > L.nrows:
        raise ValueError(f"leader row {leaders[-1]} out of range for {L.nrows} rows")
    for j, rj in enumerate(leaders, start=1):
        lead = L.entry(rj, j)
        if lead == 0 or (starred and lead != 1):
            return False
        if any(L.entry(i, j) != 0 for i in range(1, rj)):
            return False
    return True


def in_class_U(U: Mat, c: IndexSetLike) -> bool:
    """Row-wise dual of `in_class_L`: row i of U must lead with a nonzero
    entry exactly at column c_i, zeros to its left."""
    leaders = IndexSet.coerce(c)
    if U.nrows != len(leaders):
        raise ValueError(f"{U.nrows}x{U.ncols} matrix needs {U.nrows} leaders, got {len(leaders)}")
    if leaders and leaders[-1] > U.ncols:
        raise ValueError(f"leader column {leaders[-1]} out of range for {U.ncols} columns")
    for i, ci in enumerate(leaders, start=1):
        if U.entry(i, ci) == 0:
            return False
        if any(U.entry(i, j) != 0 for j in range(1, ci)):
            return False
    return True
