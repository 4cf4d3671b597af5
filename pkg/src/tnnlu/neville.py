"""Neville elimination that deletes zero rows instead of shuffling them down.

The decomposition keeps a running factorization A = L·U (starting from
L = I, U = A) and repeats two moves until U is in strictly upper echelon
form:

* if U has a zero row, delete the bottom-most one together with the
  matching column of L (the product is unchanged);
* otherwise locate the leftmost column prefix that breaks the staircase
  and clear the lowest nonzero entry of its last column by subtracting a
  multiple of the row directly above it, applying the inverse update to L.

On totally nonnegative input every multiplier is nonnegative and both
factors stay totally nonnegative throughout.  States that a TNN matrix
can never reach (they would imply a negative 2x2 minor, see
`tnn.cauchon_check`) raise instead of producing a wrong answer.  A run
is fully described by its move list, which can be serialized, parsed
back, and replayed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .core import Mat, format_scalar, matmul, parse_scalar
from .echelon import is_lower_echelon, is_upper_echelon
from .errors import (
    MovePreconditionError,
    NotTotallyNonnegativeError,
    ParseError,
    ReplayError,
)
from .explicit import LUPair
from .mclass import ClassDesc
from .tnn import is_tnn

Rows = list[list[Fraction]]


@dataclass(frozen=True)
class DeleteRow:
    """Remove zero row i of U and column i of L."""

    i: int


@dataclass(frozen=True)
class Eliminate:
    """Subtract ``multiplier`` times row s of U from row s+1.

    t is the column whose lowest nonzero entry the move clears;
    multiplier equals u[s+1, t] / u[s, t] at the time of the move.
    """

    s: int
    t: int
    multiplier: Fraction


Move = Union[DeleteRow, Eliminate]


@dataclass(frozen=True)
class NevilleTrace:
    """The moves of one elimination run, optionally with a snapshot of
    (L, U) after each move."""

    moves: tuple[Move, ...]
    stages: Optional[tuple[tuple[Mat, Mat], ...]] = None


def _move_precondition_failure(rows: Rows, s: int, t: int) -> Optional[str]:
    """The first violated elimination-move precondition, or None."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if not (1 <= s and s + 1 <= m and 1 <= t <= n):
        return f"move position (s={s}, t={t}) out of range for {m}x{n}"
    if rows[s - 1][t - 1] == 0:
        return f"pivot u[{s},{t}] is zero"
    if rows[s][t - 1] == 0:
        return f"entry to clear u[{s + 1},{t}] is zero"
    for i in range(s, m + 1):
        for j in range(1, t):
            if rows[i - 1][j - 1] != 0:
                return f"u[{i},{j}] is nonzero left of the pivot column"
    for i in range(s + 2, m + 1):
        if rows[i - 1][t - 1] != 0:
            return f"u[{i},{t}] is nonzero below the entry being cleared"
    return None


def _apply_move(rows: Rows, s: int, lam: Fraction) -> None:
    rows[s] = [x - lam * y for x, y in zip(rows[s], rows[s - 1])]


def neville_move(U: Mat, s: int, t: int) -> Mat:
    """One elimination move on U: clear u[s+1, t] using the row above.

    Preconditions: u[s, t] and u[s+1, t] are nonzero, everything left of
    column t from row s down is zero, and nothing below row s+1 in column
    t is nonzero.  Violations raise naming the failed condition.
    """
    rows = U.to_rows()
    failure = _move_precondition_failure(rows, s, t)
    if failure is not None:
        raise MovePreconditionError(failure)
    lam = rows[s][t - 1] / rows[s - 1][t - 1]
    _apply_move(rows, s, lam)
    return Mat.from_rows(rows, ncols=U.ncols)


def _echelon_state(rows: Rows, width: int) -> tuple[bool, bool]:
    """(is_echelon, has_zero_row) for the first ``width`` columns."""
    last_lead = 0
    saw_zero = False
    ok = True
    for row in rows:
        lead = next((j for j in range(1, width + 1) if row[j - 1] != 0), None)
        if lead is None:
            saw_zero = True
        elif saw_zero or lead <= last_lead:
            ok = False
            break
        else:
            last_lead = lead
    return ok, saw_zero


def _find_move(rows: Rows, ncols: int) -> tuple[int, int, Fraction]:
    """Locate the next elimination move (s, t, multiplier).

    Assumes no zero rows and that the full matrix is not in upper echelon
    form.  Any structural state a TNN matrix cannot reach raises
    NotTotallyNonnegativeError.
    """
    m = len(rows)
    leftmost = next(
        (j for j in range(1, ncols + 1) if any(row[j - 1] != 0 for row in rows)), None
    )
    if leftmost is not None and rows[0][leftmost - 1] == 0:
        raise NotTotallyNonnegativeError(
            "input not totally nonnegative: "
            f"leftmost nonzero column {leftmost} has a zero uppermost entry"
        )
    t = next(t for t in range(1, ncols + 1) if not _echelon_state(rows, t)[0])
    s = next(
        (s for s in range(m - 1, 0, -1) if rows[s - 1][t - 1] != 0 and rows[s][t - 1] != 0),
        None,
    )
    if s is None:
        raise NotTotallyNonnegativeError(
            f"input not totally nonnegative: column {t} breaks the staircase "
            "but has no adjacent nonzero pair"
        )
    failure = _move_precondition_failure(rows, s, t)
    if failure is not None:
        raise NotTotallyNonnegativeError(f"input not totally nonnegative: {failure}")
    return s, t, rows[s][t - 1] / rows[s - 1][t - 1]


def _snapshot(work_l: Rows, work_u: Rows, width: int, ncols: int) -> tuple[Mat, Mat]:
    return Mat.from_rows(work_l, ncols=width), Mat.from_rows(work_u, ncols=ncols)


def _read_class(L: Mat, U: Mat) -> ClassDesc:
    lrep = is_lower_echelon(L)
    urep = is_upper_echelon(U)
    if not (lrep.is_strict and urep.is_strict):
        raise NotTotallyNonnegativeError(
            "input not totally nonnegative: elimination finished without echelon factors"
        )
    return ClassDesc(lrep.pivots, urep.pivots)


def neville_decompose(
    A: Mat,
    record_stages: bool = False,
    *,
    check_tnn: bool = True,
    check_invariants: bool = False,
    max_size: int = 8,
) -> tuple[LUPair, NevilleTrace]:
    """Run the elimination on a totally nonnegative matrix.

    Total nonnegativity is verified brute-force up front when the matrix
    is small enough (and ``check_tnn`` is left on); beyond the size guard
    it is enforced dynamically, move by move.  With ``check_invariants``
    the running product L·U is compared against A after every move.
    """
    if check_tnn and min(A.nrows, A.ncols) <= max_size:
        report = is_tnn(A, max_size=max_size)
        if not report.is_tnn:
            rows, cols, value = report.witness
            raise NotTotallyNonnegativeError(
                f"input not totally nonnegative: minor [{list(rows)}|{list(cols)}] = "
                f"{format_scalar(value)}"
            )
    work_u = A.to_rows()
    work_l = Mat.identity(A.nrows).to_rows()
    width = A.nrows
    moves: list[Move] = []
    stages: list[tuple[Mat, Mat]] = []

    while True:
        zero_rows = [k for k in range(1, width + 1) if all(x == 0 for x in work_u[k - 1])]
        if not zero_rows and _echelon_state(work_u, A.ncols)[0]:
            break
        if zero_rows:
            i = zero_rows[-1]
            del work_u[i - 1]
            for lrow in work_l:
                del lrow[i - 1]
            width -= 1
            moves.append(DeleteRow(i))
        else:
            s, t, lam = _find_move(work_u, A.ncols)
            _apply_move(work_u, s, lam)
            for lrow in work_l:
                lrow[s - 1] = lrow[s - 1] + lam * lrow[s]
            moves.append(Eliminate(s, t, lam))
        if record_stages or check_invariants:
            Lm, Um = _snapshot(work_l, work_u, width, A.ncols)
            if check_invariants and matmul(Lm, Um) != A:
                raise RuntimeError(f"invariant violated after move {len(moves)}: L*U != A")
            if record_stages:
                stages.append((Lm, Um))

    Lm, Um = _snapshot(work_l, work_u, width, A.ncols)
    if matmul(Lm, Um) != A:
        raise NotTotallyNonnegativeError(
            "input not totally nonnegative: elimination lost the factorization"
        )
    pair = LUPair(Lm, Um, _read_class(Lm, Um))
    trace = NevilleTrace(tuple(moves), tuple(stages) if record_stages else None)
    return pair, trace


def replay(A: Mat, trace: NevilleTrace) -> LUPair:
    """Reapply a recorded move list to A; must reproduce the original output.

    Each move is validated against the current state (is the row really
    zero?  does the multiplier match?), so a trace from a different matrix
    fails with the offending step index instead of fabricating factors.
    """
    work_u = A.to_rows()
    work_l = Mat.identity(A.nrows).to_rows()
    width = A.nrows
    for step, move in enumerate(trace.moves, start=1):
        if isinstance(move, DeleteRow):
            if not 1 <= move.i <= width:
                raise ReplayError(f"step {step}: row {move.i} out of range")
            if any(x != 0 for x in work_u[move.i - 1]):
                raise ReplayError(f"step {step}: row {move.i} is not a zero row")
            del work_u[move.i - 1]
            for lrow in work_l:
                del lrow[move.i - 1]
            width -= 1
        else:
            failure = _move_precondition_failure(work_u, move.s, move.t)
            if failure is not None:
                raise ReplayError(f"step {step}: {failure}")
            lam = work_u[move.s][move.t - 1] / work_u[move.s - 1][move.t - 1]
            if lam != move.multiplier:
                raise ReplayError(
                    f"step {step}: multiplier {format_scalar(move.multiplier)} does not "
                    f"match state value {format_scalar(lam)}"
                )
            _apply_move(work_u, move.s, lam)
            for lrow in work_l:
                lrow[move.s - 1] = lrow[move.s - 1] + lam * lrow[move.s]
    Lm, Um = _snapshot(work_l, work_u, width, A.ncols)
    if not is_upper_echelon(Um).is_strict:
        raise ReplayError("trace does not finish the elimination")
    if matmul(Lm, Um) != A:
        raise ReplayError("replayed factors do not multiply back to the input")
    return LUPair(Lm, Um, _read_class(Lm, Um))


def format_trace(trace: NevilleTrace) -> str:
    """One move per line: "D i" or "E s t p/q", with exact rationals."""
    lines = []
    for move in trace.moves:
        if isinstance(move, DeleteRow):
            lines.append(f"D {move.i}")
        else:
            lines.append(f"E {move.s} {move.t} {format_scalar(move.multiplier)}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_trace(text: str) -> NevilleTrace:
    """Inverse of `format_trace`; stages are not serialized."""
    moves: list[Move] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        try:
            if tokens[0] == "D" and len(tokens) == 2:
                moves.append(DeleteRow(int(tokens[1])))
                continue
            if tokens[0] == "E" and len(tokens) == 4:
                moves.append(Eliminate(int(tokens[1]), int(tokens[2]), parse_scalar(tokens[3])))
                continue
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad trace line {line!r}") from exc
        raise ParseError(f"line {lineno}: bad trace line {line!r}")
    return NevilleTrace(tuple(moves))
