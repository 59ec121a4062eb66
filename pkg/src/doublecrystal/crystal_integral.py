"""Crystal operations on integral matrices.

The basic operation transfers units between adjacent entries; legality
compares staggered partial sums (row i against row i+1 shifted one column,
and transposed for column moves).  Unit transfers in a fixed direction
between a fixed pair of rows or columns happen at a unique position.
"""

from typing import NamedTuple, Optional

from .crystal_binary import DOWN, LEFT, RIGHT, UP
from .matrices import IntegralMatrix

ROWS = "rows"
COLS = "cols"


class TransferRecord(NamedTuple):
    direction: str
    index: int
    at: int  # column (row moves) or row (column moves) of the transfer
    amount: int = 1


def transfer_legal(m: IntegralMatrix, axis: str, pair: int, at: int, amount: int) -> bool:
    """Literal legality test for transferring `amount` units (sign = sense).

    axis=rows: between rows pair,pair+1 in column `at`; positive amounts
    move up.  axis=cols: between columns pair,pair+1 in row `at`; positive
    amounts move left.
    """
    if amount == 0:
        raise ValueError("amount must be nonzero")
    if axis == COLS:
        return transfer_legal(m.transpose(), ROWS, pair, at, amount)
    if axis != ROWS:
        raise ValueError(f"unknown axis: {axis}")
    k, l, a = pair, at, amount
    w = m.width
    if l == 0:
        if m[k + 1, 0] < a:
            return False
    else:
        s = 0
        for j in range(l - 1, -1, -1):
            s += m[k + 1, j + 1] - m[k, j]
            if s < max(a, 0):
                return False
    s = 0
    for lp in range(l + 1, max(w, l + 1) + 2):
        s += m[k, lp - 1] - m[k + 1, lp]
        if s < max(-a, 0):
            return False
    return True


def potential(m: IntegralMatrix, d: str, index: int) -> int:
    """Number of successive unit transfers possible in the direction."""
    if d in (LEFT, RIGHT):
        return potential(m.transpose(), UP if d == LEFT else DOWN, index)
    if d not in (UP, DOWN):
        raise ValueError(f"unknown direction: {d}")
    i = index
    w = m.width
    if d == UP:
        best = s = m[i + 1, 0]
        for l in range(w):
            s += m[i + 1, l + 1] - m[i, l]
            if s > best:
                best = s
        return max(best, 0)
    best = s = 0
    for l in range(w - 1, -1, -1):
        s += m[i, l] - m[i + 1, l + 1]
        if s > best:
            best = s
    return best


def _transfer_position(m: IntegralMatrix, d: str, index: int) -> Optional[int]:
    """Column (for row moves) of the unique legal unit transfer, if any."""
    i = index
    w = m.width
    if d == UP:
        best = s = m[i + 1, 0]
        arg = 0
        for l in range(w):
            s += m[i + 1, l + 1] - m[i, l]
            if s > best:
                best, arg = s, l + 1  # minimal attaining index
        return arg if best > 0 else None
    if d == DOWN:
        best = s = 0
        arg = None
        for l in range(w - 1, -1, -1):
            s += m[i, l] - m[i + 1, l + 1]
            if s > best:
                best, arg = s, l  # maximal attaining index
        return arg
    raise ValueError(f"unknown direction: {d}")


def move(m: IntegralMatrix, d: str, index: int) -> Optional[tuple[IntegralMatrix, TransferRecord]]:
    """Apply one unit transfer in the direction; None when none is legal."""
    if d in (LEFT, RIGHT):
        res = move(m.transpose(), UP if d == LEFT else DOWN, index)
        if res is None:
            return None
        mt, rec = res
        return mt.transpose(), TransferRecord(d, index, rec.at)
    l = _transfer_position(m, d, index)
    if l is None:
        return None
    i = index
    if d == UP:
        src, dst = (i + 1, l), (i, l)
    else:
        src, dst = (i, l), (i + 1, l)
    assert m[src] >= 1, (d, index, l, m)
    mm = m.pad_to(max(src[0], dst[0]) + 1, l + 1)
    rows = list(mm.rows)
    for r in {src[0], dst[0]}:
        row = list(rows[r])
        if r == src[0]:
            row[src[1]] -= 1
        if r == dst[0]:
            row[dst[1]] += 1
        rows[r] = tuple(row)
    return IntegralMatrix._wrap(tuple(rows)), TransferRecord(d, index, l)


def paren_profile(m: IntegralMatrix, axis: str, index: int):
    """Bracket string for a pair of rows (transpose first for columns).

    Per column j, emit m[i+1,j] symbols ')' then m[i,j] symbols '(' so
    that '(' units of row i may match ')' units of row i+1 one column to
    the right.  Unmatched ')' count the up potential, unmatched '(' the
    down potential.  Returns (string, column separator positions,
    unmatched '(' positions, unmatched ')' positions).
    """
    if axis == COLS:
        return paren_profile(m.transpose(), ROWS, index)
    if axis != ROWS:
        raise ValueError(f"unknown axis: {axis}")
    i = index
    sym = []
    seps = []
    for j in range(m.width):
        sym.extend(")" * m[i + 1, j])
        sym.extend("(" * m[i, j])
        seps.append(len(sym))
    text = "".join(sym)
    stack, close_un = [], []
    for p, c in enumerate(text):
        if c == "(":
            stack.append(p)
        else:
            if stack:
                stack.pop()
            else:
                close_un.append(p)
    return text, tuple(seps[:-1] if seps else ()), tuple(stack), tuple(close_un)
