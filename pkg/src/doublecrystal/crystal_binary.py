"""Crystal operations on binary matrices.

A move interchanges one vertically or horizontally adjacent pair of
distinct bits, subject to prefix/suffix sum conditions that make at most
one move per direction possible between any two adjacent rows or columns.
"""

from typing import NamedTuple, Optional

from .matrices import BinaryMatrix

UP = "up"
DOWN = "down"
LEFT = "left"
RIGHT = "right"
DIRECTIONS = (UP, DOWN, LEFT, RIGHT)

ROWS = "rows"
COLS = "cols"


class MoveRecord(NamedTuple):
    direction: str
    index: int
    position: tuple[int, int]  # location of the bit '1' before the move


OPPOSITE = {UP: DOWN, DOWN: UP, LEFT: RIGHT, RIGHT: LEFT}


def interchangeable(m: BinaryMatrix, k: int, l: int, orientation: str) -> bool:
    """Whether the pair at (k,l)-(k+1,l) (vertical) or (k,l)-(k,l+1)
    (horizontal) may be interchanged."""
    if orientation == "vertical":
        if m[k, l] == m[k + 1, l]:
            return False
        # prefix sums strictly left of l: row k dominates row k+1
        s = 0
        for j in range(l - 1, -1, -1):
            s += m[k, j] - m[k + 1, j]
            if s < 0:
                return False
        # suffix sums strictly right of l: row k+1 dominates row k
        s = 0
        for j in range(l + 1, m.width):
            s += m[k, j] - m[k + 1, j]
            if s > 0:
                return False
        return True
    if orientation == "horizontal":
        if m[k, l] == m[k, l + 1]:
            return False
        # above k: column l+1 dominates column l
        s = 0
        for i in range(k - 1, -1, -1):
            s += m[i, l] - m[i, l + 1]
            if s > 0:
                return False
        # below k: column l dominates column l+1
        s = 0
        for i in range(k + 1, m.height):
            s += m[i, l] - m[i, l + 1]
            if s < 0:
                return False
        return True
    raise ValueError(f"unknown orientation: {orientation}")


def potential(m: BinaryMatrix, d: str, index: int) -> int:
    """Number of times the directional move can be applied successively."""
    rows = m.rows
    h, w = m.height, m.width
    if d in (UP, DOWN):
        i = index
        a = rows[i] if i < h else (0,) * w
        b = rows[i + 1] if i + 1 < h else (0,) * w
        best = s = 0
        if d == UP:
            for j in range(w - 1, -1, -1):
                s += b[j] - a[j]
                if s > best:
                    best = s
        else:
            for j in range(w):
                s += a[j] - b[j]
                if s > best:
                    best = s
        return best
    if d in (LEFT, RIGHT):
        j = index
        best = s = 0
        if d == LEFT:
            for i in range(h):
                s += m[i, j + 1] - m[i, j]
                if s > best:
                    best = s
        else:
            for i in range(h - 1, -1, -1):
                s += m[i, j] - m[i, j + 1]
                if s > best:
                    best = s
        return best
    raise ValueError(f"unknown direction: {d}")


def _move_position(m: BinaryMatrix, d: str, index: int) -> Optional[tuple[int, int]]:
    """Position (row, col) of the bit '1' moved by one application, if any."""
    h, w = m.height, m.width
    if d in (UP, DOWN):
        i = index
        a = tuple(m[i, j] for j in range(w))
        b = tuple(m[i + 1, j] for j in range(w))
        if d == UP:
            # maximal l attaining the suffix-sum maximum; bit '1' sits at (i+1, l)
            best = s = 0
            arg = None
            for j in range(w - 1, -1, -1):
                s += b[j] - a[j]
                if s > best:
                    best, arg = s, j
            if arg is None:
                return None
            return (i + 1, arg)
        # down: minimal l attaining the prefix-sum maximum; move at column l-1
        best = s = 0
        arg = None
        for j in range(w):
            s += a[j] - b[j]
            if s > best:
                best, arg = s, j + 1
        if arg is None:
            return None
        return (i, arg - 1)
    if d in (LEFT, RIGHT):
        j = index
        if d == LEFT:
            best = s = 0
            arg = None
            for i in range(h):
                s += m[i, j + 1] - m[i, j]
                if s > best:
                    best, arg = s, i + 1
            if arg is None:
                return None
            return (arg - 1, j + 1)
        best = s = 0
        arg = None
        for i in range(h - 1, -1, -1):
            s += m[i, j] - m[i, j + 1]
            if s > best:
                best, arg = s, i
        if arg is None:
            return None
        return (arg, j)
    raise ValueError(f"unknown direction: {d}")


def move(m: BinaryMatrix, d: str, index: int) -> Optional[tuple[BinaryMatrix, MoveRecord]]:
    """Apply one raising/lowering move; None when none is possible."""
    pos = _move_position(m, d, index)
    if pos is None:
        return None
    i1, j1 = pos  # bit '1' before the move
    if d == UP:
        i0, j0 = i1 - 1, j1
    elif d == DOWN:
        i0, j0 = i1 + 1, j1
    elif d == LEFT:
        i0, j0 = i1, j1 - 1
    else:
        i0, j0 = i1, j1 + 1
    assert m[i1, j1] == 1 and m[i0, j0] == 0, (d, index, pos, m)
    mm = m.pad_to(i0 + 1, j0 + 1)
    rows = list(mm.rows)
    for r in {i0, i1}:
        row = list(rows[r])
        if r == i1:
            row[j1] = 0
        if r == i0:
            row[j0] = 1
        rows[r] = tuple(row)
    return BinaryMatrix._wrap(tuple(rows)), MoveRecord(d, index, pos)


def paren_profile(m: BinaryMatrix, orientation: str, index: int):
    """Bracket string for a row pair (or column pair, read bottom to top).

    '(' marks a pair movable by the raising move of the orientation, ')'
    by the lowering move, '-' anything else.  Returns (string, unmatched
    open positions, unmatched close positions).
    """
    if orientation == ROWS:
        i = index
        pairs = [(m[i, j], m[i + 1, j]) for j in range(m.width)]
    elif orientation == COLS:
        j = index
        pairs = [(m[i, j], m[i, j + 1]) for i in range(m.height - 1, -1, -1)]
    else:
        raise ValueError(f"unknown orientation: {orientation}")
    sym = []
    for a, b in pairs:
        if (a, b) == (0, 1):
            sym.append("(")
        elif (a, b) == (1, 0):
            sym.append(")")
        else:
            sym.append("-")
    text = "".join(sym)
    stack, open_un, close_un = [], [], []
    for p, c in enumerate(text):
        if c == "(":
            stack.append(p)
        elif c == ")":
            if stack:
                stack.pop()
            else:
                close_un.append(p)
    open_un = stack
    return text, tuple(open_un), tuple(close_un)
