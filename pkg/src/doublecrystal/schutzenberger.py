"""Schutzenberger duals of straight tableaux via opposite-direction
exhaustion, and rotation-complements inside a rectangle.

A straight tableau's encoding has all raising moves of one kind exhausted;
exhausting the opposite (lowering) kind instead, bounded by the encoding's
extent, yields the matrix encoding the dual tableau, whose chain is read
from reverted partial margins.
"""

from .crystal_binary import DOWN, UP
from .decomposition import exhaust
from .matrices import BinaryMatrix, IntegralMatrix
from .shapes import (
    REVERSE,
    REVERSE_TRANSPOSE,
    SST,
    TRANSPOSE,
    Tableau,
    part,
    revert,
    sub,
    trim,
)

DUAL_FLAVOR = {
    SST: REVERSE,
    REVERSE: SST,
    TRANSPOSE: REVERSE_TRANSPOSE,
    REVERSE_TRANSPOSE: TRANSPOSE,
}


def _column_diffs(chain, rows: int, reverted: bool):
    """Matrix whose column j is chain[j] - chain[j+1] (decreasing chains)
    or chain[j+1] - chain[j], optionally reverted into `rows` slots."""
    cols = []
    for a, b in zip(chain, chain[1:]):
        big, small = (a, b) if sum(a) >= sum(b) else (b, a)
        d = sub(big, small)
        if reverted:
            d = tuple(part(d, rows - 1 - i) for i in range(rows))
        cols.append(tuple(part(d, i) for i in range(rows)))
    return tuple(zip(*cols)) if cols else ()


def _revert_delta(chain, rows: int):
    """Column j = revert(chain[j+1], rows) - revert(chain[j], rows) without
    sign assumptions (used for the reverse-to-forward directions)."""
    cols = []
    for a, b in zip(chain, chain[1:]):
        ra = [part(a, rows - 1 - i) for i in range(rows)]
        rb = [part(b, rows - 1 - i) for i in range(rows)]
        d = [abs(x - y) for x, y in zip(ra, rb)]
        cols.append(tuple(d))
    return tuple(zip(*cols)) if cols else ()


def dual(t: Tableau) -> Tableau:
    """The Schutzenberger dual: same weight, opposite (reverse) flavor.

    Forward flavors encode to a raising-exhausted matrix, which is then
    exhausted downward within its k stored rows; the dual chain is read as
    reverted partial row sums.  Reverse flavors run the inverse route.
    """
    if not t.is_straight():
        raise ValueError("the dual is defined for straight tableaux")
    shape = t.outer
    k = len(shape)
    n = len(t.chain) - 1
    if t.flavor == SST:
        # integral encoding: column j = chain[j+1] - chain[j]
        p = IntegralMatrix(_column_diffs(t.chain, k, reverted=False))
        pt, _ = exhaust(p, (DOWN,)) if k else (p, ())
        chain = tuple(
            revert(trim(sum(r[j:]) for r in pt.pad_to(k, n).rows), k)
            for j in range(n + 1)
        )
        return Tableau(REVERSE, chain)
    if t.flavor == REVERSE:
        ptilde = IntegralMatrix(_revert_delta(t.chain, k))
        p, _ = exhaust(ptilde, (UP,))
        chain = tuple(
            trim(sum(r[:j]) for r in p.pad_to(k, n).rows) for j in range(n + 1)
        )
        return Tableau(SST, chain)
    if t.flavor == REVERSE_TRANSPOSE:
        # binary encoding by columns: column j = chain[j] - chain[j+1]
        p = BinaryMatrix(_column_diffs(t.chain, k, reverted=False))
        pt, _ = exhaust(p, (DOWN,)) if k else (p, ())
        chain = tuple(
            revert(trim(sum(r[:j]) for r in pt.pad_to(k, n).rows), k)
            for j in range(n + 1)
        )
        return Tableau(TRANSPOSE, chain)
    # TRANSPOSE
    ptilde = BinaryMatrix(_revert_delta(t.chain, k))
    p, _ = exhaust(ptilde, (UP,))
    chain = tuple(
        trim(sum(r[j:]) for r in p.pad_to(k, n).rows) for j in range(n + 1)
    )
    return Tableau(REVERSE_TRANSPOSE, chain)


def rotate_complement(t: Tableau, rect: tuple[int, int]) -> Tableau:
    """Half-turn of the display inside the k x l rectangle: each chain
    member pi becomes rect - revert(pi, k).  Swaps forward and reverse."""
    k, l = rect
    chain = []
    for pi in t.chain:
        if len(pi) > k or part(pi, 0) > l:
            raise ValueError(f"shape {pi} does not fit in the {k} x {l} rectangle")
        rev = [part(pi, k - 1 - i) for i in range(k)]
        chain.append(trim(l - x for x in rev))
    flavor = DUAL_FLAVOR[t.flavor]
    return Tableau(flavor, tuple(chain))
