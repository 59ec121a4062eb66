"""The edge symbol, alternating-sum expressions for the skew Schur scalar
product, Littlewood-Richardson counts, and the crystal-ladder cancellation
involutions.

The four summation stages per mode (brute, tab_first, lr_first,
fully_reduced) all evaluate the same scalar product; sums are taken over
matrices supported in a finite box, with a stabilization check that the
value is unchanged when the box grows.
"""

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from . import crystal_binary as cb
from . import crystal_integral as ci
from .crystal_binary import DOWN, LEFT, RIGHT, UP
from .matrices import (
    BINARY,
    LR,
    TABLEAU,
    BinaryMatrix,
    IntegralMatrix,
    Matrix,
    condition,
    encode,
    mode_of,
)
from .shapes import (
    SST,
    SkewShape,
    Tableau,
    add,
    conjugate,
    is_partition,
    part,
    trim,
)

BRUTE = "brute"
TAB_FIRST = "tab_first"
LR_FIRST = "lr_first"
FULLY_REDUCED = "fully_reduced"
STAGES = (BRUTE, TAB_FIRST, LR_FIRST, FULLY_REDUCED)


class BoxTooSmall(ValueError):
    """The enumeration box failed the stabilization check."""


class NotCancellable(ValueError):
    """The matrix satisfies the condition, so no cancellation applies."""


def edge_symbol(alpha, lam) -> int:
    """Straightening sign of the composition alpha relative to lam.

    Shift by the staircase (beta_i = alpha_i - i); a repeated value gives 0,
    otherwise the sign of the sorting permutation times the indicator that
    the sorted value is the staircase-shifted lam.
    """
    alpha, lam = trim(alpha), trim(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    n = max(len(alpha), len(lam))
    beta = [part(alpha, i) - i for i in range(n)]
    if len(set(beta)) < n:
        return 0
    if sorted(beta, reverse=True) != [part(lam, i) - i for i in range(n)]:
        return 0
    inv = sum(
        1 for i in range(n) for j in range(i + 1, n) if beta[i] < beta[j]
    )
    return -1 if inv % 2 else 1


def _hstrips_above(p, t, cap):
    """Partitions q with p <=h q, q contained in cap, |q| = |p| + t."""
    cap = trim(cap)
    n = len(cap)

    def rec(i, budget, prev):
        if i == n:
            if budget == 0:
                yield ()
            return
        lo = part(p, i)
        hi = min(part(cap, i), prev, lo + budget)
        for v in range(hi, lo - 1, -1):
            for rest in rec(i + 1, budget - (v - lo), min(v, part(p, i))):
                yield (v,) + rest

    if t < 0:
        return
    for q in rec(0, t, cap[0] if cap else 0):
        yield trim(q)


@lru_cache(maxsize=None)
def _chains(inner, outer, weights) -> tuple:
    """All chains inner <=h ... <=h outer with the given strip sizes."""
    layer = [(inner, (inner,))]
    for t in weights:
        nxt = []
        for p, chain in layer:
            for q in _hstrips_above(p, t, outer):
                nxt.append((q, chain + (q,)))
        layer = nxt
    return tuple(chain for p, chain in layer if p == outer)


@lru_cache(maxsize=None)
def _kostka(inner, outer, weights) -> int:
    """Number of chains inner <=h ... <=h outer with the given strip sizes."""
    layer = {inner: 1}
    for t in weights:
        nxt = {}
        for p, cnt in layer.items():
            for q in _hstrips_above(p, t, outer):
                nxt[q] = nxt.get(q, 0) + cnt
        layer = nxt
    return layer.get(outer, 0)


def _compositions(n, k):
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _symbol_support(base, target, n, slots):
    """[(composition alpha of n in `slots` slots, edge_symbol(base+alpha, target))]
    keeping only nonzero symbols."""
    out = []
    for alpha in _compositions(n, slots):
        s = edge_symbol(add(base, alpha), target)
        if s:
            out.append((trim(alpha), s))
    return tuple(out)


@lru_cache(maxsize=None)
def _margin_counts(mode, h, w, n):
    """dict (trimmed rsum, trimmed csum) -> number of matrices in the h x w
    box with that margin pair and total n."""
    counts = {}
    cells = [(i, j) for i in range(h) for j in range(w)]
    gen = combinations if mode == BINARY else combinations_with_replacement
    for combo in gen(range(len(cells)), n):
        rs = [0] * h
        cs = [0] * w
        for c in combo:
            i, j = cells[c]
            rs[i] += 1
            cs[j] += 1
        key = (trim(rs), trim(cs))
        counts[key] = counts.get(key, 0) + 1
    return counts


def lr_count(shape1: SkewShape, shape2: SkewShape, mode: str) -> int:
    """Number of matrices satisfying both the tableau condition for shape1
    and the LR condition for shape2."""
    lam, kap = shape1.outer, shape1.inner
    nu, mu = shape2.outer, shape2.inner
    if shape1.weight != shape2.weight:
        return 0
    weights = tuple(part(nu, i) - part(mu, i) for i in range(len(nu)))
    if any(x < 0 for x in weights):
        return 0
    count = 0
    for chain in _chains(kap, lam, weights):
        m = encode(Tableau(SST, chain), mode)
        if condition(m, shape2, LR, mode):
            count += 1
    return count


def _reverse_slots(comp, slots):
    comp = trim(comp)
    if len(comp) > slots:
        raise ValueError("composition longer than slot count")
    return trim(tuple(part(comp, slots - 1 - i) for i in range(slots)))


def _stage_value(shape1, shape2, stage, mode, box):
    h, w = box
    lam, kap = shape1.outer, shape1.inner
    nu, mu = shape2.outer, shape2.inner
    n = shape1.weight
    if n != shape2.weight:
        return 0
    if mode == BINARY:
        f_base, f_target = conjugate(kap), conjugate(lam)  # on column sums
        g_base, g_target = mu, nu  # on row sums
        f_slots, g_slots = w, h
    else:
        f_base, f_target = kap, lam  # on row sums
        g_base, g_target = mu, nu  # on column sums
        f_slots, g_slots = h, w
    if stage == BRUTE:
        counts = _margin_counts(mode, h, w, n)
        f_sup = _symbol_support(f_base, f_target, n, f_slots)
        g_sup = _symbol_support(g_base, g_target, n, g_slots)
        total = 0
        for a1, s1 in f_sup:
            for a2, s2 in g_sup:
                key = (a2, a1) if mode == BINARY else (a1, a2)
                c = counts.get(key)
                if c:
                    total += c * s1 * s2
        return total
    if stage == TAB_FIRST:
        # sum of the LR-side symbol over tableau-condition matrices in the box
        if mode == BINARY:
            if part(lam, 0) > w:
                return 0
            sup = _symbol_support(mu, nu, n, h)
            return sum(s * _kostka(kap, lam, alpha + (0,) * (h - len(alpha))) for alpha, s in sup)
        if len(lam) > h:
            return 0
        sup = _symbol_support(mu, nu, n, w)
        return sum(s * _kostka(kap, lam, alpha + (0,) * (w - len(alpha))) for alpha, s in sup)
    if stage == LR_FIRST:
        # sum of the tableau-side symbol over LR-condition matrices in the box
        if mode == BINARY:
            if len(nu) > h:
                return 0
            # BL members rotate to encodings of tableaux of the conjugate
            # shape, with the column sums reversed into the w slots
            sup = _symbol_support(conjugate(kap), conjugate(lam), n, w)
            total = 0
            for alpha, s in sup:
                wts = tuple(part(alpha, w - 1 - i) for i in range(w))
                total += s * _kostka(conjugate(mu), conjugate(nu), wts)
            return total
        if len(nu) > w:
            return 0
        sup = _symbol_support(kap, lam, n, h)
        return sum(s * _kostka(mu, nu, alpha + (0,) * (h - len(alpha))) for alpha, s in sup)
    if stage == FULLY_REDUCED:
        if mode == BINARY:
            if part(lam, 0) > w or len(nu) > h:
                return 0
        elif len(lam) > h or len(nu) > w:
            return 0
        return lr_count(shape1, shape2, mode)
    raise ValueError(f"unknown stage: {stage}")


def alternating_sum(shape1: SkewShape, shape2: SkewShape, stage: str, mode: str,
                    box: tuple[int, int] = (6, 6)) -> int:
    """Evaluate one of the alternating-sum expressions over all matrices of
    the mode supported in the box; raises BoxTooSmall unless the value is
    unchanged when the box grows by one row and one column."""
    v = _stage_value(shape1, shape2, stage, mode, box)
    v2 = _stage_value(shape1, shape2, stage, mode, (box[0] + 1, box[1] + 1))
    if v != v2:
        raise BoxTooSmall(
            f"sum changed from {v} to {v2} when growing box {box}"
        )
    return v


def _lr_witness_binary(m: BinaryMatrix, mu):
    """(l, i): maximal l whose suffix-column composition fails to be a
    partition, and the minimal i with beta_{i+1} = beta_i + 1 there."""
    acc = list(mu)
    for l in range(m.width - 1, -1, -1):
        for i in range(m.height):
            if m.rows[i][l]:
                while len(acc) <= i:
                    acc.append(0)
                acc[i] += m.rows[i][l]
        if not is_partition(acc):
            for i in range(len(acc) + 1):
                if part(acc, i + 1) == part(acc, i) + 1:
                    return l, i
            raise AssertionError("failure without a unit step")
    return None


def _lr_witness_integral(m: IntegralMatrix, mu):
    """(k, j): first row k breaking the horizontal-strip chain, and the
    maximal witness column j there."""
    prev = trim(mu)
    for k in range(m.height):
        nxt = add(prev, m.row(k))
        bad = [
            j
            for j in range(max(len(prev), len(nxt)) + 1)
            if part(prev, j) < part(nxt, j + 1)
        ]
        if bad:
            return k, max(bad)
        prev = nxt
    return None


def _ladder_apply(m, d, raise_dir, lower_dir, index):
    ops = cb if m.binary else ci
    steps, direction = (d, raise_dir) if d > 0 else (-d, lower_dir)
    for _ in range(steps):
        res = ops.move(m, direction, index)
        if res is None:
            raise AssertionError("ladder shorter than the cancellation step")
        m = res[0]
    return m


def involution(m: Matrix, shape: SkewShape, which: str, mode: str | None = None) -> Matrix:
    """Cancellation partner of m for the failing condition.

    which="lr": m must fail the LR chain condition for shape (margins play
    no role); the partner is e^d(m) along the vertical (binary) or
    horizontal (integral) ladder at the witness, d = alpha_{i+1}-alpha_i-1.
    which="tableau": the quarter-turn (binary) or transpose (integral)
    analogue.  Raises NotCancellable when the condition's chain test holds.
    """
    if mode is not None and mode_of(m) != mode:
        raise ValueError("matrix type does not match mode")
    if which == TABLEAU:
        if m.binary:
            rot = m.rotate_cw()
            out = involution(
                rot, SkewShape(conjugate(shape.outer), conjugate(shape.inner)), LR
            )
            return out.rotate_ccw()
        out = involution(m.transpose(), shape, LR)
        return out.transpose()
    if which != LR:
        raise ValueError(f"unknown condition kind: {which}")
    mu = shape.inner
    if m.binary:
        witness = _lr_witness_binary(m, mu)
        if witness is None:
            raise NotCancellable("all suffix-column compositions are partitions")
        _, i = witness
        alpha = add(mu, m.row_sums())
        d = part(alpha, i + 1) - part(alpha, i) - 1
        return _ladder_apply(m, d, UP, DOWN, i)
    witness = _lr_witness_integral(m, mu)
    if witness is None:
        raise NotCancellable("the cumulative-row chain is all horizontal strips")
    _, j = witness
    alpha = add(mu, m.col_sums())
    d = part(alpha, j + 1) - part(alpha, j) - 1
    return _ladder_apply(m, d, LEFT, RIGHT, j)


def lr_witness(m: Matrix, shape: SkewShape):
    """Expose the cancellation witness for tests and traces."""
    if m.binary:
        return _lr_witness_binary(m, shape.inner)
    return _lr_witness_integral(m, shape.inner)
