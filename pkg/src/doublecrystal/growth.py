"""Implicit shapes, shape-datum local rules, growth diagrams in four
orientations, and the French / sliced normal forms.

A growth diagram assigns to each grid point the implicit shape of a corner
submatrix of its source matrix; the grids here are computed purely by
local rules from empty borders, with optional per-cell verification
against direct normalization.
"""

from dataclasses import dataclass

from .decomposition import normal_form
from .matrices import BinaryMatrix, IntegralMatrix, Matrix
from .shapes import (
    HORIZONTAL,
    VERTICAL,
    Partition,
    conjugate,
    contains,
    is_partition,
    part,
    revert,
    strip_le,
    trim,
)

NW = "NW"
NE = "NE"
SW = "SW"
SE = "SE"
ORIENTATIONS = (NW, NE, SW, SE)

ROW_INSERTION = "row_insertion"
COL_INSERTION = "col_insertion"

FORWARD = "forward"
BACKWARD = "backward"


class ShapeDatumError(ValueError):
    """Shape-datum inputs violate the required strip relations."""


def implicit_shape(m: Matrix) -> Partition:
    """The partition parametrising the normal form of m."""
    return normal_form(m)


def burge_forward(lam, mu, nu, m: int, with_trace: bool = False):
    """Shape datum of the Burge correspondence: kappa from (lam, mu, nu, m).

    Iterates i downward maintaining a carry c, with
    d = mu_i + nu_i - lam_i + c, kappa_i = min(d, lam_{i-1}), c = d - kappa_i,
    and finally kappa_0 = mu_0 - lam_0 + c + nu_0.
    """
    lam, mu, nu = trim(lam), trim(mu), trim(nu)
    if m < 0:
        raise ShapeDatumError("entry must be nonnegative")
    if not (strip_le(lam, mu, HORIZONTAL) and strip_le(lam, nu, HORIZONTAL)):
        raise ShapeDatumError(f"need lam <=h mu and lam <=h nu: {lam}, {mu}, {nu}")
    start = max(len(lam), len(mu), len(nu))
    c = m
    kappa = [0] * (start + 1)
    trace = []
    for i in range(start, 0, -1):
        d = part(mu, i) + part(nu, i) - part(lam, i) + c
        kappa[i] = min(d, part(lam, i - 1))
        c = d - kappa[i]
        if trace or kappa[i] != 0 or d != c:
            trace.append((d, kappa[i], c))
    kappa[0] = part(mu, 0) - part(lam, 0) + c + part(nu, 0)
    result = trim(kappa)
    if with_trace:
        return result, tuple(trace)
    return result


def burge_backward(mu, nu, kappa) -> tuple[Partition, int]:
    """Inverse Burge shape datum: (lam, m) from (mu, nu, kappa).

    Iterates i upward with d = mu_i + nu_i - kappa_i - c,
    lam_i = max(d, kappa_{i+1}), c = lam_i - d; the final carry is m.
    """
    mu, nu, kappa = trim(mu), trim(nu), trim(kappa)
    if not (strip_le(mu, kappa, HORIZONTAL) and strip_le(nu, kappa, HORIZONTAL)):
        raise ShapeDatumError(f"need mu <=h kappa and nu <=h kappa: {mu}, {nu}, {kappa}")
    stop = max(len(mu), len(nu), len(kappa))
    c = 0
    lam = [0] * (stop + 1)
    for i in range(stop + 1):
        d = part(mu, i) + part(nu, i) - part(kappa, i) - c
        lam[i] = max(d, part(kappa, i + 1))
        c = lam[i] - d
    lam = trim(lam)
    if not is_partition(lam):
        raise ShapeDatumError(f"backward datum produced a non-partition: {lam}")
    if burge_forward(lam, mu, nu, c) != kappa:
        raise ShapeDatumError("backward datum does not invert the forward datum")
    return lam, c


def rsk_forward(lam, mu, nu, m: int) -> Partition:
    """Shape datum of the RSK correspondence (closed formula)."""
    lam, mu, nu = trim(lam), trim(mu), trim(nu)
    if m < 0:
        raise ShapeDatumError("entry must be nonnegative")
    if not (strip_le(lam, mu, HORIZONTAL) and strip_le(lam, nu, HORIZONTAL)):
        raise ShapeDatumError(f"need lam <=h mu and lam <=h nu: {lam}, {mu}, {nu}")
    n = max(len(mu), len(nu)) + 1
    kappa = [m + max(part(mu, 0), part(nu, 0))]
    for i in range(n):
        kappa.append(
            min(part(nu, i), part(mu, i))
            - part(lam, i)
            + max(part(mu, i + 1), part(nu, i + 1))
        )
    return trim(kappa)


def rsk_backward(mu, nu, kappa) -> tuple[Partition, int]:
    """Inverse of the RSK shape datum."""
    mu, nu, kappa = trim(mu), trim(nu), trim(kappa)
    if not (strip_le(mu, kappa, HORIZONTAL) and strip_le(nu, kappa, HORIZONTAL)):
        raise ShapeDatumError(f"need mu <=h kappa and nu <=h kappa: {mu}, {nu}, {kappa}")
    m = part(kappa, 0) - max(part(mu, 0), part(nu, 0))
    n = max(len(mu), len(nu)) + 1
    lam = []
    for i in range(n):
        lam.append(
            min(part(nu, i), part(mu, i))
            + max(part(mu, i + 1), part(nu, i + 1))
            - part(kappa, i + 1)
        )
    lam = trim(lam)
    if m < 0 or not is_partition(lam):
        raise ShapeDatumError(f"backward datum produced invalid (lam, m) = ({lam}, {m})")
    if not (strip_le(lam, mu, HORIZONTAL) and strip_le(lam, nu, HORIZONTAL)):
        raise ShapeDatumError(f"backward lam is not <=h mu, nu: {lam}")
    if rsk_forward(lam, mu, nu, m) != kappa:
        raise ShapeDatumError("backward datum does not invert the forward datum")
    return lam, m


def _optional_squares(mu, nu):
    """The optional-square sets (S, T, t0) of the binary shape datum.

    S consists of the squares that end both a row of mu and a column of nu
    (optional for lam); T of the squares just past both a column of mu and
    a row of nu (optional for kappa).  |T| = |S| + 1 always.
    """
    mu, nu = trim(mu), trim(nu)
    mu_t, nu_t = conjugate(mu), conjugate(nu)
    s_set = []
    for i in range(len(mu)):
        j = mu[i] - 1
        if part(nu_t, j) - 1 == i:
            s_set.append((i, j))
    t_set = []
    for i in range(max(len(nu), len(mu)) + 1):
        j = part(nu, i)
        if part(mu_t, j) == i:
            t_set.append((i, j))
    if len(t_set) != len(s_set) + 1:
        raise ShapeDatumError(
            f"optional square sets of sizes {len(s_set)}, {len(t_set)} for {mu}, {nu}"
        )
    return s_set, t_set


def _match_optional(s_set, t_set, flavor):
    """Injective matching S -> T; returns (pairs dict, unmatched t0)."""
    pairs = {}
    used = set()
    if flavor == ROW_INSERTION:
        # each s matches the first t in a row strictly below it
        for s in s_set:
            cands = [t for t in t_set if t[0] > s[0] and t not in used]
            if not cands:
                raise ShapeDatumError(f"no match below optional square {s}")
            t = min(cands, key=lambda t: t[0])
            if t[1] > s[1]:
                raise ShapeDatumError(f"matched square {t} not weakly left of {s}")
            pairs[s] = t
            used.add(t)
    elif flavor == COL_INSERTION:
        # each s matches the first t in a column strictly to its right
        for s in s_set:
            cands = [t for t in t_set if t[1] > s[1] and t not in used]
            if not cands:
                raise ShapeDatumError(f"no match right of optional square {s}")
            t = min(cands, key=lambda t: t[1])
            if t[0] > s[0]:
                raise ShapeDatumError(f"matched square {t} not weakly above {s}")
            pairs[s] = t
            used.add(t)
    else:
        raise ValueError(f"unknown flavor: {flavor}")
    rest = [t for t in t_set if t not in used]
    if len(rest) != 1:
        raise ShapeDatumError(f"matching left {len(rest)} unmatched squares")
    return pairs, rest[0]


def _cell_in(shape, cell) -> bool:
    i, j = cell
    return j < part(shape, i)


def _add_cells(base, cells) -> Partition:
    rows = list(base) + [0] * 4
    for i, j in cells:
        while len(rows) <= i:
            rows.append(0)
        if rows[i] != j:
            raise ShapeDatumError(f"cell {(i, j)} does not extend {trim(base)}")
        rows[i] += 1
    out = trim(rows)
    if not is_partition(out):
        raise ShapeDatumError(f"adding cells broke the partition: {out}")
    return out


def dual_forward(lam, mu, nu, bit: int, flavor: str) -> Partition:
    """Binary shape datum, forward direction: kappa from (lam, mu, nu, bit).

    Every optional square of lam absent from lam turns the matched optional
    square of kappa present, and vice versa; the unmatched square follows
    the bit.
    """
    lam, mu, nu = trim(lam), trim(mu), trim(nu)
    if bit not in (0, 1):
        raise ShapeDatumError("bit must be 0 or 1")
    if not (strip_le(lam, mu, VERTICAL) and strip_le(lam, nu, HORIZONTAL)):
        raise ShapeDatumError(f"need lam <=v mu and lam <=h nu: {lam}, {mu}, {nu}")
    s_set, t_set = _optional_squares(mu, nu)
    meet = tuple(min(part(mu, i), part(nu, i)) for i in range(max(len(mu), len(nu))))
    for s in s_set:
        if not _cell_in(meet, s):
            raise ShapeDatumError(f"optional square {s} outside mu meet nu")
    obligatory = [s for s in s_set if not _cell_in(lam, s)]
    if not contains(lam, meet):
        raise ShapeDatumError(f"lam = {lam} not contained in mu meet nu")
    for i in range(len(meet)):
        for j in range(part(lam, i), part(meet, i)):
            if (i, j) not in s_set:
                raise ShapeDatumError(f"obligatory square {(i, j)} missing from lam")
    pairs, t0 = _match_optional(s_set, t_set, flavor)
    join = tuple(max(part(mu, i), part(nu, i)) for i in range(max(len(mu), len(nu))))
    new_cells = [pairs[s] for s in obligatory]
    if bit:
        new_cells.append(t0)
    new_cells.sort(key=lambda t: t[1])
    return _add_cells(join, new_cells)


def dual_backward(mu, nu, kappa, flavor: str) -> tuple[Partition, int]:
    """Binary shape datum, backward direction: (lam, bit) from (mu, nu, kappa)."""
    mu, nu, kappa = trim(mu), trim(nu), trim(kappa)
    if not (strip_le(mu, kappa, HORIZONTAL) and strip_le(nu, kappa, VERTICAL)):
        raise ShapeDatumError(f"need mu <=h kappa and nu <=v kappa: {mu}, {nu}, {kappa}")
    s_set, t_set = _optional_squares(mu, nu)
    pairs, t0 = _match_optional(s_set, t_set, flavor)
    join = tuple(max(part(mu, i), part(nu, i)) for i in range(max(len(mu), len(nu))))
    if not contains(join, kappa):
        raise ShapeDatumError(f"kappa = {kappa} missing obligatory squares")
    extra = []
    for i in range(len(kappa)):
        for j in range(part(join, i), part(kappa, i)):
            extra.append((i, j))
    for cell in extra:
        if cell != t0 and cell not in pairs.values():
            raise ShapeDatumError(f"kappa has non-optional extra square {cell}")
    bit = 1 if t0 in extra else 0
    meet = tuple(min(part(mu, i), part(nu, i)) for i in range(max(len(mu), len(nu))))
    removed = [s for s, t in pairs.items() if t in extra]
    lam_rows = list(meet)
    for i, j in sorted(removed, reverse=True):
        if lam_rows[i] != j + 1:
            raise ShapeDatumError(f"cannot remove optional square {(i, j)}")
        lam_rows[i] = j
    lam = trim(lam_rows)
    if not is_partition(lam):
        raise ShapeDatumError(f"backward datum produced a non-partition: {lam}")
    if dual_forward(lam, mu, nu, bit, flavor) != kappa:
        raise ShapeDatumError("backward datum does not invert the forward datum")
    return lam, bit


def dual_datum(flavor: str, direction: str, *, lam=None, mu, nu, kappa=None, bit=None):
    """Dispatch to the forward or backward binary shape datum."""
    if direction == FORWARD:
        return dual_forward(lam, mu, nu, bit, flavor)
    if direction == BACKWARD:
        return dual_backward(mu, nu, kappa, flavor)
    raise ValueError(f"unknown direction: {direction}")


@dataclass(frozen=True)
class GrowthDiagram:
    orientation: str
    grid: tuple[tuple[Partition, ...], ...]
    source: Matrix

    @property
    def height(self) -> int:
        return len(self.grid)

    @property
    def width(self) -> int:
        return len(self.grid[0])


def _corner_submatrix(m: Matrix, orientation: str, i: int, j: int) -> Matrix:
    if orientation == NW:
        return m.restrict((0, i), (0, j))
    if orientation == NE:
        return m.restrict((0, i), (j, None))
    if orientation == SW:
        return m.restrict((i, None), (0, j))
    if orientation == SE:
        return m.restrict((i, None), (j, None))
    raise ValueError(f"unknown orientation: {orientation}")


def _local_rule(mode_binary: bool, orientation: str):
    if mode_binary:
        flavor = ROW_INSERTION if orientation in (NW, SE) else COL_INSERTION
        return lambda lam, mu, nu, m: dual_forward(lam, mu, nu, m, flavor)
    if orientation in (NW, SE):
        return burge_forward
    return rsk_forward


def growth_diagram(m: Matrix, orientation: str = NW, verify: bool = False) -> GrowthDiagram:
    """Implicit shapes of all corner submatrices, computed by local rules.

    The grid has (height+1) x (width+1) points; point (i, j) carries the
    implicit shape of the orientation's corner submatrix cut at (i, j).
    With verify=True every cell is checked against direct normalization.
    """
    mt = m.trimmed()
    h, w = mt.height, mt.width
    rule = _local_rule(mt.binary, orientation)
    grid = [[() for _ in range(w + 1)] for _ in range(h + 1)]
    if orientation == NW:
        for k in range(h):
            for l in range(w):
                grid[k + 1][l + 1] = rule(
                    grid[k][l], grid[k][l + 1], grid[k + 1][l], mt[k, l]
                )
    elif orientation == NE:
        for k in range(h):
            for l in range(w - 1, -1, -1):
                grid[k + 1][l] = rule(
                    grid[k][l + 1], grid[k][l], grid[k + 1][l + 1], mt[k, l]
                )
    elif orientation == SW:
        for k in range(h - 1, -1, -1):
            for l in range(w):
                grid[k][l + 1] = rule(
                    grid[k + 1][l], grid[k + 1][l + 1], grid[k][l], mt[k, l]
                )
    elif orientation == SE:
        for k in range(h - 1, -1, -1):
            for l in range(w - 1, -1, -1):
                grid[k][l] = rule(
                    grid[k + 1][l + 1], grid[k + 1][l], grid[k][l + 1], mt[k, l]
                )
    else:
        raise ValueError(f"unknown orientation: {orientation}")
    gd = GrowthDiagram(orientation, tuple(tuple(r) for r in grid), mt)
    if verify:
        for i in range(h + 1):
            for j in range(w + 1):
                direct = implicit_shape(_corner_submatrix(mt, orientation, i, j))
                if direct != gd.grid[i][j]:
                    raise AssertionError(
                        f"cell ({i},{j}) local rule {gd.grid[i][j]} != normalization {direct}"
                    )
    return gd


def render_growth_diagram(gd: GrowthDiagram) -> str:
    """Text rendering: the cell at grid point (i, j) shows the matrix entry
    of the square to its upper left followed by the shape at the point."""
    m = gd.source
    cells = []
    for i in range(gd.height):
        row = []
        for j in range(gd.width):
            shape = " ".join(str(p) for p in gd.grid[i][j]) if gd.grid[i][j] else "."
            if i > 0 and j > 0:
                row.append(f"{m[i - 1, j - 1]} {shape}")
            else:
                row.append(shape)
        cells.append(row)
    widths = [max(len(cells[i][j]) for i in range(gd.height)) for j in range(gd.width)]
    lines = []
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def french_form(lam, k: int) -> BinaryMatrix:
    """Bottom-justified binary normal form: bit at (i, j) iff
    (k-1-i, j) lies in the diagram of lam.  Needs lam[k] = 0."""
    lam = trim(lam)
    if part(lam, k) != 0 or len(lam) > k:
        raise ValueError(f"french_form needs lam[{k}] = 0, got {lam}")
    w = part(lam, 0)
    return BinaryMatrix(
        tuple(
            tuple(1 if j < part(lam, k - 1 - i) else 0 for j in range(w))
            for i in range(k)
        )
    )


def recognize_french(m: BinaryMatrix, k: int):
    """The partition lam with m = french_form(lam, k), or None."""
    lam = trim(revert(trim(sum(r) for r in m.pad_to(k, 0).rows[:k]), k))
    if m.height > k and any(any(r) for r in m.rows[k:]):
        return None
    try:
        target = french_form(lam, k)
    except ValueError:
        return None
    return lam if m == target else None


def sliced_form(lam, k: int, l: int) -> IntegralMatrix:
    """Diagonal-constant integral form supported in rows >= k, cols < l."""
    lam = trim(lam)
    if part(lam, l) != 0 or len(lam) > l:
        raise ValueError(f"sliced_form needs lam[{l}] = 0, got {lam}")
    h = k + l
    rows = []
    for i in range(h):
        row = []
        for j in range(l):
            if i >= k:
                d = i - k - j + l
                row.append(part(lam, d - 1) - part(lam, d) if d >= 1 else 0)
            else:
                row.append(0)
        rows.append(tuple(row))
    return IntegralMatrix(rows)


def recognize_sliced(m: IntegralMatrix, k: int, l: int):
    """The partition lam with m = sliced_form(lam, k, l), or None."""
    if m != m.restrict((k, None), (0, l)):
        return None
    lam = trim(sum(m[k + i, j] for j in range(l)) for i in range(m.height))
    try:
        target = sliced_form(lam, k, l)
    except ValueError:
        return None
    return lam if m == target else None
