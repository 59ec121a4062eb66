"""Pictures: order-compatible bijections between skew diagrams, their
Int/Bin matrix projections, and lifting matrices back to pictures.

A picture f satisfies s <=NW t  =>  f(s) <=NE f(t) and
f(s) <=NW f(t)  =>  s <=NE t, where (i,j) <=NW (k,l) means i<=k, j<=l and
(i,j) <=NE (k,l) means i<=k, j>=l.
"""

from dataclasses import dataclass

from .matrices import (
    BINARY,
    INTEGRAL,
    LR,
    TABLEAU,
    BinaryMatrix,
    IntegralMatrix,
    Matrix,
    condition,
    mode_of,
)
from .shapes import SkewShape, add, conjugate, part

INT = "Int"
BIN = "Bin"


class LiftError(ValueError):
    """The matrix fails the conditions needed to lift it to a picture."""


class SizeError(ValueError):
    """Enumeration requested beyond the supported size cap."""


@dataclass(frozen=True)
class Picture:
    domain: SkewShape
    codomain: SkewShape
    mapping: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(sorted(self.mapping)))

    def as_dict(self):
        return dict(self.mapping)

    def inverse(self) -> "Picture":
        return Picture(
            self.codomain, self.domain, tuple((t, s) for s, t in self.mapping)
        )

    def to_text(self) -> str:
        return "\n".join(f"{s[0]},{s[1]} -> {t[0]},{t[1]}" for s, t in self.mapping)


def _le_nw(a, b):
    return a[0] <= b[0] and a[1] <= b[1]


def _le_ne(a, b):
    return a[0] <= b[0] and a[1] >= b[1]


def validate(mapping, dom: SkewShape, cod: SkewShape) -> bool:
    """Bijectivity plus the two order implications, over all square pairs."""
    mapping = dict(mapping)
    dom_cells = list(dom.cells())
    cod_cells = set(cod.cells())
    if sorted(mapping) != sorted(dom_cells):
        return False
    if sorted(mapping.values()) != sorted(cod_cells):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    for s in dom_cells:
        for t in dom_cells:
            if _le_nw(s, t) and not _le_ne(mapping[s], mapping[t]):
                return False
            if _le_nw(mapping[s], mapping[t]) and not _le_ne(s, t):
                return False
    return True


def project(f: Picture, mode: str) -> Matrix:
    """Int counts squares of domain row i mapped to codomain row k;
    Bin marks columns j of the domain sending a square to codomain row k."""
    if mode == INT:
        h = len(f.domain.outer)
        w = len(f.codomain.outer)
        rows = [[0] * w for _ in range(max(h, 1))]
        for (i, _), (k, _) in f.mapping:
            rows[i][k] += 1
        return IntegralMatrix(rows if f.mapping else ())
    if mode == BIN:
        h = len(f.codomain.outer)
        w = part(f.domain.outer, 0)
        rows = [[0] * w for _ in range(max(h, 1))]
        for (_, j), (k, _) in f.mapping:
            rows[k][j] += 1
        return BinaryMatrix(rows if f.mapping else ())
    raise ValueError(f"unknown projection mode: {mode}")


def _int_chains(m: IntegralMatrix, dom: SkewShape, cod: SkewShape):
    dom_chain = [dom.inner]
    for c in range(m.width):
        dom_chain.append(add(dom_chain[-1], m.col(c)))
    cod_chain = [cod.inner]
    for r in range(m.height):
        cod_chain.append(add(cod_chain[-1], m.row(r)))
    return dom_chain, cod_chain


def lift(m: Matrix, dom: SkewShape, cod: SkewShape, mode: str) -> Picture:
    """The unique picture with the given projection.

    Needs m in the tableau set of dom and the LR set of cod; the images are
    assigned greedily in Semitic (Int) or Kanji (Bin) reading order, each
    square having a single viable target.
    """
    mmode = INTEGRAL if mode == INT else BINARY
    if mode_of(m) != mmode:
        raise LiftError("matrix type does not match the projection mode")
    if not condition(m, dom, TABLEAU, mmode):
        raise LiftError(f"matrix is not a tableau encoding of shape {dom}")
    if not condition(m, cod, LR, mmode):
        raise LiftError(f"matrix fails the LR condition for {cod}")
    mapping = []
    if mode == INT:
        dom_chain, cod_chain = _int_chains(m, dom, cod)
        for i in range(len(dom.outer)):
            for c in range(m.width):
                lo, hi = part(dom_chain[c], i), part(dom_chain[c + 1], i)
                # domain squares of row i with entry c, right to left, map to
                # codomain row c squares with entry i, left to right
                base = part(cod_chain[i], c)
                for offset in range(hi - lo):
                    mapping.append(((i, hi - 1 - offset), (c, base + offset)))
    else:
        # binary: chains by cumulative rows (domain, conjugated) and
        # suffix columns (codomain)
        dom_conj = [conjugate(dom.inner)]
        for r in range(m.height):
            dom_conj.append(add(dom_conj[-1], m.row(r)))
        cod_suffix = [cod.inner]
        for j in range(m.width - 1, -1, -1):
            cod_suffix.append(add(cod_suffix[-1], m.col(j)))
        cod_suffix.reverse()  # cod_suffix[j] = inner + columns >= j
        for c in range(m.height):
            for j in range(m.width):
                if m[c, j]:
                    # the square of domain column j with entry c sits at row
                    # (height of column j among entries < c)
                    i = part(dom_conj[c], j)
                    mapping.append(((i, j), (c, part(cod_suffix[j + 1], c))))
    pic = Picture(dom, cod, tuple(mapping))
    if not validate(pic.mapping, dom, cod):
        raise AssertionError("greedy lift produced an invalid picture")
    if project(pic, mode) != m:
        raise AssertionError("lift does not project back to the matrix")
    return pic


def enumerate_pictures(dom: SkewShape, cod: SkewShape, cap: int = 8):
    """All pictures dom -> cod by backtracking over images."""
    if dom.weight != cod.weight:
        return []
    if dom.weight > cap:
        raise SizeError(f"picture enumeration capped at {cap} squares")
    dom_cells = list(dom.cells())
    cod_cells = list(cod.cells())
    out = []
    assigned = {}
    used = set()

    def ok(s, t):
        for s2, t2 in assigned.items():
            if _le_nw(s, s2) and not _le_ne(t, t2):
                return False
            if _le_nw(s2, s) and not _le_ne(t2, t):
                return False
            if _le_nw(t, t2) and not _le_ne(s, s2):
                return False
            if _le_nw(t2, t) and not _le_ne(s2, s):
                return False
        return True

    def rec(idx):
        if idx == len(dom_cells):
            out.append(Picture(dom, cod, tuple(assigned.items())))
            return
        s = dom_cells[idx]
        for t in cod_cells:
            if t in used or not ok(s, t):
                continue
            assigned[s] = t
            used.add(t)
            rec(idx + 1)
            del assigned[s]
            used.discard(t)

    rec(0)
    return out
