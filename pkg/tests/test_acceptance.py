"""Acceptance criteria: exact golden values plus exhaustive property
suites, one test (and one printed pass line) per criterion."""

import itertools
import random
import time

from doublecrystal import crystal_binary as cb
from doublecrystal import crystal_integral as ci
from doublecrystal.cancellation import (
    STAGES,
    _chains,
    alternating_sum,
    edge_symbol,
    involution,
    lr_count,
    lr_witness,
)
from doublecrystal.crystal_binary import DIRECTIONS, DOWN, LEFT, RIGHT, UP
from doublecrystal.decomposition import compose, decompose, exhaust, normal_form
from doublecrystal.growth import (
    COL_INSERTION,
    NE,
    NW,
    ROW_INSERTION,
    SW,
    burge_backward,
    burge_forward,
    dual_forward,
    growth_diagram,
    rsk_forward,
)
from doublecrystal.insertion import burge, dual_rsk_col, dual_rsk_row, rectify
from doublecrystal.matrices import (
    BINARY,
    INTEGRAL,
    LR,
    TABLEAU,
    BinaryMatrix,
    IntegralMatrix,
    condition,
    diagon,
    diagram,
    encode,
)
from doublecrystal.pictures import BIN, INT, enumerate_pictures, lift, project
from doublecrystal.schutzenberger import dual, rotate_complement
from doublecrystal.shapes import (
    REVERSE_TRANSPOSE,
    SST,
    SkewShape,
    Tableau,
    add,
    part,
    partitions_up_to,
    subpartitions,
    trim,
)

from conftest import (
    LAMBDA,
    LBAR_CHAIN,
    LBARSTAR_CHAIN,
    M_BIN,
    M_INT,
    P_BIN,
    P_INT,
    Q_BIN,
    Q_INT,
    R_CHAIN,
    RSTAR_CHAIN,
    S_CHAIN,
)


def _report(num, detail):
    print(f"criterion {num:2d}: PASS - {detail}")


def _all_binary_3x4():
    for bits in itertools.product((0, 1), repeat=12):
        yield BinaryMatrix([bits[0:4], bits[4:8], bits[8:12]])


def _all_integral_3x3():
    for vals in itertools.product((0, 1, 2), repeat=9):
        yield IntegralMatrix([vals[0:3], vals[3:6], vals[6:9]])


def test_c01_golden_binary_decomposition():
    t0 = time.monotonic()
    p, q = decompose(M_BIN)
    assert p == P_BIN and q == Q_BIN
    n, _ = exhaust(M_BIN, (UP, LEFT))
    assert n == diagram(LAMBDA)
    assert normal_form(M_BIN) == LAMBDA
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    _report(1, f"binary P, Q, N bit-exact, lambda = {LAMBDA}, {elapsed:.3f}s")


def test_c02_golden_integral_decomposition():
    t0 = time.monotonic()
    p, q = decompose(M_INT)
    assert p == P_INT and q == Q_INT
    n, _ = exhaust(M_INT, (UP, LEFT))
    assert n == diagon(LAMBDA)
    assert normal_form(M_INT) == LAMBDA
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    _report(2, f"integral P, Q, N exact, lambda = {LAMBDA}, {elapsed:.3f}s")


def test_c03_burge_shape_datum():
    kappa, trace = burge_forward((8, 4, 2), (8, 7, 2), (8, 5, 3, 1), 2, with_trace=True)
    assert kappa == (8, 8, 4, 2)
    assert trace == ((3, 2, 1), (4, 4, 0), (8, 8, 0))
    assert burge_backward((11, 9, 8), (10, 9, 8, 2), (13, 9, 9, 5)) == ((9, 9, 6), 3)
    _report(3, "Burge forward trace and backward inversion exact")


def test_c04_binary_shape_data():
    assert dual_forward((5, 3, 2), (6, 3, 3, 1, 1), (6, 3, 2, 2), 1, ROW_INSERTION) == (7, 4, 3, 2, 1, 1)
    assert dual_forward((3, 2, 1), (4, 2, 2, 1), (5, 2, 2), 0, COL_INSERTION) == (6, 3, 2, 1)
    _report(4, "row and column insertion data exact")


def test_c05_rsk_formula():
    assert rsk_forward((5, 5, 2, 1), (8, 5, 5, 2), (8, 5, 3, 1, 1), 0) == (8, 8, 5, 3, 1)
    _report(5, "RSK closed formula exact")


DIAGRAM_1 = (
    ((), (), (), (), (), (), (), ()),
    ((), (1,), (1,), (2,), (2,), (3,), (5,), (5,)),
    ((), (2,), (2, 1), (3, 1), (3, 2), (5, 2), (7, 2), (7, 5)),
    ((), (2,), (3, 2), (4, 2, 1), (4, 3, 1), (6, 3, 2), (8, 4, 2), (8, 7, 2)),
    ((), (2,), (3, 2), (4, 2, 2), (4, 3, 2, 1), (6, 4, 3, 1), (8, 5, 3, 1), (8, 8, 4, 2)),
    ((), (2,), (3, 2), (4, 2, 2), (4, 3, 2, 1), (6, 4, 3, 1), (8, 5, 3, 1, 1), (8, 8, 5, 3, 1)),
)

DIAGRAM_2 = (
    ((), (), (), (), (), (), (), (), (), ()),
    ((), (), (1,), (1,), (1,), (2,), (2,), (2,), (2,), (2,)),
    ((), (1,), (2, 1), (3, 1), (3, 1), (3, 2), (3, 2), (3, 2), (3, 2), (3, 2)),
    ((), (1, 1), (2, 1, 1), (3, 2, 1), (3, 2, 1), (3, 2, 2), (4, 2, 2), (4, 2, 2), (4, 2, 2), (4, 2, 2)),
    ((), (1, 1), (2, 2, 1), (3, 2, 2), (4, 2, 2), (4, 2, 2, 1), (4, 3, 2, 1), (4, 3, 2, 1), (4, 3, 2, 1), (4, 3, 2, 1)),
    ((), (1, 1), (2, 2, 1), (3, 3, 2), (4, 4, 2), (5, 4, 2, 1), (5, 4, 3, 1), (6, 4, 3, 1), (6, 4, 3, 1), (6, 4, 3, 1)),
    ((), (1, 1, 1), (2, 2, 1, 1), (3, 3, 2, 1), (4, 4, 2, 1), (5, 5, 2, 1, 1), (5, 5, 3, 1, 1), (6, 5, 3, 1, 1), (7, 5, 3, 1, 1), (8, 5, 3, 1, 1)),
    ((), (1, 1, 1), (2, 2, 2, 1), (3, 3, 3, 2), (4, 4, 4, 2), (5, 5, 5, 2, 1), (6, 5, 5, 3, 1), (7, 6, 5, 3, 1), (8, 7, 5, 3, 1), (8, 8, 5, 3, 1)),
)

DIAGRAM_3 = (
    ((), (), (), (), (), (), (), (), (), ()),
    ((2,), (2,), (1,), (1,), (1,), (), (), (), (), ()),
    ((3, 2), (2, 2), (1, 1), (1,), (1,), (), (), (), (), ()),
    ((4, 2, 2), (3, 2, 1), (2, 1, 1), (2,), (2,), (1,), (), (), (), ()),
    ((4, 3, 2, 1), (3, 3, 1, 1), (2, 2, 1), (2, 1), (2,), (1,), (), (), (), ()),
    ((6, 4, 3, 1), (5, 3, 3, 1), (4, 2, 2, 1), (3, 2, 1), (3, 1), (2,), (1,), (), (), ()),
    ((8, 5, 3, 1, 1), (7, 4, 3, 1), (6, 3, 2, 1), (5, 2, 2), (5, 1, 1), (4,), (3,), (2,), (1,), ()),
    ((8, 8, 5, 3, 1), (7, 7, 4, 3, 1), (6, 6, 3, 2, 1), (5, 5, 2, 2), (5, 4, 1, 1), (4, 3), (3, 2), (2, 1), (1,), ()),
)

DIAGRAM_4 = (
    ((), (2,), (3, 2), (4, 2, 2), (4, 3, 2, 1), (6, 4, 3, 1), (8, 5, 3, 1, 1), (8, 8, 5, 3, 1)),
    ((), (1,), (3, 1), (3, 2, 1), (4, 2, 2), (5, 4, 2), (5, 5, 2, 1), (8, 5, 5, 2)),
    ((), (), (2,), (3, 1), (3, 2), (4, 3), (5, 3, 1), (5, 5, 3)),
    ((), (), (), (1,), (2,), (3,), (3, 1), (5, 3)),
    ((), (), (), (), (), (), (1,), (3,)),
    ((), (), (), (), (), (), (), ()),
)


def test_c06_growth_diagrams():
    t0 = time.monotonic()
    assert growth_diagram(M_INT, NW, verify=True).grid == DIAGRAM_1
    assert growth_diagram(M_BIN, NW, verify=True).grid == DIAGRAM_2
    assert growth_diagram(M_BIN, NE, verify=True).grid == DIAGRAM_3
    assert growth_diagram(M_INT, SW, verify=True).grid == DIAGRAM_4
    elapsed = time.monotonic() - t0
    assert elapsed < 10.0
    _report(6, f"Diagrams 1-4 cell-exact with normalization cross-check, {elapsed:.2f}s")


def test_c07_commutation_exhaustive():
    t0 = time.monotonic()
    variants = ((UP, LEFT), (UP, RIGHT), (DOWN, LEFT), (DOWN, RIGHT))
    checked = 0
    for mod, matrices, imax, jmax in (
        (cb, _all_binary_3x4(), 3, 4),
        (ci, _all_integral_3x3(), 3, 3),
    ):
        for m in matrices:
            for i in range(imax):
                for dv, dh in variants:
                    a = mod.move(m, dv, i)
                    if a is None:
                        continue
                    for j in range(jmax):
                        b = mod.move(m, dh, j)
                        if b is None:
                            continue
                        ab = mod.move(a[0], dh, j)
                        ba = mod.move(b[0], dv, i)
                        assert ab is not None and ba is not None
                        assert ab[0] == ba[0], (m.rows, dv, i, dh, j)
                        checked += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    _report(7, f"{checked} commuting squares, zero failures, {elapsed:.1f}s")


def test_c08_potentials_equal_move_counts():
    t0 = time.monotonic()
    checked = 0
    for mod, matrices, imax, jmax in (
        (cb, _all_binary_3x4(), 4, 5),
        (ci, _all_integral_3x3(), 4, 4),
    ):
        for m in matrices:
            rs, cs = m.row_sums(), m.col_sums()
            for d in DIRECTIONS:
                rng = range(imax if d in (UP, DOWN) else jmax)
                for idx in rng:
                    count = 0
                    x = m
                    while True:
                        res = mod.move(x, d, idx)
                        if res is None:
                            break
                        x = res[0]
                        count += 1
                    assert count == mod.potential(m, d, idx), (m.rows, d, idx)
                    checked += 1
            for i in range(imax):
                assert mod.potential(m, DOWN, i) - mod.potential(m, UP, i) == part(rs, i) - part(rs, i + 1)
            for j in range(jmax):
                assert mod.potential(m, RIGHT, j) - mod.potential(m, LEFT, j) == part(cs, j) - part(cs, j + 1)
    elapsed = time.monotonic() - t0
    _report(8, f"{checked} potential/move-count identities, zero failures, {elapsed:.1f}s")


def test_c09_decompose_compose_roundtrip():
    t0 = time.monotonic()
    checked = 0
    for matrices in (_all_binary_3x4(), _all_integral_3x3()):
        for m in matrices:
            p, q = decompose(m)
            assert compose(p, q) == m, m.rows
            checked += 1
    elapsed = time.monotonic() - t0
    _report(9, f"round trip on {checked} matrices, zero failures, {elapsed:.1f}s")


def test_c10_oracle_equivalence():
    t0 = time.monotonic()
    for m in _all_integral_3x3():
        p, q = decompose(m)
        s, lbar = burge(m)
        assert encode(s, INTEGRAL) == p, m.rows
        assert encode(lbar, INTEGRAL).transpose() == q, m.rows
    for m in _all_binary_3x4():
        p, q = decompose(m)
        s, r = dual_rsk_col(m)
        assert encode(s, BINARY) == q, m.rows
        n = max(p.width, len(r.chain) - 1)
        pp = p.pad_to(1, n)
        chain = tuple(trim(sum(row[j:]) for row in pp.rows) for j in range(n + 1))
        assert chain == r.padded_chain(n + 1), m.rows
    # dual RSK row form: insertion tableau = Schutzenberger dual of R
    r_star, s = dual_rsk_row(M_BIN)
    assert r_star.chain == RSTAR_CHAIN and s.chain == S_CHAIN
    _, r = dual_rsk_col(M_BIN)
    assert dual(r) == r_star
    rng = random.Random(17)
    for _ in range(50):
        h, w = rng.randint(1, 4), rng.randint(1, 5)
        m = BinaryMatrix([[rng.randint(0, 1) for _ in range(w)] for _ in range(h)])
        s_col, r = dual_rsk_col(m)
        r_star, s_row = dual_rsk_row(m)
        assert s_row == s_col
        assert dual(r) == r_star, m.rows
    elapsed = time.monotonic() - t0
    assert elapsed < 300.0
    _report(10, f"Burge and dual RSK match the decomposition exhaustively, {elapsed:.1f}s")


def _skew_shapes_5():
    return [SkewShape(o, i) for o in partitions_up_to(5) for i in subpartitions(o)]


def test_c11_alternating_sums():
    t0 = time.monotonic()
    shapes = _skew_shapes_5()
    pairs = 0
    for s1 in shapes:
        for s2 in shapes:
            counts = {lr_count(s1, s2, BINARY), lr_count(s1, s2, INTEGRAL)}
            assert len(counts) == 1, (str(s1), str(s2), counts)
            for mode in (BINARY, INTEGRAL):
                for stage in STAGES:
                    counts.add(alternating_sum(s1, s2, stage, mode, (6, 6)))
            assert len(counts) == 1, (str(s1), str(s2), counts)
            pairs += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 600.0
    _report(11, f"all stages and both LR counts agree on {pairs} shape pairs, {elapsed:.1f}s")


def test_c12_involution_suite():
    t0 = time.monotonic()
    rng = random.Random(23)
    shapes = _skew_shapes_5()
    failing_total = 0
    for s1 in shapes:
        for s2 in shapes:
            if s1.weight != s2.weight or s1.weight == 0:
                continue
            weights = tuple(part(s2.outer, i) - part(s2.inner, i) for i in range(len(s2.outer)))
            if any(x < 0 for x in weights):
                continue
            for mode in (BINARY, INTEGRAL):
                for chain in _chains(s1.inner, s1.outer, weights):
                    m = encode(Tableau(SST, chain), mode)
                    if condition(m, s2, LR, mode):
                        continue
                    mp = involution(m, s2, LR)
                    assert involution(mp, s2, LR) == m
                    assert lr_witness(mp, s2) == lr_witness(m, s2)
                    assert not condition(mp, s2, LR, mode)
                    if mode == BINARY:
                        a = add(s2.inner, m.row_sums())
                        ap = add(s2.inner, mp.row_sums())
                    else:
                        a = add(s2.inner, m.col_sums())
                        ap = add(s2.inner, mp.col_sums())
                    assert edge_symbol(a, s2.outer) + edge_symbol(ap, s2.outer) == 0
                    if edge_symbol(a, s2.outer) != 0:
                        assert mp != m, (m.rows, str(s1), str(s2))
                    for _ in range(3):
                        sh = rng.choice(shapes)
                        assert condition(m, sh, TABLEAU, mode) == condition(mp, sh, TABLEAU, mode)
                    failing_total += 1
    elapsed = time.monotonic() - t0
    _report(12, f"involution checked on {failing_total} failing matrices, {elapsed:.1f}s")


def test_c13_schutzenberger():
    t0 = time.monotonic()
    r = Tableau(REVERSE_TRANSPOSE, R_CHAIN)
    assert dual(r).chain == RSTAR_CHAIN
    lbar = Tableau(SST, LBAR_CHAIN)
    assert dual(lbar).chain == LBARSTAR_CHAIN
    rng = random.Random(29)
    done = 0
    while done < 100:
        chain = [()]
        for _ in range(rng.randint(1, 5)):
            cur = chain[-1]
            nxt = []
            for i in range(len(cur) + 1):
                lo = cur[i] if i < len(cur) else 0
                cap = nxt[i - 1] if i else lo + 3
                above = cur[i - 1] if i else lo + 3
                nxt.append(rng.randint(lo, max(lo, min(cap, above, lo + 3))))
            chain.append(trim(nxt))
        t = Tableau(SST, tuple(chain))
        if not 0 < sum(t.outer) <= 10:
            continue
        d = dual(t)
        assert dual(d) == t
        assert trim(d.weight()) == trim(t.weight())
        k, l = len(t.outer), t.outer[0]
        assert rectify(rotate_complement(d, (k, l))) == t
        done += 1
    elapsed = time.monotonic() - t0
    _report(13, f"duals exact; involution and rectification route on {done} tableaux, {elapsed:.1f}s")


def test_c14_pictures():
    t0 = time.monotonic()
    shapes = _skew_shapes_5()
    pairs = 0
    for s1 in shapes:
        for s2 in shapes:
            if s1.weight != s2.weight:
                continue
            pics = enumerate_pictures(s1, s2)
            assert len(pics) == lr_count(s1, s2, INTEGRAL), (str(s1), str(s2))
            for p in pics:
                assert lift(project(p, INT), s1, s2, INT) == p
                assert lift(project(p, BIN), s1, s2, BIN) == p
            pairs += 1
    elapsed = time.monotonic() - t0
    _report(14, f"picture counts equal LR counts on {pairs} shape pairs, {elapsed:.1f}s")
