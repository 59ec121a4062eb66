"""Command-line front end.

Matrices are read from a file argument or standard input, either as lines
of space-separated entries (with --mode) or as JSON
{"mode": "binary"|"integral", "rows": [[...]]}.  Tableaux are read as one
partition per line (comma-separated parts, "0" for empty) with --flavor.
Exit status: 0 success, 1 domain error, 2 usage error.
"""

import argparse
import json
import os
import random
import sys

from . import cancellation, decomposition, growth, insertion, pictures, schutzenberger
from .cancellation import STAGES, alternating_sum, lr_witness
from .crystal_binary import DIRECTIONS
from .decomposition import UsageError, compose, decompose, exhaust, normal_form
from .matrices import (
    BINARY,
    INTEGRAL,
    LR,
    condition,
    decode,
    encode,
    matrix_from_json,
    parse_matrix,
)
from .shapes import (
    FLAVORS,
    SST,
    SkewShape,
    Tableau,
    format_partition,
    parse_partition,
)


def _read_text(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_matrix(args, attr="matrix"):
    text = _read_text(getattr(args, attr, None)).strip()
    if text.startswith("{"):
        return matrix_from_json(text)
    if not getattr(args, "mode", None):
        raise UsageError("--mode is required for text matrix input")
    return parse_matrix(text, args.mode)


def _read_tableau(args, attr="tableau"):
    text = _read_text(getattr(args, attr, None)).strip()
    if text.startswith("{"):
        data = json.loads(text)
        return Tableau(data["flavor"], tuple(tuple(c) for c in data["chain"]))
    chain = tuple(parse_partition(line) for line in text.splitlines() if line.strip())
    return Tableau(getattr(args, "flavor", SST) or SST, chain)


def _emit_matrix(m, args):
    if getattr(args, "json", False):
        print(m.to_json())
    else:
        print(m.to_text())


def _emit_tableau(t, args):
    if getattr(args, "json", False):
        print(json.dumps({"flavor": t.flavor, "chain": [list(c) for c in t.chain]}))
    else:
        print(f"# flavor: {t.flavor}")
        for c in t.chain:
            print(format_partition(c))


def _shape(text):
    return SkewShape.parse(text)


def cmd_encode(args):
    t = _read_tableau(args)
    _emit_matrix(encode(t, args.mode), args)


def cmd_decode(args):
    m = _read_matrix(args)
    _emit_tableau(decode(m, _shape(args.shape), args.mode), args)


def cmd_move(args):
    m = _read_matrix(args)
    res = decomposition.apply_move(m, args.direction, args.index)
    if res is None:
        print("none")
        return
    _emit_matrix(res[0], args)
    print(f"# {res[1]}", file=sys.stderr)


def cmd_potential(args):
    m = _read_matrix(args)
    print(decomposition.potential(m, args.direction, args.index))


def cmd_exhaust(args):
    m = _read_matrix(args)
    dirs = [d.strip() for d in args.directions.split(",")]
    for d in dirs:
        if d not in DIRECTIONS:
            raise UsageError(f"unknown direction {d!r}")
    out, records = exhaust(m, dirs, args.bound)
    _emit_matrix(out, args)
    if args.records:
        for rec in records:
            print(f"# {rec}", file=sys.stderr)


def cmd_decompose(args):
    m = _read_matrix(args)
    p, q = decompose(m)
    _emit_matrix(p, args)
    print()
    _emit_matrix(q, args)


def cmd_compose(args):
    args.matrix = args.p
    p = _read_matrix(args)
    args.matrix = args.q
    q = _read_matrix(args)
    _emit_matrix(compose(p, q), args)


def cmd_normal_form(args):
    m = _read_matrix(args)
    print(format_partition(normal_form(m)))


def cmd_growth(args):
    m = _read_matrix(args)
    gd = growth.growth_diagram(m, args.orientation, verify=args.verify)
    if args.json:
        print(
            json.dumps(
                {
                    "orientation": gd.orientation,
                    "grid": [[list(s) for s in row] for row in gd.grid],
                }
            )
        )
    else:
        print(growth.render_growth_diagram(gd))


def cmd_burge(args):
    m = _read_matrix(args)
    if not args.mode:
        args.mode = INTEGRAL
    p, q = insertion.burge(m)
    _emit_tableau(p, args)
    print()
    _emit_tableau(q, args)


def cmd_dual_rsk(args):
    m = _read_matrix(args)
    if args.variant == "col":
        s, r = insertion.dual_rsk_col(m)
        _emit_tableau(s, args)
        print()
        _emit_tableau(r, args)
    else:
        r_star, s = insertion.dual_rsk_row(m)
        _emit_tableau(r_star, args)
        print()
        _emit_tableau(s, args)


def cmd_dual(args):
    t = _read_tableau(args)
    _emit_tableau(schutzenberger.dual(t), args)


def cmd_scalar(args):
    s1, s2 = _shape(args.shape1), _shape(args.shape2)
    box = tuple(int(x) for x in args.box.split(",")) if args.box else (6, 6)
    value = alternating_sum(s1, s2, args.stage, args.mode, box)
    print(value)
    if args.trace:
        _print_cancellation_trace(s1, s2, args.mode, box)


def _print_cancellation_trace(s1, s2, mode, box):
    """List the LR-condition cancellation pairs among tableau-side matrices."""
    from .matrices import encode
    from .shapes import part

    nu, mu = s2.outer, s2.inner
    weights = tuple(part(nu, i) - part(mu, i) for i in range(len(nu)))
    if s1.weight != s2.weight or any(x < 0 for x in weights):
        return
    for chain in cancellation._chains(s1.inner, s1.outer, weights):
        m = encode(Tableau(SST, chain), mode)
        if condition(m, s2, LR, mode):
            continue
        partner = cancellation.involution(m, s2, LR)
        print(f"# cancel {m.rows} <-> {partner.rows} witness {lr_witness(m, s2)}",
              file=sys.stderr)


def cmd_pictures(args):
    dom, cod = _shape(args.dom), _shape(args.cod)
    if args.action == "enumerate":
        pics = pictures.enumerate_pictures(dom, cod)
        print(len(pics))
        for p in pics:
            print()
            print(p.to_text())
    elif args.action == "validate":
        text = _read_text(args.map)
        mapping = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            src, dst = line.split("->")
            s = tuple(int(x) for x in src.strip().split(","))
            t = tuple(int(x) for x in dst.strip().split(","))
            mapping.append((s, t))
        ok = pictures.validate(tuple(mapping), dom, cod)
        print("valid" if ok else "invalid")
        if not ok:
            sys.exit(1)
    elif args.action == "lift":
        m = _read_matrix(args)
        proj = pictures.INT if not m.binary else pictures.BIN
        p = pictures.lift(m, dom, cod, proj)
        print(p.to_text())
    else:
        raise UsageError(f"unknown pictures action {args.action!r}")


def cmd_verify(args):
    from .verify import run_suites

    seed = int(os.environ.get("DC_SEED", "0"))
    names = args.suites or ["all"]
    ok = run_suites(names, random.Random(seed), verbose=True)
    if not ok:
        sys.exit(1)


def build_parser():
    ap = argparse.ArgumentParser(prog="doublecrystal")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    p = add("encode", cmd_encode, help="encode a semistandard tableau as a matrix")
    p.add_argument("tableau", nargs="?", help="tableau file (default stdin)")
    p.add_argument("--mode", choices=(BINARY, INTEGRAL), required=True)
    p.add_argument("--flavor", choices=FLAVORS, default=SST)

    p = add("decode", cmd_decode, help="decode a matrix into a tableau")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--mode", choices=(BINARY, INTEGRAL))
    p.add_argument("--shape", required=True, help="outer/inner, e.g. 9,8,5,5,3/4,1")

    p = add("move", cmd_move, help="apply one crystal move")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--mode", choices=(BINARY, INTEGRAL))
    p.add_argument("--direction", choices=DIRECTIONS, required=True)
    p.add_argument("--index", type=int, required=True)

    p = add("potential", cmd_potential, help="number of successive moves possible")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--mode", choices=(BINARY, INTEGRAL))
    p.add_argument("--direction", choices=DIRECTIONS, required=True)
    p.add_argument("--index", type=int, required=True)

    p = add("exhaust", cmd_exhaust, help="exhaust moves in the given directions")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--mode", choices=(BINARY, INTEGRAL))
    p.add_argument("--directions", required=True, help="comma-separated subset of up,down,left,right")
    p.add_argument("--bound", type=int)
    p.add_argument("--records", action="store_true", help="print the move records to stderr")

    p = add("decompose", cmd_decompose, help="the pair (P, Q) of exhausted matrices")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--mode", choices=(BINARY, INTEGRAL))

    p = add("compose", cmd_compose, help="rebuild the matrix from (P, Q)")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--mode", choices=(BINARY, INTEGRAL))

    p = add("normal-form", cmd_normal_form, help="partition of the normal form")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--mode", choices=(BINARY, INTEGRAL))

    p = add("growth", cmd_growth, help="growth diagram of a matrix")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--mode", choices=(BINARY, INTEGRAL))
    p.add_argument("--orientation", choices=growth.ORIENTATIONS, default=growth.NW)
    p.add_argument("--verify", action="store_true",
                   help="check every cell against direct normalization")

    p = add("burge", cmd_burge, help="Burge correspondence of an integral matrix")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--mode", choices=(INTEGRAL,), default=INTEGRAL)

    p = add("dual-rsk", cmd_dual_rsk, help="dual RSK of a binary matrix")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--mode", choices=(BINARY,), default=BINARY)
    p.add_argument("--variant", choices=("col", "row"), default="col")

    p = add("dual", cmd_dual, help="Schutzenberger dual of a straight tableau")
    p.add_argument("tableau", nargs="?")
    p.add_argument("--flavor", choices=FLAVORS, default=SST)

    p = add("scalar", cmd_scalar, help="alternating-sum scalar product")
    p.add_argument("--mode", choices=(BINARY, INTEGRAL), required=True)
    p.add_argument("--stage", choices=STAGES, required=True)
    p.add_argument("--shape1", required=True)
    p.add_argument("--shape2", required=True)
    p.add_argument("--box", help="rows,cols enumeration box (default 6,6)")
    p.add_argument("--trace", action="store_true",
                   help="print LR cancellation pairs to stderr")

    p = add("pictures", cmd_pictures, help="validate, lift, or enumerate pictures")
    p.add_argument("action", choices=("validate", "lift", "enumerate"))
    p.add_argument("--dom", required=True)
    p.add_argument("--cod", required=True)
    p.add_argument("--map", help="picture file for validate (default stdin)")
    p.add_argument("matrix", nargs="?", help="matrix file for lift")
    p.add_argument("--mode", choices=(BINARY, INTEGRAL))

    p = add("verify", cmd_verify, help="run named property suites")
    p.add_argument("suites", nargs="*", help="suite names (default: all)")

    return ap


def run(argv) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
