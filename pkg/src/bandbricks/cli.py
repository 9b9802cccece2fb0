"""Command-line interface.

Exit status: 0 on success, 1 when ``--strict`` is given and the answer is
negative (or a check fails), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .correspondence import BandModuleSpec, is_brick, is_brick_infinite, is_semibrick, w_ba
from .exceptions import BandBricksError, PresentationError
from .morphisms import hom_dimension, oracle_is_brick
from .presentation import parse_presentation, serialize_presentation, solve_signs, validate
from .strings import enumerate_bands, make_band
from .traced_poset import (
    build_traced_poset,
    covering_quiver,
    recover_presentation,
    traced_poset_from_json,
    validate_traced_poset,
)
from .trisection import trisect
from .validation import load_presentation
from .words import as_word, bw_transform, is_pcw, is_wpc_crown

SCHEMA = 1


def _b(flag):
    return "true" if flag else "false"


def _fmt_el(x):
    return f"({x[0]},{x[1]:+d})" if isinstance(x, tuple) else str(x)


def _json_el(x):
    return list(x) if isinstance(x, tuple) else x


class _Out:
    def __init__(self, args, command):
        self.args = args
        self.command = command

    def emit(self, payload, text, ok=True):
        if self.args.json:
            print(json.dumps({"schema": SCHEMA, "command": self.command, **payload}, indent=2))
        else:
            print(text)
        return 0 if ok or not self.args.strict else 1


def cmd_validate(args, out):
    if _is_file(args.presentation):
        with open(args.presentation) as fh:
            p = parse_presentation(fh.read())
    elif args.presentation in catalog.available():
        p = catalog.load(args.presentation, signs=False)
    else:
        raise PresentationError(f"no file or bundled presentation named {args.presentation!r}")
    r = validate(p)
    lines = [
        f"string algebra: {_b(r.is_string_algebra)}",
        f"gentle: {_b(r.is_gentle)}",
        f"acyclic: {_b(r.is_acyclic)}" + ("" if r.is_acyclic else f" (cycle {' '.join(r.cycle)})"),
    ]
    lines += [f"  {cond}: {msg}" for cond, msg in r.violations]
    payload = {
        "is_string_algebra": r.is_string_algebra,
        "is_gentle": r.is_gentle,
        "is_acyclic": r.is_acyclic,
        "violations": [list(v) for v in r.violations],
        "cycle": list(r.cycle) if r.cycle else None,
    }
    return out.emit(payload, "\n".join(lines), r.is_string_algebra)


def _is_file(name):
    from pathlib import Path

    return Path(name).is_file()


def cmd_signs(args, out):
    p = load_presentation(args.presentation)
    if args.resolve:
        p = solve_signs(p.without_signs())
    signs = {a.id: [p.sigma(a.id), p.eps(a.id)] for a in p.arrows}
    text = "\n".join(f"sign {a} {s:d} {e:d}" for a, (s, e) in signs.items())
    return out.emit({"signs": signs}, text)


def cmd_bands(args, out):
    p = load_presentation(args.presentation)
    bands = enumerate_bands(p, args.max_len)
    return out.emit(
        {"max_len": args.max_len, "bands": [str(b) for b in bands]},
        "\n".join(str(b) for b in bands) or "(no bands)",
    )


def cmd_is_brick(args, out):
    p = load_presentation(args.presentation)
    b = make_band(p, args.band)
    ans = is_brick(b, args.l)
    return out.emit({"band": str(b), "l": args.l, "is_brick": ans}, f"brick: {_b(ans)}", ans)


def cmd_oracle(args, out):
    p = load_presentation(args.presentation)
    b = make_band(p, args.band)
    ans = oracle_is_brick(b, args.l, max_len=args.max_len)
    return out.emit({"band": str(b), "l": args.l, "is_brick": ans}, f"brick: {_b(ans)}", ans)


def cmd_hom_dim(args, out):
    p = load_presentation(args.presentation)
    b1, b2 = make_band(p, args.source), make_band(p, args.target)
    d = hom_dimension(b1, b2, max_len=args.max_len)
    return out.emit({"from": str(b1), "to": str(b2), "hom_dimension": d}, f"hom-dim: {d}")


def cmd_crown(args, out):
    p = load_presentation(args.presentation)
    c = w_ba(make_band(p, args.band))
    return out.emit(
        {"crown": [_json_el(x) for x in c.letters], "valid": c.valid, "special": c.special},
        " ".join(_fmt_el(x) for x in c.letters),
    )


def cmd_poset(args, out):
    t = build_traced_poset(load_presentation(args.presentation))
    if args.format == "dot":
        print(t.hasse_dot(), end="")
        return 0
    if args.json or args.format == "json":
        print(t.to_json())
        return 0
    rep = validate_traced_poset(t)
    lines = ["covers:"]
    lines += [f"  {_fmt_el(x)} < {_fmt_el(y)}" for x, y in sorted(t.covers)]
    lines.append("maximal traces:")
    lines += ["  " + " ".join(_fmt_el(x) for x in s) for s in t.maximal_traces()]
    lines.append("axioms: " + ("all hold" if rep.ok else "violated " + ", ".join(rep.axioms())))
    print("\n".join(lines))
    return 0 if rep.ok or not args.strict else 1


def cmd_covering_quiver(args, out):
    q = covering_quiver(load_presentation(args.presentation))
    if args.format == "dot":
        print(q.to_dot(), end="")
        return 0
    edges = [[str(e.syllable), _json_el(e.source), _json_el(e.target)] for e in q.edges]
    text = "\n".join(f"{_fmt_el(e.source)} --{e.syllable}--> {_fmt_el(e.target)}" for e in q.edges)
    return out.emit({"nodes": [_json_el(n) for n in q.nodes], "edges": edges}, text)


def cmd_recover(args, out):
    with open(args.poset) as fh:
        t = traced_poset_from_json(fh.read())
    p = recover_presentation(t)
    return out.emit({"presentation": serialize_presentation(p)}, serialize_presentation(p).rstrip())


def cmd_brick_infinite(args, out):
    p = load_presentation(args.presentation)
    r = is_brick_infinite(p, method=args.method)
    text = f"brick-infinite: {_b(r.brick_infinite)}" + (f" (witness {r.witness})" if r.witness else "")
    payload = {"brick_infinite": r.brick_infinite, "witness": str(r.witness) if r.witness else None}
    return out.emit(payload, text, r.brick_infinite)


def cmd_semibrick(args, out):
    p = load_presentation(args.presentation)
    specs = [BandModuleSpec(make_band(p, b), args.l) for b in args.band]
    ans = is_semibrick(specs)
    return out.emit({"bands": [str(s.band) for s in specs], "is_semibrick": ans}, f"semibrick: {_b(ans)}", ans)


def cmd_trisect(args, out):
    q = trisect(load_presentation(args.presentation), require_gentle=not args.allow_non_gentle)
    return out.emit({"presentation": serialize_presentation(q)}, serialize_presentation(q).rstrip())


def cmd_word(args, out):
    order = _letters(args.alphabet) if args.alphabet else None
    w = _letters(args.word)
    if args.op == "bw":
        bw = bw_transform(w, order)
        return out.emit({"word": list(w), "bw": list(bw)}, "bw: " + " ".join(map(str, bw)))
    if args.op == "is-pcw":
        ans = is_pcw(w, order)
        return out.emit({"word": list(w), "is_pcw": ans}, f"pcw: {_b(ans)}", ans)
    ans = is_wpc_crown(w, order)
    return out.emit({"word": list(w), "is_wpc": ans}, f"wpc: {_b(ans)}", ans)


def _letters(text):
    """``"1<2<3"``, ``"1 2 3"`` or ``"123"`` become a tuple of letters (digits as ints)."""
    toks = text.replace("<", " ").split()
    if len(toks) == 1:
        return as_word(toks[0])
    return tuple(int(t) if t.isdigit() else t for t in toks)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS, help="exit 1 on a negative answer")

    parser = argparse.ArgumentParser(prog="bandbricks", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, presentation=True):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        if presentation:
            sp.add_argument("presentation", help="a .pres file or a bundled name")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check string-algebra, gentle and acyclic conditions")
    add("signs", cmd_signs, "print sign maps").add_argument("--resolve", action="store_true", help="discard given signs")
    add("bands", cmd_bands, "list bands up to rotation and inversion").add_argument("--max-len", type=int, default=8)
    band_help = 'band in written order, e.g. "b e c d^-1 e a^-1"'
    sp = add("is-brick", cmd_is_brick, "crown criterion for B(b, l, lambda)")
    sp.add_argument("--band", required=True, help=band_help)
    sp.add_argument("--l", type=int, default=1)
    sp = add("oracle-is-brick", cmd_oracle, "brute-force morphism search")
    sp.add_argument("--band", required=True, help=band_help)
    sp.add_argument("--l", type=int, default=1)
    sp.add_argument("--max-len", type=int, default=None)
    sp = add("hom-dim", cmd_hom_dim, "count matched factor/image pairs")
    sp.add_argument("--from", dest="source", required=True, help=band_help)
    sp.add_argument("--to", dest="target", required=True, help=band_help)
    sp.add_argument("--max-len", type=int, default=None)
    add("crown", cmd_crown, "crown of a band").add_argument("--band", required=True, help=band_help)
    add("poset", cmd_poset, "traced poset: covers, traces, axioms").add_argument(
        "--format", choices=["text", "json", "dot"], default="text"
    )
    add("covering-quiver", cmd_covering_quiver, "covering quiver").add_argument(
        "--format", choices=["text", "dot"], default="text"
    )
    add("recover", cmd_recover, "presentation from a traced poset JSON file", presentation=False).add_argument("poset")
    add("brick-infinite", cmd_brick_infinite, "search short bands for a brick").add_argument(
        "--method", choices=["crowns", "oracle"], default="crowns"
    )
    sp = add("semibrick", cmd_semibrick, "band semibrick test")
    sp.add_argument("--band", action="append", required=True, help="repeat once per summand")
    sp.add_argument("--l", type=int, default=1)
    add("trisect", cmd_trisect, "split arrows to reach an acyclic quiver").add_argument(
        "--allow-non-gentle", action="store_true"
    )
    sp = add("word", cmd_word, "word combinatorics", presentation=False)
    sp.add_argument("op", choices=["bw", "is-pcw", "is-wpc"])
    sp.add_argument("word")
    sp.add_argument("--alphabet", help='letter order, e.g. "1<2<3<4"')
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    args.json = getattr(args, "json", False)
    args.strict = getattr(args, "strict", False)
    try:
        return args.func(args, _Out(args, args.command))
    except (BandBricksError, ValueError, OSError) as exc:
        if args.json:
            print(json.dumps({"schema": SCHEMA, "command": args.command, "error": str(exc), "type": type(exc).__name__}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
