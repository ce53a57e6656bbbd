"""Command line entry point.

Exit status: 0 when every check agrees, 1 when a mathematical mismatch is
found, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _six_ints(p: argparse.ArgumentParser, dest: str, flag: str | None = None):
    names = "alpha beta gamma delta epsilon eta"
    if flag:
        p.add_argument(flag, dest=dest, type=int, nargs=6, required=True, metavar="N", help=f"box values {names}")
    else:
        p.add_argument(dest, type=int, nargs=6, metavar="N", help=f"box values {names}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hexatangle", description="Unknotting census tools for filled hexatangles.")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized sampling")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="classify one integral filling")
    _six_ints(c, "values")
    c.add_argument("--no-oracle", action="store_true", help="skip the invariant cross-check")

    v = sub.add_parser("verify-tables", help="check every table instance with independent invariants")
    v.add_argument("--bound", type=int, required=True)

    e = sub.add_parser("enumerate", help="census of symmetry orbits in a box")
    e.add_argument("--bound", type=int, required=True)
    e.add_argument("--out", required=True)
    e.add_argument("--csv", action="store_true")
    e.add_argument("--no-oracle", action="store_true")
    e.add_argument("--allow-large", action="store_true", help="permit bounds above the default limit")

    n = sub.add_parser("normalize-braid", help="conjugacy normal form of a 3-braid")
    n.add_argument("word")

    s = sub.add_parser("surgery", help="surgery description of a filling")
    _six_ints(s, "values", "--from-filling")
    s.add_argument("--braid", action="store_true", help="also print the framed braid after twisting")

    b = sub.add_parser("braid-family", help="check the one-parameter framed braid family")
    b.add_argument("--gamma-min", type=int, required=True)
    b.add_argument("--gamma-max", type=int, required=True)

    x = sub.add_parser("crosscheck", help="random bracket sampling and the determinant/homology identity")
    x.add_argument("--samples", type=int, default=20)
    x.add_argument("--bound", type=int, default=2)
    return p


def _print(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _cmd_classify(a) -> int:
    from .harness import oracle
    from .hexcore import Verdict, classify

    res = classify(tuple(a.values))
    out = {"filling": a.values} | res.to_json()
    code = EXIT_OK
    if not a.no_oracle:
        o = oracle(a.values)
        out["oracle"] = o.__dict__
        trivial = res.verdict is Verdict.TRIVIAL
        if trivial != o.looks_unknotted or (res.verdict is Verdict.NOT_A_KNOT) != (o.components != 1):
            code = EXIT_MISMATCH
    _print(out)
    return code


def _cmd_verify(a) -> int:
    from .harness import verify_tables

    rep = verify_tables(a.bound)
    for r in rep.rows:
        print(f"{r.row_id}\t{'PASS' if r.ok else 'FAIL'}\t{r.instances}")
        for f in r.failures:
            print(f"  {json.dumps(f, sort_keys=True)}")
    print(f"rows={len(rep.rows)} instances={rep.instance_count} failures={len(rep.failures())}")
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def _cmd_enumerate(a) -> int:
    from .harness import RunConfig, workers_from_env, write_census

    cfg = RunConfig(
        bound=a.bound,
        out=a.out,
        csv=a.csv,
        oracle=not a.no_oracle,
        workers=workers_from_env(),
        allow_large=a.allow_large,
    )
    recs = write_census(cfg)
    bad = [r for r in recs if r.mismatch]
    counts: dict[str, int] = {}
    for r in recs:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    _print({"orbits": len(recs), "verdicts": counts, "mismatches": [r.orbit_id for r in bad]})
    return EXIT_MISMATCH if bad else EXIT_OK


def _cmd_normalize(a) -> int:
    from .braids import BraidWord3, closed_braid_class, schreier_normal_form

    w = BraidWord3.parse(a.word)
    nf = schreier_normal_form(w)
    _print(
        {
            "input": a.word,
            "normal_form": nf.to_text(),
            "central_power": nf.central_power,
            "tail": nf.tail.to_text(),
            "closure": closed_braid_class(w).value,
            "components": w.closure_components(),
        }
    )
    return EXIT_OK


def _cmd_surgery(a) -> int:
    from .braids import braid_from_surgery, filling_to_surgery, framed_braid_h1, h1_order

    s = filling_to_surgery(tuple(a.values))
    if not a.braid:
        print(s.dumps())
        return EXIT_OK
    fb = braid_from_surgery(s)
    h = h1_order(s)
    hb = framed_braid_h1(fb)
    _print({"surgery": s.to_json(), "h1": h} | fb.to_json() | {"closure_h1": hb})
    return EXIT_OK if h == hb else EXIT_MISMATCH


def _cmd_family(a) -> int:
    from .harness import braid_family_check

    rep = braid_family_check(a.gamma_min, a.gamma_max)
    for e in rep.entries:
        print(f"gamma={e.gamma}\t{'PASS' if e.ok else 'FAIL'}\t{e.braid}\tframings={list(e.framings)}\th1={e.closure_h1}")
    if rep.excluded:
        print(f"excluded gamma values: {rep.excluded}")
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def _cmd_crosscheck(a) -> int:
    from .harness import bracket_mismatches, homology_identity_mismatches, random_fillings

    xs = random_fillings(a.samples, a.seed, 0, 15)
    bb = bracket_mismatches(xs)
    hh = homology_identity_mismatches(a.bound)
    _print({"bracket_samples": len(xs), "bracket_mismatches": bb, "homology_mismatches": hh})
    return EXIT_MISMATCH if bb or hh else EXIT_OK


_COMMANDS = {
    "classify": _cmd_classify,
    "verify-tables": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "normalize-braid": _cmd_normalize,
    "surgery": _cmd_surgery,
    "braid-family": _cmd_family,
    "crosscheck": _cmd_crosscheck,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"hexatangle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
