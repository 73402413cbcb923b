"""Command line: ``python -m qgroupoid <command> --input FILE ...``.

Commands
    enumerate  list the pairs (H, K) of subgroups with HK = G
    build      write CT, CT', the presented algebras and the pairing matrix
    verify     run every verifier on a pair (or check an algebra file)
    frattini   write the pair (N, N_G(P)) for a Sylow subgroup P of N
    export     write one structure of a pair as JSON

Exit status is 0 when everything passes, 1 when a verification fails and 2
on bad input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .double_groupoid import DoubleGroupoid
from .groups import (MAX_ORDER, NotAGroup, NotASubgroup, OrderTooLarge, PDoesNotDivideOrder,
                     all_subgroups, conjugate, intersection)
from .io import (GroupInput, InputError, algebra_json, dumps, loads, pair_descriptor, pairing_json,
                 parse_algebra, parse_group, parse_pair, parse_weak_hopf, squares_json,
                 weak_hopf_json)
from .matched_pair import (InvalidRepresentativeSet, NotARelativeMatchedPair, NotNormal,
                           RelativeMatchedPair, check_relative_matched_pair, frattini_pair)
from .presentation import build_presented
from .quantum_groupoid.duality import build_pairing
from .quantum_groupoid.weak_hopf import build_CT, build_CT_prime, verify_weak_hopf
from .report import Report
from .star_algebra import verify_algebra
from .suite import full_report

INPUT_ERRORS = (InputError, NotAGroup, NotASubgroup, OrderTooLarge, PDoesNotDivideOrder,
                NotARelativeMatchedPair, InvalidRepresentativeSet, NotNormal, OSError)

EXPORTS = ("squares-T", "squares-T'", "CT", "CT'", "presented-HK", "presented-KH",
           "pairing", "tables")


def _read_json(path: str):
    return loads(Path(path).read_text(encoding="utf-8"))


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _ids(text: str | None) -> list | None:
    """``--reps-I 0,3,4`` or a JSON list (which may hold cycle lists)."""
    if text is None:
        return None
    text = text.strip()
    if text.startswith("["):
        v = loads(text)
        if not isinstance(v, list):
            raise InputError("representatives must be a list")
        return v
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad representative list {text!r}") from exc


def _pair(args) -> tuple[GroupInput, RelativeMatchedPair]:
    return parse_pair(_read_json(args.input), args.max_order,
                      I=_ids(args.reps_I), J=_ids(args.reps_J))


def _emit_report(rep: Report, args) -> int:
    sys.stdout.write(rep.text() + "\n")
    failures = rep.failures()
    sys.stdout.write(f"{len(rep.checks) - len(failures)} passed, {len(failures)} failed\n")
    if args.json_report:
        Path(args.json_report).write_text(rep.to_json() + "\n", encoding="utf-8")
    return 0 if not failures else 1


# -- commands ---------------------------------------------------------------------

def _set(G, xs) -> str:
    return "{" + ",".join(G.name(x) for x in xs) + "}"


def _canonical(G, H, K) -> tuple:
    """Smallest image of the unordered pair under simultaneous conjugation."""
    best = None
    for g in G.elements:
        a = tuple(sorted(conjugate(G, g, x) for x in H.elements))
        b = tuple(sorted(conjugate(G, g, x) for x in K.elements))
        key = min((a, b), (b, a))
        if best is None or key < best:
            best = key
    return best


def cmd_enumerate(args) -> int:
    g = parse_group(_read_json(args.input), args.max_order)
    G = g.group
    subs = all_subgroups(G)
    rows, seen = [], set()
    for H in subs:
        for K in subs:
            if not check_relative_matched_pair(G, H, K):
                continue
            if not args.all:
                key = _canonical(G, H, K)
                if key in seen:
                    continue
                seen.add(key)
            S = intersection(H, K)
            rows.append((H, K, S))
    lines = [f"H={_set(G, H.elements)} K={_set(G, K.elements)} |H|={H.order} |K|={K.order} "
             f"|S|={S.order} |T|={H.order * K.order * S.order}" for H, K, S in rows]
    sys.stdout.write("\n".join(lines) + "\n")
    sys.stdout.write(f"{len(rows)} pairs\n")
    if args.out:
        listing = [dict(pair_descriptor(g, H, K), sizes={"H": H.order, "K": K.order,
                                                         "S": S.order, "T": H.order * K.order * S.order})
                   for H, K, S in rows]
        Path(args.out).write_text(dumps(listing), encoding="utf-8")
    return 0


def _structures(pair: RelativeMatchedPair) -> dict[str, dict]:
    T = DoubleGroupoid(pair, "T")
    W, Wp = build_CT(pair, T), build_CT_prime(pair, T.opposite)
    return {
        "CT.json": weak_hopf_json(W),
        "CT_prime.json": weak_hopf_json(Wp),
        "presented.json": {"HK": algebra_json(build_presented(pair, "HK").algebra),
                           "KH": algebra_json(build_presented(pair, "KH").algebra)},
        "pairing.json": pairing_json(build_pairing(pair, W, Wp, T)),
    }


def cmd_build(args) -> int:
    if not args.out:
        raise InputError("build needs --out DIR")
    _, pair = _pair(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, obj in _structures(pair).items():
        (out / name).write_text(dumps(obj), encoding="utf-8")
        dim = obj.get("dim", obj.get("rows", obj.get("HK", {}).get("dim")))
        sys.stdout.write(f"{out / name} dim {dim}\n")
    return 0


def cmd_verify(args) -> int:
    obj = _read_json(args.input)
    if isinstance(obj, dict) and "dim" in obj:
        if "coproduct" in obj:
            rep = verify_weak_hopf(parse_weak_hopf(obj))
        else:
            rep = verify_algebra(parse_algebra(obj))
        return _emit_report(rep, args)
    _, pair = parse_pair(obj, args.max_order, I=_ids(args.reps_I), J=_ids(args.reps_J))
    alt = None
    if args.alt_I is not None:
        g = parse_group(obj["group"], args.max_order)
        alt = [g.element(x) for x in _ids(args.alt_I)]
    return _emit_report(full_report(pair, alt, crossed=not args.no_crossed), args)


def cmd_frattini(args) -> int:
    g = parse_group(_read_json(args.input), args.max_order)
    N = g.subgroup(_ids(args.normal) or [])
    pair = frattini_pair(g.group, N, args.prime)
    d = pair_descriptor(g, pair.H, pair.K)
    _write(dumps(d), args.out)
    if args.out:
        sys.stdout.write(f"{args.out}: |H|={pair.H.order} |K|={pair.K.order} |S|={pair.S.order}\n")
    return 0


def cmd_export(args) -> int:
    _, pair = _pair(args)
    what = args.what
    T = DoubleGroupoid(pair, "T")
    if what == "squares-T":
        obj = squares_json(T)
    elif what == "squares-T'":
        obj = squares_json(T.opposite)
    elif what == "CT":
        obj = weak_hopf_json(build_CT(pair, T))
    elif what == "CT'":
        obj = weak_hopf_json(build_CT_prime(pair, T.opposite))
    elif what in ("presented-HK", "presented-KH"):
        obj = algebra_json(build_presented(pair, what[-2:]).algebra)
    elif what == "pairing":
        obj = pairing_json(build_pairing(pair, build_CT(pair, T), build_CT_prime(pair, T.opposite), T))
    else:
        tb = pair.tables
        obj = {"I": list(pair.I), "J": list(pair.J),
               **{name: [[x, y, v] for (x, y), v in sorted(getattr(tb, name).items())]
                  for name in ("act_HK", "comp_HK", "act_KH", "comp_KH")}}
    _write(dumps(obj), args.out)
    return 0


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qgroupoid", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="group or pair JSON file")
    common.add_argument("--max-order", type=int, default=MAX_ORDER,
                        help=f"refuse groups larger than this (default {MAX_ORDER})")
    reps = argparse.ArgumentParser(add_help=False)
    reps.add_argument("--reps-I", dest="reps_I", help="representatives of K/S (ids, comma separated)")
    reps.add_argument("--reps-J", dest="reps_J", help="representatives of H/S (ids, comma separated)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list pairs with HK = G")
    p.add_argument("--all", action="store_true", help="list every ordered pair, not one per class")
    p.add_argument("--out", help="also write the listing as JSON")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("build", parents=[common, reps], help="write the structure constants")
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common, reps], help="run the verification suite")
    p.add_argument("--json-report", help="also write the report as JSON")
    p.add_argument("--alt-I", dest="alt_I", help="second representative set for the conjugacy checks")
    p.add_argument("--no-crossed", action="store_true", help="skip the crossed product")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("frattini", parents=[common], help="pair from the Frattini argument")
    p.add_argument("--normal", required=True, help="generators of N (JSON list or ids)")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--out", help="pair descriptor file (default: stdout)")
    p.set_defaults(func=cmd_frattini)

    p = sub.add_parser("export", parents=[common, reps], help="write one structure as JSON")
    p.add_argument("--what", choices=EXPORTS, required=True)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
