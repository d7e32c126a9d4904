"""Command line interface: evolve states, apply R matrices, run checks."""

from __future__ import annotations

import argparse
import json

from . import insertion, rmatrix, sca, zero_action
from .crystals import check_axioms
from .tableaux import (OneRowCrystal, TwoRow, TwoRowCrystal, enumerate_one_row,
                       enumerate_two_row, fmt_letter, fmt_one_row, fmt_two_row,
                       parse_one_row, parse_two_row, parse_word, reading,
                       u_two_row)


# ---------------------------------------------------------------------------
# evolve


def _cmd_evolve(args) -> int:
    n = args.n
    state = sca.parse_state(args.state, n)
    if args.length > len(state):
        state = sca.make_state(state, args.length)
    states = [state]
    for _ in range(args.steps):
        if args.natural:
            state, _ = sca.evolve_natural(state, n)
        else:
            state, _ = sca.evolve(state, args.carrier, n)
        states.append(state)
    if args.json:
        doc = {
            "n": n,
            "mode": "natural" if args.natural else f"carrier-{args.carrier}",
            "states": [[fmt_two_row(c) for c in p] for p in states],
        }
        if not args.natural:
            doc["energy"] = sca.state_energy(states[0], args.carrier, n)
        print(json.dumps(doc))
    else:
        for t, p in enumerate(states):
            print(f"t={t}")
            print(sca.fmt_state(p))
            print()
    return 0


# ---------------------------------------------------------------------------
# rmatrix


def _cmd_rmatrix(args) -> int:
    n = args.n
    if args.family == "two_row":
        left = parse_two_row(args.left, args.s, n)
        right = parse_two_row(args.right, 1, n)
        b1, b2 = rmatrix.r_two_row(left, right, n)
        out, h = (fmt_two_row(b1), fmt_two_row(b2)), rmatrix.h_two_row(left, right, n)
    elif args.family == "one_row":
        left = parse_one_row(args.left, n)
        right = parse_one_row(args.right, n)
        b1, b2 = rmatrix.r_one_row(left, right, n)
        out, h = (fmt_one_row(b1, n), fmt_one_row(b2, n)), rmatrix.h_one_row(left, right, n)
    else:
        word = parse_word(args.left)
        assert len(word) == 1, "left factor must be a single letter"
        right = parse_two_row(args.right, 1, n)
        b1, b2 = rmatrix.r_box_cell(word[0], right, n)
        out, h = (fmt_two_row(b1), fmt_letter(b2)), None
    if args.json:
        print(json.dumps({"left": out[0], "right": out[1], "h": h}))
    else:
        line = f"{out[0]} . {out[1]}"
        if h is not None:
            line += f"  H={h}"
        print(line)
    return 0


# ---------------------------------------------------------------------------
# solitons


def _cmd_solitons(args) -> int:
    n = args.n
    state = sca.parse_state(args.state, n)
    sols = sca.detect_solitons(state, n)
    if sols is None:
        print("not a union of solitons")
        return 1
    for s in sols:
        print(f"start={s.start} length={s.length} label={sca.soliton_label(s, n)}")
    return 0


# ---------------------------------------------------------------------------
# verify suites


def _suite_axioms(n: int):
    for name, crys, elems in (
        ("B(2,1)", TwoRowCrystal(n, 1), enumerate_two_row(1, n)),
        ("B(1,2)", OneRowCrystal(n, 2), enumerate_one_row(2, n)),
    ):
        errors = check_axioms(crys, elems)
        yield f"crystal axioms on {name}, n={n}", not errors


def _suite_sigma(n: int):
    for s in (1, 2):
        cells = enumerate_two_row(s, n)
        ok = all(zero_action.sigma(zero_action.sigma(t, n), n) == t for t in cells)
        yield f"involution squares to identity on B(2,{s}), n={n}", ok
        ok = True
        for t in cells:
            up = zero_action.e0(t, n)
            if up is not None and zero_action.f0(up, n) != t:
                ok = False
            down = zero_action.f0(t, n)
            if down is not None and zero_action.e0(down, n) != t:
                ok = False
            if (up is None) != (zero_action.eps0(t, n) == 0):
                ok = False
            if (down is None) != (zero_action.phi0(t, n) == 0):
                ok = False
        yield f"raising and lowering at 0 are inverse on B(2,{s}), n={n}", ok
        u = u_two_row(s, s)
        yield (f"highest weight 0-string lengths on B(2,{s}), n={n}",
               zero_action.eps0(u, n) == 2 * s and zero_action.phi0(u, n) == 0)


def _suite_insertion(n: int):
    from .letters import all_letters
    ok = True
    count = 0
    for x in all_letters(n):
        for y in all_letters(n):
            for z in all_letters(n):
                try:
                    img = insertion.xi(x, y, z, n)
                except AssertionError:
                    continue
                count += 1
                if insertion.xi_inverse(*img, n) != (x, y, z):
                    ok = False
    yield f"single box exchange inverts on {count} triples, n={n}", ok
    ok = True
    cells = enumerate_two_row(1, n)
    for t in cells:
        for tp in cells:
            word = reading(t.cols) + reading(tp.cols)
            p, rec = insertion.word_to_pq(word, n)
            if insertion.pq_to_word(p, rec, n) != word:
                ok = False
    yield f"insertion round trip on pair readings, n={n}", ok
    p, _ = insertion.word_to_pq((2, 4, -4, 3), n)
    yield "worked insertion example", p == ((2, 3, -4), (4,))


def _suite_rmatrix(n: int):
    from .crystals import TensorCrystal
    for s in (1, 2):
        swapped = TensorCrystal(TwoRowCrystal(n, 1), TwoRowCrystal(n, s))
        classical = range(1, n + 1)
        ok = True
        for k, b in rmatrix.highest_weight_pairs(s, n):
            img = rmatrix.r_highest(k, b, s, n)
            if any(swapped.eps(img, i) != 0 for i in classical):
                ok = False
            if rmatrix.r_two_row(u_two_row(k, s), b, n) != img:
                ok = False
            if rmatrix.h_two_row(u_two_row(k, s), b, n) != rmatrix.h_highest(k, b, s):
                ok = False
        yield f"highest weight table for capacity {s}, n={n}", ok
    left = parse_two_row("-4/4", 2, 4)
    right = parse_two_row("1/2", 1, 4)
    img = rmatrix.r_two_row(left, right, 4)
    yield ("worked R example",
           img == (TwoRow((), 1), TwoRow(((1, 2), (-4, 4)), 2))
           and rmatrix.h_two_row(left, right, 4) == -1)
    rows = (
        (((1, 2),), ((1, 2),), 1),
        (((2, 3),), ((1, 2),), 3),
        ((), ((1, 2),), -2),
        (((2, -2),), (), 1),
    )
    ok = True
    for cols, img_cols, img_letter in rows:
        got = rmatrix.r_box_cell(1, TwoRow(cols, 1), n)
        if got != (TwoRow(img_cols, 1), img_letter):
            ok = False
    yield f"single box exchange on highest weight rows, n={n}", ok


def _suite_yang_baxter(n: int):
    count = rmatrix.yang_baxter_one_row(1, 1, 2, n)
    yield f"braid relation on {count} row triples (1,1,2), n={n}", count > 0


def _suite_solitons(n: int):
    ok = True
    length = 8
    vac = (sca.VACUUM,) * length
    for c in enumerate_two_row(1, n):
        for i in range(length):
            p = tuple(c if j == i else sca.VACUUM for j in range(length))
            if (sca.state_energy(p, 1, n) == 1) != sca.is_one_soliton_state(p, n):
                ok = False
    yield f"energy one states are single solitons, n={n}", ok
    cells = tuple(TwoRow(((t, b),), 1) for t, b in zip((2, 1, 1), (-3, 3, 3)))
    ok = True
    for k in (1, 2, 3, 4):
        p = sca.make_state((sca.VACUUM,) * 2 + cells, 26)
        start = sca.detect_solitons(p, n)[0].start
        for _ in range(4):
            p = sca.evolve(p, k, n)[0]
            sols = sca.detect_solitons(p, n)
            if sols is None or len(sols) != 1:
                ok = False
                break
            if sols[0].start - start != min(k, 3):
                ok = False
            start = sols[0].start
    yield f"soliton speed is min(carrier, length), n={n}", ok


def _suite_scattering(n: int):
    big = tuple(TwoRow(((t, b),), 1) for t, b in zip((2, 1, 1), (-3, 3, 3)))
    small = (TwoRow(((1, 4),), 1),)
    state = sca.make_state(big + (sca.VACUUM,) * 4 + small, 27)
    report = sca.check_scattering(state, 3, 7, n)
    yield f"two soliton scattering matches the R matrix, n={n}", report["ok"]


_SUITES = {
    "axioms": _suite_axioms,
    "sigma": _suite_sigma,
    "insertion": _suite_insertion,
    "rmatrix": _suite_rmatrix,
    "yang-baxter": _suite_yang_baxter,
    "solitons": _suite_solitons,
    "scattering": _suite_scattering,
}


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        for check, ok in _SUITES[name](args.n):
            print(f"{'PASS' if ok else 'FAIL'}  {check}")
            failed += 0 if ok else 1
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnsca",
        description="Crystal combinatorics and the box ball automaton for "
                    "the affine orthogonal family.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="run the cellular automaton")
    p.add_argument("--n", type=int, default=4, help="rank (at least 4)")
    p.add_argument("-l", "--carrier", type=int, default=3,
                   help="carrier capacity for the evolution")
    p.add_argument("--natural", action="store_true",
                   help="use the single box carrier instead")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--length", type=int, default=0,
                   help="pad the state with vacuum up to this many cells")
    p.add_argument("--state", required=True,
                   help='cells like "2/-3 2/3 1/3 e 1/2"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_evolve)

    p = sub.add_parser("rmatrix", help="apply a combinatorial R matrix")
    p.add_argument("--family", choices=("two_row", "one_row", "box_cell"),
                   default="two_row")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--s", type=int, default=1,
                   help="capacity of the left factor (two_row family)")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rmatrix)

    p = sub.add_parser("solitons", help="detect solitons in a state")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--state", required=True)
    p.set_defaults(func=_cmd_solitons)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(_SUITES) + ("all",), default="all")
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
