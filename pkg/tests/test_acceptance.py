"""Acceptance gate: the headline properties, one pass or fail line each.

Run with -s to stream the lines; under plain pytest each criterion is a
separate test so the verdicts also appear in the -v listing.
"""

from __future__ import annotations

import itertools
import random
import time

from _traces import TRACES
from dnsca import insertion, sca
from dnsca import zero_action as za
from dnsca.crystals import TensorCrystal, check_axioms
from dnsca.rmatrix import (brute_two_row_table, h_highest, h_two_row,
                           highest_weight_pairs, r_highest, r_two_row,
                           yang_baxter_one_row, yang_baxter_two_row)
from dnsca.sca import VACUUM, evolve, evolve_natural, state_e, state_energy
from dnsca.tableaux import (OneRowCrystal, TwoRow, TwoRowCrystal,
                            enumerate_one_row, enumerate_two_row, u_two_row)


def _report(name, func):
    start = time.time()
    try:
        func()
    except Exception:
        print(f"FAIL {name} ({time.time() - start:.1f}s)")
        raise
    print(f"PASS {name} ({time.time() - start:.1f}s)")


def test_criterion_01_involution_and_zero_raising():
    def run():
        start = time.time()
        t = TwoRow(((1, 2), (2, -2)), 2)
        assert za.sigma(t, 4) == TwoRow(((2, -1),), 2)
        assert za.e0(t, 4) == TwoRow(((2, -2),), 2)
        assert time.time() - start < 1.0

    _report("criterion 1: involution and zero raising on the worked cell", run)


def test_criterion_02_column_insertion_example():
    def run():
        p, _ = insertion.word_to_pq((2, 4, -4, 3), 4)
        assert p == ((2, 3, -4), (4,))

    _report("criterion 2: column insertion of the worked word", run)


def test_criterion_03_r_table_and_brute_force():
    def run():
        start = time.time()
        for n, s in ((4, 1), (4, 2), (4, 3), (5, 1), (5, 2)):
            for k, b in highest_weight_pairs(s, n):
                assert r_two_row(u_two_row(k, s), b, n) == r_highest(k, b, s, n)
                assert h_two_row(u_two_row(k, s), b, n) == h_highest(k, b, s)
        table = brute_two_row_table(2, 4)
        assert len(table) == 329 * 29
        for (a, b), img in table.items():
            assert r_two_row(a, b, 4) == img
        assert time.time() - start < 120

    _report("criterion 3: R table rows and brute force agreement", run)


def test_criterion_04_worked_r_example():
    def run():
        t, tp = TwoRow(((-4, 4),), 2), TwoRow(((1, 2),), 1)
        assert r_two_row(t, tp, 4) == (TwoRow((), 1),
                                       TwoRow(((1, 2), (-4, 4)), 2))

    _report("criterion 4: worked R example", run)


def test_criterion_05_yang_baxter():
    def run():
        start = time.time()
        assert yang_baxter_two_row(2, 4) == 329 * 29 * 29
        assert yang_baxter_one_row(1, 1, 2, 4) == 8 * 8 * 35
        assert time.time() - start < 300

    _report("criterion 5: Yang Baxter relation, exhaustive", run)


def test_criterion_06_crystal_axioms():
    def run():
        for n in (4, 5):
            for crys, elems in (
                (TwoRowCrystal(n, 1), enumerate_two_row(1, n)),
                (TwoRowCrystal(n, 2), enumerate_two_row(2, n)),
                (OneRowCrystal(n, 2), enumerate_one_row(2, n)),
            ):
                assert check_axioms(crys, elems) == []

    _report("criterion 6: crystal axioms at every index", run)


def test_criterion_07_energy_one_solitons():
    def run():
        n, length = 4, 8
        cells = enumerate_two_row(1, n)
        others = [c for c in cells if c != VACUUM]
        states = [(VACUUM,) * length]
        for i in range(length):
            for a in others:
                states.append(tuple(a if j == i else VACUUM
                                    for j in range(length)))
        for i, j in itertools.combinations(range(length), 2):
            for a in others:
                for b in others:
                    states.append(tuple(a if k == i else b if k == j else VACUUM
                                        for k in range(length)))
        assert len(states) == 22177
        for p in states:
            assert (state_energy(p, 1, n) == 1) == sca.is_one_soliton_state(p, n)

    _report("criterion 7: unit energy picks out single solitons", run)


def test_criterion_08_soliton_speed():
    def run():
        n = 4
        cells = tuple(TwoRow(((t, b),), 1)
                      for t, b in zip((2, 2, 1), (-3, -4, 3)))
        for k in (1, 2, 3, 4, 5):
            p = sca.make_state((VACUUM,) * 2 + cells, 30)
            start = sca.detect_solitons(p, n)[0].start
            for _ in range(5):
                p, _ = evolve(p, k, n)
                sols = sca.detect_solitons(p, n)
                assert sols is not None and len(sols) == 1
                assert sols[0].start - start == min(k, 3)
                start = sols[0].start

    _report("criterion 8: speed is capped at the carrier capacity", run)


def test_criterion_09_two_soliton_scattering():
    def run():
        for n, data in TRACES.items():
            start = time.time()
            p = data["states"][0]
            for expected in data["states"][1:]:
                p, _ = evolve(p, data["carrier"], n)
                assert p == expected
            report = sca.check_scattering(data["states"][0], data["carrier"],
                                          len(data["states"]) - 1, n)
            assert report["ok"]
            assert report["observed"] == data["outgoing"]
            assert report["predicted"] == data["outgoing"]
            assert report["shift"] == data["shift"]
            assert report["energy"] == data["energy"]
            assert time.time() - start < 60

    _report("criterion 9: golden traces and scattering prediction", run)


def test_criterion_10_conserved_structure():
    def run():
        for n in (4, 5, 6):
            rng = random.Random(1000 + n)
            others = [c for c in enumerate_two_row(1, n) if c != VACUUM]
            states = []
            for _ in range(200):
                cells = [VACUUM] * 30
                for i in rng.sample(range(12), rng.randint(1, 6)):
                    cells[i] = rng.choice(others)
                states.append(tuple(cells))
            for p in states:
                for r in (1, 2, 3):
                    q, _ = evolve(p, r, n)
                    assert evolve_natural(q, n)[0] \
                        == evolve(evolve_natural(p, n)[0], r, n)[0]
                    for i in range(1, n + 1):
                        if i == 2:
                            continue
                        ep, eq = state_e(p, i, n), state_e(q, i, n)
                        if ep is None:
                            assert eq is None
                        else:
                            assert eq is not None
                            assert evolve(ep, r, n)[0] == eq
                q1, _ = evolve(p, 2, n)
                for l in (1, 2, 3):
                    assert state_energy(q1, l, n) == state_energy(p, l, n)

    _report("criterion 10: commuting flows and conserved energies", run)
