"""Column insertion, the recording sequence, and reverse insertion."""

from __future__ import annotations

import itertools
import random

from dnsca import insertion
from dnsca.letters import all_letters
from dnsca.tableaux import enumerate_two_row, reading


def test_box_exchange_roundtrip():
    """xi is injective where defined and xi_inverse recovers the input."""
    for n in (4, 5):
        count = 0
        for x, y, z in itertools.product(all_letters(n), repeat=3):
            try:
                img = insertion.xi(x, y, z, n)
            except AssertionError:
                continue
            count += 1
            assert insertion.xi_inverse(*img, n) == (x, y, z)
        assert count > 100


def test_worked_insertion_example():
    """Inserting the word 2, 4, 4bar, 3 produces a height (2, 1) tableau
    with first column 2, 3, 4bar and second column 4."""
    p, rec = insertion.word_to_pq((2, 4, -4, 3), 4)
    assert p == ((2, 3, -4), (4,))
    shapes = [s for s, _ in rec]
    assert shapes[0] == ()
    assert len(rec) == 5


def test_insert_single_letters():
    n = 4
    for b in all_letters(n):
        cols = insertion.insert_letter(b, (), n)
        assert cols == ((b,),)


def test_recording_tracks_shape():
    """Consecutive recorded shapes differ in exactly one column height."""
    n = 4
    rng = random.Random(7)
    alpha = all_letters(n)
    for _ in range(200):
        word = tuple(rng.choice(alpha) for _ in range(rng.randint(1, 6)))
        p, rec = insertion.word_to_pq(word, n)
        assert rec[-1][0] == insertion.shape_of(p)
        for (s0, _), (s1, _) in zip(rec, rec[1:]):
            a = list(s0) + [0] * (len(s1) - len(s0))
            b = list(s1) + [0] * (len(s0) - len(s1))
            diffs = [abs(x - y) for x, y in zip(a, b)]
            assert sum(diffs) == 1


def test_roundtrip_on_short_words():
    n = 4
    alpha = all_letters(n)
    for word in itertools.product(alpha, repeat=2):
        p, rec = insertion.word_to_pq(word, n)
        assert insertion.pq_to_word(p, rec, n) == word


def test_roundtrip_on_random_words():
    n = 4
    rng = random.Random(11)
    alpha = all_letters(n)
    for _ in range(300):
        word = tuple(rng.choice(alpha) for _ in range(rng.randint(3, 7)))
        p, rec = insertion.word_to_pq(word, n)
        assert insertion.pq_to_word(p, rec, n) == word


def test_roundtrip_on_cell_pair_readings():
    for n in (4, 5):
        cells = enumerate_two_row(1, n)
        for t in cells:
            for tp in cells:
                word = reading(t.cols) + reading(tp.cols)
                p, rec = insertion.word_to_pq(word, n)
                assert insertion.pq_to_word(p, rec, n) == word
