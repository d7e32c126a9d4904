"""Two-row and one-row tableaux: validity, enumeration, reading words."""

from __future__ import annotations

from dnsca import tableaux
from dnsca.crystals import check_axioms
from dnsca.tableaux import (OneRowCrystal, TwoRow, TwoRowCrystal,
                            cols_from_reading, enumerate_one_row,
                            enumerate_two_row, fmt_one_row, fmt_two_row,
                            is_valid_column, is_valid_two_row,
                            one_row_from_word, parse_one_row, parse_two_row,
                            parse_word, reading, u_cols, u_one_row, u_two_row,
                            word_from_one_row)


def test_column_validity():
    n = 4
    assert is_valid_column(1, 2, n)
    assert is_valid_column(3, -3, n)
    assert is_valid_column(4, -4, n)
    assert is_valid_column(-4, 4, n)
    assert not is_valid_column(2, 2, n)
    assert not is_valid_column(2, 1, n)
    assert not is_valid_column(1, -1, n)


def test_family_sizes():
    assert len(enumerate_two_row(1, 4)) == 29
    assert len(enumerate_two_row(2, 4)) == 329
    assert len(enumerate_two_row(1, 5)) == 46
    assert len(enumerate_two_row(1, 6)) == 67
    assert len(enumerate_one_row(1, 4)) == 8
    assert len(enumerate_one_row(2, 4)) == 35
    assert len(enumerate_one_row(2, 5)) == 54


def test_capacity_one_cells_have_at_most_one_column():
    for t in enumerate_two_row(1, 4):
        assert t.cap == 1
        assert t.k in (0, 1)
        assert len(t.cols) <= 1
        assert is_valid_two_row(t.cols, 4)


def test_reading_word_roundtrip():
    for n in (4, 5):
        for t in enumerate_two_row(2, n):
            word = reading(t.cols)
            assert cols_from_reading(word) == t.cols


def test_highest_weight_tableau():
    assert u_cols(3) == ((1, 2), (1, 2), (1, 2))
    u = u_two_row(2, 3)
    assert u.cols == u_cols(2) and u.cap == 3
    crys = TwoRowCrystal(4, 3)
    assert all(crys.e(u, i) is None for i in range(1, 5))


def test_two_row_format_roundtrip():
    n = 4
    for t in enumerate_two_row(1, n):
        assert parse_two_row(fmt_two_row(t), 1, n) == t
    assert fmt_two_row(TwoRow((), 1)) == "e"
    assert fmt_two_row(TwoRow(((1, 2), (2, -2)), 2)) == "12/2-2"


def test_parse_word():
    assert parse_word("24-43") == (2, 4, -4, 3)
    assert parse_word("1 2, -1") == (1, 2, -1)


def test_one_row_roundtrips():
    for n in (4, 5):
        for s in (1, 2):
            for b in enumerate_one_row(s, n):
                word = word_from_one_row(b, n)
                assert one_row_from_word(word, n) == b
                assert parse_one_row(fmt_one_row(b, n), n) == b


def test_one_row_words_weakly_increase():
    from dnsca.letters import le
    n = 4
    for b in enumerate_one_row(2, n):
        word = word_from_one_row(b, n)
        for x, y in zip(word, word[1:]):
            assert le(x, y, n) or x == y


def test_two_row_crystal_axioms():
    for n, s in ((4, 1), (4, 2), (5, 1)):
        crys = TwoRowCrystal(n, s)
        errors = check_axioms(crys, enumerate_two_row(s, n))
        assert errors == []


def test_one_row_crystal_axioms():
    for n, s in ((4, 1), (4, 2), (5, 2)):
        crys = OneRowCrystal(n, s)
        errors = check_axioms(crys, enumerate_one_row(s, n))
        assert errors == []


def test_one_row_zero_string_on_highest():
    n = 4
    crys = OneRowCrystal(n, 2)
    u = u_one_row(2, n)
    assert word_from_one_row(u, n) == (1, 1)
    assert crys.eps(u, 0) == 2 and crys.phi(u, 0) == 0
    up = crys.e(u, 0)
    assert up is not None and word_from_one_row(up, n) == (1, -2)
    assert crys.f(u, 0) is None
