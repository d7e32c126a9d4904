"""Rectangular tableaux of type A and their exchange matrix."""

from __future__ import annotations

from dnsca.atype import (RectCrystal, enumerate_rect, h_hat, is_rect_ssyt,
                         r_hat, rect_ones, row_word, shape)


def test_rectangle_counts():
    assert len(enumerate_rect(1, 1, 4)) == 4
    assert len(enumerate_rect(2, 1, 4)) == 6
    assert len(enumerate_rect(2, 2, 4)) == 20
    assert len(enumerate_rect(2, 3, 4)) == 50


def test_semistandard_predicate():
    assert is_rect_ssyt(((1, 1), (2, 2)), 4)
    assert is_rect_ssyt(((1, 2), (2, 3)), 4)
    assert not is_rect_ssyt(((1, 1), (1, 2)), 4)
    assert not is_rect_ssyt(((2, 1), (3, 3)), 4)


def test_row_word_reads_rows_right_to_left():
    t = ((1, 2), (2, 3))
    assert row_word(t) == (2, 1, 3, 2)
    assert shape(t) == (2, 2)


def test_highest_weight_rectangle():
    for r, s in ((1, 2), (2, 2)):
        u = rect_ones(r, s)
        crys = RectCrystal(r, s, 4)
        assert all(crys.e(u, i) is None for i in range(1, 4))


def test_string_data_on_single_row():
    crys = RectCrystal(1, 2, 2)
    data = {t: (crys.eps(t, 1), crys.phi(t, 1)) for t in enumerate_rect(1, 2, 2)}
    assert data[((1, 1),)] == (0, 2)
    assert data[((1, 2),)] == (1, 1)
    assert data[((2, 2),)] == (2, 0)


def test_exchange_is_identity_on_equal_shapes():
    for r, s, m in ((1, 2, 2), (1, 1, 4), (2, 1, 4)):
        for t in enumerate_rect(r, s, m):
            for tp in enumerate_rect(r, s, m):
                assert r_hat(t, tp, m) == (t, tp)


def test_exchange_inverts():
    m = 4
    for t in enumerate_rect(1, 1, m):
        for tp in enumerate_rect(1, 2, m):
            a, b = r_hat(t, tp, m)
            assert shape(a) == (2,) and shape(b) == (1,)
            assert r_hat(a, b, m) == (t, tp)


def test_exchange_preserves_content():
    m = 4

    def content(t):
        c = [0] * m
        for row in t:
            for v in row:
                c[v - 1] += 1
        return tuple(c)

    for t in enumerate_rect(2, 1, m):
        for tp in enumerate_rect(1, 2, m):
            a, b = r_hat(t, tp, m)
            total = tuple(x + y for x, y in zip(content(a), content(b)))
            assert total == tuple(x + y for x, y in zip(content(t), content(tp)))


def test_energy_normalization():
    m = 4
    assert h_hat(rect_ones(2, 2), rect_ones(2, 2), m) == 0
    assert h_hat(rect_ones(1, 2), rect_ones(1, 1), m) == 0
    assert h_hat(((1, 1, 1, 2, 2),), ((2, 2),), 2) == -2


def test_energy_constant_on_classical_arrows():
    m = 4
    crys = RectCrystal(1, 1, m)
    big = RectCrystal(1, 2, m)
    for t in enumerate_rect(1, 1, m):
        for tp in enumerate_rect(1, 2, m):
            h = h_hat(t, tp, m)
            for i in range(1, m):
                a, b = t, tp
                if crys.phi(a, i) > big.eps(b, i):
                    a2 = crys.f(a, i)
                    if a2 is not None:
                        assert h_hat(a2, b, m) == h
                else:
                    b2 = big.f(b, i)
                    if b2 is not None:
                        assert h_hat(a, b2, m) == h
