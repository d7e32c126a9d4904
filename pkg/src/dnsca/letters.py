"""Signed alphabet 1 < 2 < ... < n-1 < {n, nbar} < (n-1)bar < ... < 1bar.

A barred letter is stored as a negative integer: -k prints as "-k" and
stands for k with a bar.  The two middle letters n and -n are incomparable;
comparison helpers report that instead of raising.
"""

from __future__ import annotations

from functools import lru_cache

from .weights import lift

LT, EQ, GT, INCOMPARABLE = -1, 0, 1, 2


def bar(b: int) -> int:
    return -b


def is_barred(b: int) -> bool:
    return b < 0


@lru_cache(maxsize=None)
def all_letters(n: int) -> tuple[int, ...]:
    """All 2n letters, weakly increasing (n listed just before -n)."""
    return tuple(range(1, n + 1)) + tuple(range(-n, 0))


def order_key(b: int, n: int) -> int:
    """Rank in the order; n and -n share a rank but stay distinct letters."""
    k = abs(b)
    assert 1 <= k <= n
    if b > 0:
        return k if k < n else n
    return n if k == n else 2 * n - k


def compare(a: int, b: int, n: int) -> int:
    if a == b:
        return EQ
    ka, kb = order_key(a, n), order_key(b, n)
    if ka == kb:
        return INCOMPARABLE
    return LT if ka < kb else GT


def lt(a: int, b: int, n: int) -> bool:
    return compare(a, b, n) == LT


def le(a: int, b: int, n: int) -> bool:
    c = compare(a, b, n)
    return c == LT or c == EQ


def comparable(a: int, b: int, n: int) -> bool:
    return compare(a, b, n) != INCOMPARABLE


def letter_e(i: int, b: int, n: int) -> int | None:
    """Raising operator e_i on a single letter, None when undefined."""
    assert 1 <= i <= n
    if i == n:
        if b == -(n - 1):
            return n
        if b == -n:
            return n - 1
        return None
    if b == i + 1:
        return i
    if b == -i:
        return -(i + 1)
    return None


def letter_f(i: int, b: int, n: int) -> int | None:
    """Lowering operator f_i on a single letter, None when undefined."""
    assert 1 <= i <= n
    if i == n:
        if b == n:
            return -(n - 1)
        if b == n - 1:
            return -n
        return None
    if b == i:
        return i + 1
    if b == -(i + 1):
        return -i
    return None


def letter_eps(i: int, b: int, n: int) -> int:
    return 0 if letter_e(i, b, n) is None else 1


def letter_phi(i: int, b: int, n: int) -> int:
    return 0 if letter_f(i, b, n) is None else 1


@lru_cache(maxsize=None)
def letter_wt(b: int, n: int) -> tuple[int, ...]:
    """Weight of a letter, as a level-zero (n+1)-tuple."""
    c = [0] * (n + 1)  # classical coefficients live in slots 1..n
    k = abs(b)
    s = 1 if b > 0 else -1
    if k == 1:
        c[1] += s
    elif k <= n - 2:
        c[k] += s
        c[k - 1] -= s
    elif k == n - 1:
        c[n - 1] += s
        c[n] += s
        c[n - 2] -= s
    else:
        c[n] += s
        c[n - 1] -= s
    return lift(tuple(c[1:]), n)
