"""Rectangular semistandard tableaux, their crystal structure, and the
combinatorial R matrix with its energy function.

A tableau is a tuple of rows, each row a tuple of entries from 1..m where
m is the alphabet size.  These model the label crystals used when two
solitons scatter.  The R matrix is built as the unique classical crystal
isomorphism between the two tensor orders; the tensor product of two
rectangles is multiplicity free, so matching highest weight elements by
weight determines everything.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .crystals import TensorCrystal


def is_rect_ssyt(rows, m: int) -> bool:
    if not rows:
        return True
    width = len(rows[0])
    for row in rows:
        if len(row) != width:
            return False
        if any(not 1 <= v <= m for v in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for up, down in zip(rows, rows[1:]):
        if any(a >= b for a, b in zip(up, down)):
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_rect(r: int, s: int, m: int):
    """All r x s semistandard tableaux over 1..m, sorted."""
    def extend(rows):
        if len(rows) == r:
            yield rows
            return
        lo = rows[-1] if rows else None
        for row in combinations_with_replacement(range(1, m + 1), s):
            if lo is not None and any(a >= b for a, b in zip(lo, row)):
                continue
            yield from extend(rows + (row,))
    return tuple(sorted(extend(())))


def rect_ones(r: int, s: int):
    """The highest weight rectangle: row i filled with the letter i."""
    return tuple(tuple(i + 1 for _ in range(s)) for i in range(r))


def row_word(rows) -> tuple[int, ...]:
    """Each row right to left, top row first."""
    out = []
    for row in rows:
        out.extend(reversed(row))
    return tuple(out)


def shape(rows) -> tuple[int, ...]:
    return tuple(len(row) for row in rows)


# ---------------------------------------------------------------------------
# classical crystal operators


def _signature(word, i):
    stack = []
    for pos, v in enumerate(word):
        if v == i + 1:
            if stack and stack[-1][1] == 1:
                stack.pop()
            else:
                stack.append((pos, -1))
        elif v == i:
            stack.append((pos, 1))
    return stack


def _set_word(rows, pos, v):
    out = []
    k = 0
    for row in rows:
        chunk = list(reversed(row))
        for j in range(len(chunk)):
            if k == pos:
                chunk[j] = v
            k += 1
        out.append(tuple(reversed(chunk)))
    return tuple(out)


class RectCrystal:
    """Classical crystal on r x s rectangular tableaux over 1..m."""

    def __init__(self, r: int, s: int, m: int):
        self.r, self.s, self.m = r, s, m
        self.n = m
        self.index_set = tuple(range(1, m))

    def elements(self):
        return enumerate_rect(self.r, self.s, self.m)

    def e(self, t, i: int):
        stack = _signature(row_word(t), i)
        minus = [pos for pos, sign in stack if sign == -1]
        if not minus:
            return None
        out = _set_word(t, minus[-1], i)
        assert is_rect_ssyt(out, self.m), (t, i, out)
        return out

    def f(self, t, i: int):
        stack = _signature(row_word(t), i)
        plus = [pos for pos, sign in stack if sign == 1]
        if not plus:
            return None
        out = _set_word(t, plus[0], i + 1)
        assert is_rect_ssyt(out, self.m), (t, i, out)
        return out

    def eps(self, t, i: int) -> int:
        return sum(1 for _, sign in _signature(row_word(t), i) if sign == -1)

    def phi(self, t, i: int) -> int:
        return sum(1 for _, sign in _signature(row_word(t), i) if sign == 1)

    def wt(self, t) -> tuple[int, ...]:
        counts = [0] * self.m
        for row in t:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)


# ---------------------------------------------------------------------------
# the R matrix and energy


@lru_cache(maxsize=None)
def _r_hat_table(r: int, s: int, rp: int, sp: int, m: int):
    """R as the unique classical isomorphism between the tensor orders."""
    ca, cb = RectCrystal(r, s, m), RectCrystal(rp, sp, m)
    if (r, s) == (rp, sp):
        return {(a, b): (a, b) for a in ca.elements() for b in cb.elements()}
    fwd, bwd = TensorCrystal(ca, cb), TensorCrystal(cb, ca)
    hw_right = {}
    for bp in cb.elements():
        for ap in ca.elements():
            y = (bp, ap)
            if all(bwd.e(y, i) is None for i in bwd.index_set):
                w = bwd.wt(y)
                assert w not in hw_right, w
                hw_right[w] = y
    table = {}
    for a in ca.elements():
        for b in cb.elements():
            x = (a, b)
            if any(fwd.e(x, i) is not None for i in fwd.index_set):
                continue
            stack = [(x, hw_right[fwd.wt(x)])]
            while stack:
                u, v = stack.pop()
                if u in table:
                    assert table[u] == v, (u, table[u], v)
                    continue
                table[u] = v
                for i in fwd.index_set:
                    fu, fv = fwd.f(u, i), bwd.f(v, i)
                    assert (fu is None) == (fv is None), (u, v, i)
                    if fu is not None:
                        stack.append((fu, fv))
    assert len(table) == len(ca.elements()) * len(cb.elements())
    return table


def r_hat(t, tp, m: int):
    """R(t (x) tp) = (tp~, t~), swapping the rectangle shapes."""
    r, s = len(t), len(t[0])
    rp, sp = len(tp), len(tp[0])
    return _r_hat_table(r, s, rp, sp, m)[(t, tp)]


def h_hat(t, tp, m: int) -> int:
    """Energy: raise the pair to its classical highest weight element and
    read off the component shape; boxes beyond column max(s, s') count,
    shifted so the component of the pair of highest weight rectangles
    takes the value 0."""
    r, s = len(t), len(t[0])
    rp, sp = len(tp), len(tp[0])
    ca, cb = RectCrystal(r, s, m), RectCrystal(rp, sp, m)
    fwd = TensorCrystal(ca, cb)
    x = (t, tp)
    raised = True
    while raised:
        raised = False
        for i in fwd.index_set:
            y = fwd.e(x, i)
            if y is not None:
                x = y
                raised = True
    lam = fwd.wt(x)
    assert all(a >= b for a, b in zip(lam, lam[1:])), (t, tp, lam)
    d = sum(max(0, part - max(s, sp)) for part in lam)
    return d - min(r, rp) * min(s, sp)
