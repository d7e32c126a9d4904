"""Two-row and one-row tableau models of the Kirillov-Reshetikhin crystals
attached to the first two diagram nodes.

A two-row element is a tuple of columns (top, bottom) together with a
capacity ``cap``: the family with capacity s contains every valid two-row
tableau with 0..s columns.  A one-row element with capacity s is a
2n-tuple of letter multiplicities (x_1..x_n, xbar_n..xbar_1) summing to s
with x_n * xbar_n = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from . import letters
from .crystals import Crystal, word_signature
from .weights import add, lift, zero


# ---------------------------------------------------------------------------
# two-row tableaux


@dataclass(frozen=True, order=True)
class TwoRow:
    """A two-row tableau with at most ``cap`` columns.

    ``cols`` lists columns left to right as (top, bottom) pairs; the empty
    tableau has no columns.  Equality and hashing include ``cap`` because
    the affine structure depends on the ambient capacity.
    """

    cols: tuple[tuple[int, int], ...]
    cap: int

    @property
    def k(self) -> int:
        return len(self.cols)

    def __str__(self) -> str:
        return fmt_two_row(self)


def is_valid_column(a: int, b: int, n: int) -> bool:
    """Column test: top strictly below bottom, middle pairs in either
    order allowed, and the full-height (1, 1bar) column excluded."""
    if (a, b) == (1, -1):
        return False
    if abs(a) == n and abs(b) == n:
        return a != b
    return letters.lt(a, b, n)


def _forbidden_adjacent(c1, c2, n: int) -> bool:
    a1, b1 = c1
    a2, b2 = c2
    if a1 == a2 and b2 == -a2:
        return True
    if b1 == b2 and a1 == -b1:
        return True
    if (a1, b1, a2, b2) == (n - 1, n, n, -(n - 1)):
        return True
    if (a1, b1, a2, b2) == (n - 1, -n, -n, -(n - 1)):
        return True
    return False


def columns_compatible(c1, c2, n: int) -> bool:
    """May column c2 sit immediately right of column c1?"""
    return (letters.le(c1[0], c2[0], n) and letters.le(c1[1], c2[1], n)
            and not _forbidden_adjacent(c1, c2, n))


def is_valid_two_row(cols, n: int) -> bool:
    for a, b in cols:
        if not is_valid_column(a, b, n):
            return False
    for j in range(len(cols) - 1):
        if not columns_compatible(cols[j], cols[j + 1], n):
            return False
    return True


def reading(cols) -> tuple[int, ...]:
    """Reading word: columns right to left, top then bottom."""
    word = []
    for a, b in reversed(cols):
        word.append(a)
        word.append(b)
    return tuple(word)


def cols_from_reading(word) -> tuple[tuple[int, int], ...]:
    assert len(word) % 2 == 0
    pairs = [(word[i], word[i + 1]) for i in range(0, len(word), 2)]
    return tuple(reversed(pairs))


def u_cols(k: int) -> tuple[tuple[int, int], ...]:
    """Columns of the classical highest weight tableau [1..1 / 2..2]."""
    return ((1, 2),) * k


def u_two_row(k: int, cap: int) -> TwoRow:
    return TwoRow(u_cols(k), cap)


def null_cols(k: int) -> tuple[tuple[int, int], ...]:
    """The weight-zero k-column configuration fixed by the involution:
    top row 1^(k//2) 2^(k-k//2), bottom row (2bar)^(k-k//2) (1bar)^(k//2)."""
    h = k // 2
    top = [1] * h + [2] * (k - h)
    bot = [-2] * (k - h) + [-1] * h
    return tuple(zip(top, bot))


@lru_cache(maxsize=None)
def valid_columns(n: int) -> tuple[tuple[int, int], ...]:
    out = [(a, b) for a in letters.all_letters(n) for b in letters.all_letters(n)
           if is_valid_column(a, b, n)]
    return tuple(sorted(out, key=lambda c: (letters.order_key(c[0], n), c[0],
                                            letters.order_key(c[1], n), c[1])))


@lru_cache(maxsize=None)
def enumerate_level(k: int, n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All k-column two-row tableaux, as bare column tuples."""
    if k == 0:
        return ((),)
    if k == 1:
        return tuple((c,) for c in valid_columns(n))
    out = []
    for prefix in enumerate_level(k - 1, n):
        for c in valid_columns(n):
            if columns_compatible(prefix[-1], c, n):
                out.append(prefix + (c,))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_two_row(s: int, n: int) -> tuple[TwoRow, ...]:
    """Every element of the capacity-s two-row family (0..s columns)."""
    out = []
    for k in range(s + 1):
        out.extend(TwoRow(cols, s) for cols in enumerate_level(k, n))
    return tuple(out)


def classical_op(cols, i: int, n: int, lower: bool):
    """Apply e_i (lower=False) or f_i (lower=True), 1 <= i <= n, through
    the reading word; returns new columns or None."""
    word = reading(cols)
    stack = word_signature(word, i, n)
    if lower:
        plus = [k for k, sgn in stack if sgn == 1]
        if not plus:
            return None
        k = plus[0]
        new = letters.letter_f(i, word[k], n)
    else:
        minus = [k for k, sgn in stack if sgn == -1]
        if not minus:
            return None
        k = minus[-1]
        new = letters.letter_e(i, word[k], n)
    assert new is not None
    out = cols_from_reading(word[:k] + (new,) + word[k + 1:])
    assert is_valid_two_row(out, n), (cols, i, lower, out)
    return out


def two_row_wt(cols, n: int) -> tuple[int, ...]:
    w = zero(n)
    for b in reading(cols):
        w = add(w, letters.letter_wt(b, n))
    return w


class TwoRowCrystal(Crystal):
    """The affine two-row family of capacity s: classical operators act on
    the reading word; the 0-operators conjugate index 1 through the
    promotion-style involution implemented in zero_action."""

    def __init__(self, n: int, s: int):
        self.n = n
        self.s = s
        self.index_set = tuple(range(n + 1))

    def elements(self):
        return enumerate_two_row(self.s, self.n)

    def e(self, x: TwoRow, i: int):
        assert x.cap == self.s
        if i == 0:
            from . import zero_action
            return zero_action.e0(x, self.n)
        cols = classical_op(x.cols, i, self.n, lower=False)
        return None if cols is None else TwoRow(cols, x.cap)

    def f(self, x: TwoRow, i: int):
        assert x.cap == self.s
        if i == 0:
            from . import zero_action
            return zero_action.f0(x, self.n)
        cols = classical_op(x.cols, i, self.n, lower=True)
        return None if cols is None else TwoRow(cols, x.cap)

    def eps(self, x: TwoRow, i: int) -> int:
        if i == 0:
            from . import zero_action
            return zero_action.eps0(x, self.n)
        stack = word_signature(reading(x.cols), i, self.n)
        return sum(1 for _, sgn in stack if sgn == -1)

    def phi(self, x: TwoRow, i: int) -> int:
        if i == 0:
            from . import zero_action
            return zero_action.phi0(x, self.n)
        stack = word_signature(reading(x.cols), i, self.n)
        return sum(1 for _, sgn in stack if sgn == 1)

    def wt(self, x: TwoRow):
        return two_row_wt(x.cols, self.n)


# ---------------------------------------------------------------------------
# one-row tableaux


def one_row_validate(b, s: int, n: int) -> bool:
    return (len(b) == 2 * n and all(v >= 0 for v in b) and sum(b) == s
            and (b[n - 1] == 0 or b[n] == 0))


def one_row_from_word(word, n: int) -> tuple[int, ...]:
    """Multiplicity vector of a weakly increasing letter word."""
    counts = [0] * (2 * n)
    idx = {b: i for i, b in enumerate(letters.all_letters(n))}
    for b in word:
        counts[idx[b]] += 1
    return tuple(counts)


def word_from_one_row(b, n: int) -> tuple[int, ...]:
    word = []
    for letter, count in zip(letters.all_letters(n), b):
        word.extend([letter] * count)
    return tuple(word)


def u_one_row(s: int, n: int) -> tuple[int, ...]:
    return (s,) + (0,) * (2 * n - 1)


@lru_cache(maxsize=None)
def enumerate_one_row(s: int, n: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for word in combinations_with_replacement(letters.all_letters(n), s):
        b = one_row_from_word(word, n)
        if b[n - 1] == 0 or b[n] == 0:
            out.append(b)
    return tuple(out)


class OneRowCrystal(Crystal):
    """Single-row family of capacity s, with explicit affine operators on
    multiplicity coordinates (x_1..x_n, xbar_n..xbar_1)."""

    def __init__(self, n: int, s: int):
        self.n = n
        self.s = s
        self.index_set = tuple(range(n + 1))

    def elements(self):
        return enumerate_one_row(self.s, self.n)

    # coordinate helpers: x_i at slot i-1, xbar_i at slot 2n-i
    def _shift(self, b, updates):
        out = list(b)
        for slot, d in updates:
            out[slot] += d
            if out[slot] < 0:
                return None
        return tuple(out)

    def e(self, x, i: int):
        n = self.n
        if i == 0:
            if x[1] > x[2 * n - 2]:
                return self._shift(x, [(1, -1), (2 * n - 1, +1)])
            return self._shift(x, [(0, -1), (2 * n - 2, +1)])
        if i == n:
            if x[n] == 0:
                return self._shift(x, [(n - 1, +1), (n + 1, -1)])
            return self._shift(x, [(n - 2, +1), (n, -1)])
        if x[i] > x[2 * n - 1 - i]:
            return self._shift(x, [(i - 1, +1), (i, -1)])
        return self._shift(x, [(2 * n - 1 - i, +1), (2 * n - i, -1)])

    def f(self, x, i: int):
        n = self.n
        if i == 0:
            if x[1] >= x[2 * n - 2]:
                return self._shift(x, [(1, +1), (2 * n - 1, -1)])
            return self._shift(x, [(0, +1), (2 * n - 2, -1)])
        if i == n:
            if x[n - 1] > 0:
                return self._shift(x, [(n - 1, -1), (n + 1, +1)])
            return self._shift(x, [(n - 2, -1), (n, +1)])
        if x[i] >= x[2 * n - 1 - i]:
            return self._shift(x, [(i - 1, -1), (i, +1)])
        return self._shift(x, [(2 * n - 1 - i, -1), (2 * n - i, +1)])

    def eps(self, x, i: int) -> int:
        n = self.n
        if i == 0:
            return x[0] + max(x[1] - x[2 * n - 2], 0)
        if i == n:
            return x[n + 1] + x[n]
        return x[2 * n - i] + max(x[i] - x[2 * n - 1 - i], 0)

    def phi(self, x, i: int) -> int:
        n = self.n
        if i == 0:
            return x[2 * n - 1] + max(x[2 * n - 2] - x[1], 0)
        if i == n:
            return x[n - 2] + x[n - 1]
        return x[i - 1] + max(x[2 * n - 1 - i] - x[i], 0)

    def wt(self, x):
        n = self.n
        xs = [0] + [x[i - 1] for i in range(1, n + 1)]
        xb = [0] + [x[2 * n - i] for i in range(1, n + 1)]
        c = [0] * (n + 1)
        for i in range(1, n - 1):
            c[i] = xs[i] - xb[i] + xb[i + 1] - xs[i + 1]
        c[n - 1] = xs[n - 1] - xb[n - 1] + xb[n] - xs[n]
        c[n] = xs[n - 1] - xb[n - 1] + xs[n] - xb[n]
        w = lift(tuple(c[1:]), n)
        assert w[0] == xb[1] - xs[1] + xb[2] - xs[2]
        return w


# ---------------------------------------------------------------------------
# parsing and formatting (letters as digits, "-" prefixing a barred letter)


def fmt_letter(b: int) -> str:
    return str(b)


def fmt_word(word) -> str:
    return "".join(fmt_letter(b) for b in word)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a compact letter string like "24-43" into (2, 4, -4, 3)."""
    out = []
    sign = 1
    for ch in text:
        if ch in " ,":
            continue
        if ch == "-":
            assert sign == 1, "dangling bar"
            sign = -1
        else:
            assert ch.isdigit() and ch != "0", f"bad letter char {ch!r}"
            out.append(sign * int(ch))
            sign = 1
    assert sign == 1, "dangling bar"
    return tuple(out)


def fmt_two_row(t: TwoRow) -> str:
    if not t.cols:
        return "e"
    top = fmt_word([c[0] for c in t.cols])
    bot = fmt_word([c[1] for c in t.cols])
    return f"{top}/{bot}"


def parse_two_row(text: str, cap: int, n: int) -> TwoRow:
    text = text.strip()
    if text in ("e", ""):
        return TwoRow((), cap)
    parts = text.split("/")
    assert len(parts) == 2, "expected top/bottom"
    top, bot = parse_word(parts[0]), parse_word(parts[1])
    assert len(top) == len(bot), "row lengths differ"
    cols = tuple(zip(top, bot))
    assert is_valid_two_row(cols, n), f"not a valid tableau: {text}"
    assert len(cols) <= cap
    return TwoRow(cols, cap)


def fmt_one_row(b, n: int) -> str:
    return fmt_word(word_from_one_row(b, n)) or "e"


def parse_one_row(text: str, n: int) -> tuple[int, ...]:
    word = () if text.strip() in ("e", "") else parse_word(text)
    b = one_row_from_word(word, n)
    assert word == word_from_one_row(b, n), "letters must be weakly increasing"
    assert b[n - 1] == 0 or b[n] == 0, "letters n and bar n cannot mix"
    return b
