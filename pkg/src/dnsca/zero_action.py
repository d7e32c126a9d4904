"""Zero-arrow structure of the two-row family.

The 0-operators are conjugates of the 1-operators by an involution sigma
that realizes the symmetry swapping the two fork nodes at the affine end
of the diagram.  sigma is computed in three moves: lower the tableau to
the minimal number of columns reachable through the column-adjusting
embeddings (iota), apply the duality map psi there as many times as the
imbalance between leading 1 entries and trailing 1bar entries requires,
and raise the result to the complementary level.

All maps in this module work on bare column tuples; thin wrappers at the
bottom accept and return TwoRow values.
"""

from __future__ import annotations

from functools import lru_cache

from . import letters, tableaux
from .crystals import word_signature
from .tableaux import TwoRow


# ---------------------------------------------------------------------------
# level-changing embeddings


def iota_up(cols, n: int):
    """Embed a k-column tableau as a (k+1)-column tableau."""
    k = len(cols)
    if k == 0:
        return ((2, -2),)
    top = [c[0] for c in cols]
    bot = [c[1] for c in cols]
    ntop = [0] * (k + 1)
    nbot = [0] * (k + 1)
    # rightmost column, from the old rightmost top entry
    if top[k - 1] == 1:
        ntop[k], nbot[k] = 2, -2
    else:
        ntop[k], nbot[k] = top[k - 1], -1
    # interior columns i = 2..k pair the old (1,i-1) top with the old (2,i)
    # bottom, shifting outward when they collide
    for i in range(2, k + 1):
        t_prev, b_cur, b_prev = top[i - 2], bot[i - 1], bot[i - 2]
        if b_cur != -t_prev:
            ntop[i - 1], nbot[i - 1] = t_prev, b_cur
        elif b_prev == n and b_cur == -(n - 1):
            ntop[i - 1], nbot[i - 1] = -n, n
        else:
            assert 1 <= t_prev <= n - 1, (cols, i)
            ntop[i - 1], nbot[i - 1] = t_prev + 1, -(t_prev + 1)
    # leftmost column, from the old leftmost bottom entry
    if bot[0] == -1:
        ntop[0], nbot[0] = 2, -2
    else:
        ntop[0], nbot[0] = 1, bot[0]
    out = tuple(zip(ntop, nbot))
    assert tableaux.is_valid_two_row(out, n), (cols, out)
    return out


def iota_down(cols, n: int):
    """Inverse embedding: strip one column, or None when no preimage."""
    kk = len(cols)
    assert kk >= 1
    if kk == 1:
        return () if cols == ((2, -2),) else None
    k = kk - 1
    stop = [c[0] for c in cols]
    sbot = [c[1] for c in cols]
    top = [0] * k
    bot = [0] * k
    if (stop[0], sbot[0]) == (2, -2):
        bot[0] = -1
    elif stop[0] == 1:
        bot[0] = sbot[0]
    else:
        return None
    for i in range(2, k + 1):
        a, b = stop[i - 1], sbot[i - 1]
        if (a, b) == (-n, n):
            if bot[i - 2] != n:
                return None
            top[i - 2], bot[i - 1] = n - 1, -(n - 1)
        elif b == -a and 2 <= a <= n:
            if a == n and bot[i - 2] == n:
                return None  # forward map would have crossed the middle
            top[i - 2], bot[i - 1] = a - 1, -(a - 1)
        elif b == -a:
            return None
        else:
            top[i - 2], bot[i - 1] = a, b
    a, b = stop[k], sbot[k]
    if (a, b) == (2, -2):
        top[k - 1] = 1
    elif b == -1:
        top[k - 1] = a
    else:
        return None
    out = tuple(zip(top, bot))
    if not tableaux.is_valid_two_row(out, n):
        return None
    if iota_up(out, n) != cols:
        return None
    return out


def lower_to_min(cols, n: int):
    """Strip columns as long as a preimage exists; returns (level, columns)."""
    cur = cols
    while len(cur) > 0:
        down = iota_down(cur, n)
        if down is None:
            break
        cur = down
    return len(cur), cur


def min_level(cols, n: int) -> int:
    return lower_to_min(cols, n)[0]


def iota_to(cols, j: int, n: int):
    """Compose single-step embeddings to reach level j; None if blocked."""
    cur = cols
    while len(cur) > j:
        cur = iota_down(cur, n)
        if cur is None:
            return None
    while len(cur) < j:
        cur = iota_up(cur, n)
    return cur


# ---------------------------------------------------------------------------
# the duality map psi


def psi(cols, n: int):
    """Trade a leading top 1 for a trailing bottom 1bar, cascading the
    interior entries.  Defined on tableaux with at least one top 1."""
    l = len(cols)
    top = [c[0] for c in cols]
    bot = [c[1] for c in cols]
    a = sum(1 for v in top if v == 1)
    b = sum(1 for v in bot if v == -1)
    assert a >= 1, "psi needs a top 1"
    ntop = list(top)
    nbot = list(bot)
    hi = l - b

    def stops(i):
        # may the cascade halt before column i+1?
        t_next, b_next = top[i], bot[i]
        y = nbot[i - 1]
        if not letters.le(y, t_next, n):
            return False
        if (t_next, y) in ((n, -n), (-n, n)):
            return False
        if t_next > 0 and b_next == -t_next:
            if letters.le(t_next, y, n) and letters.le(y, -t_next, n):
                return False
        return True

    i = a
    while i < hi and not stops(i):
        t_next, b_next = top[i], bot[i]
        if b_next != -t_next:
            ntop[i - 1] = t_next
            nbot[i] = b_next
        elif nbot[i - 1] == n and t_next == -n:
            ntop[i - 1] = n - 1
            nbot[i] = -(n - 1)
        else:
            assert 2 <= t_next <= n, (cols, i)
            ntop[i - 1] = t_next - 1
            nbot[i] = -(t_next - 1)
        i += 1
    m = i

    # the letter pushed out of column m
    t_m, b_m = top[m - 1], bot[m - 1]
    if b_m != -t_m:
        x = b_m
    elif t_m == -n and m >= 2 and bot[m - 2] == n:
        x = -(n - 1)
    else:
        w = abs(b_m)
        assert 2 <= w <= n, (cols, m)
        x = -(w - 1)

    if m == l:
        ntop[m - 1] = x
    else:
        t_next, b_next = top[m], bot[m]
        if x != -b_next:
            ntop[m - 1] = x
            nbot[m - 1] = b_next
        elif t_next == -n and b_next == -(n - 1) and x == n - 1:
            ntop[m - 1] = -n
            nbot[m - 1] = n
        else:
            assert 1 <= x <= n - 1, (cols, m, x)
            ntop[m - 1] = x + 1
            nbot[m - 1] = -(x + 1)

    # drag the remaining bottoms one column left
    for i in range(m + 1, l - b):
        t_i = top[i - 1]
        t_next, b_next = top[i], bot[i]
        if t_i != -b_next:
            ntop[i - 1] = t_i
            nbot[i - 1] = b_next
        elif t_next == -n and b_next == -(n - 1) and t_i == n - 1:
            ntop[i - 1] = -n
            nbot[i - 1] = n
        else:
            assert 1 <= t_i <= n - 1, (cols, i)
            ntop[i - 1] = t_i + 1
            nbot[i - 1] = -(t_i + 1)

    nbot[l - b - 1] = -1
    out = tuple(zip(ntop, nbot))
    assert tableaux.is_valid_two_row(out, n), (cols, out)
    return out


@lru_cache(maxsize=None)
def _psi_inv_table(l: int, n: int):
    inv: dict = {}
    for cols in tableaux.enumerate_level(l, n):
        if not any(t == 1 for t, _ in cols):
            continue
        try:
            img = psi(cols, n)
        except AssertionError:
            continue
        inv.setdefault(img, []).append(cols)
    return inv


def psi_inverse(cols, n: int):
    pre = _psi_inv_table(len(cols), n).get(cols)
    assert pre is not None and len(pre) == 1, (cols, pre)
    return pre[0]


# ---------------------------------------------------------------------------
# the involution and the 0-operators


def star_bc(cols, n: int):
    """Branching-component dual: lower to the minimal level, balance the
    1 / 1bar counts with psi, and raise back to the original level."""
    k = len(cols)
    _, low = lower_to_min(cols, n)
    a = sum(1 for t, _ in low if t == 1)
    b = sum(1 for _, u in low if u == -1)
    cur = low
    for _ in range(a - b):
        cur = psi(cur, n)
    for _ in range(b - a):
        cur = psi_inverse(cur, n)
    out = iota_to(cur, k, n)
    assert out is not None, (cols, cur)
    return out


@lru_cache(maxsize=None)
def sigma_cols(cols, cap: int, n: int):
    k = len(cols)
    star = star_bc(cols, n)
    lp = min_level(star, n)
    out = iota_to(star, cap + lp - k, n)
    assert out is not None, (cols, star)
    return out


def sigma(t: TwoRow, n: int) -> TwoRow:
    return TwoRow(sigma_cols(t.cols, t.cap, n), t.cap)


def e0(t: TwoRow, n: int):
    st = sigma_cols(t.cols, t.cap, n)
    moved = tableaux.classical_op(st, 1, n, lower=False)
    if moved is None:
        return None
    return TwoRow(sigma_cols(moved, t.cap, n), t.cap)


def f0(t: TwoRow, n: int):
    st = sigma_cols(t.cols, t.cap, n)
    moved = tableaux.classical_op(st, 1, n, lower=True)
    if moved is None:
        return None
    return TwoRow(sigma_cols(moved, t.cap, n), t.cap)


def eps0(t: TwoRow, n: int) -> int:
    st = sigma_cols(t.cols, t.cap, n)
    stack = word_signature(tableaux.reading(st), 1, n)
    return sum(1 for _, sgn in stack if sgn == -1)


def phi0(t: TwoRow, n: int) -> int:
    st = sigma_cols(t.cols, t.cap, n)
    stack = word_signature(tableaux.reading(st), 1, n)
    return sum(1 for _, sgn in stack if sgn == 1)
