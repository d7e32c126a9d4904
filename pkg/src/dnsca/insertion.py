"""Column insertion on letter words, the induced bijection with pairs
(tableau, recording sequence), and its inverse.

A tableau here is a tuple of columns, each column a tuple of letters read
top to bottom, with weakly decreasing column heights.  The recording
sequence tracks, after each inserted letter, the shape (tuple of column
heights) together with a flag in {-1, 0, +1} describing the orientation
of any full-height column.
"""

from __future__ import annotations

from functools import lru_cache

from . import letters


# ---------------------------------------------------------------------------
# the local three-letter rearrangement and its inverse


def _xi_cases(x: int, y: int, z: int, n: int):
    out = []
    if letters.le(z, x, n) and letters.lt(x, y, n) and y != -z:
        out.append((x, z, y))
    if letters.lt(x, z, n) and letters.le(z, y, n) and y != -x:
        out.append((y, x, z))
    if y == -z and 0 < z < n - 1 and letters.lt(z, x, n) and letters.lt(x, -z, n):
        out.append((x, z + 1, -(z + 1)))
    if y == -x and 1 < x < n and letters.le(x, z, n) and letters.le(z, -x, n):
        out.append((-(x - 1), x - 1, z))
    if letters.le(-(n - 1), y, n) and (x, z) in ((-n, n), (n, -n)):
        out.append((y, x, z))
    if letters.le(z, n - 1, n) and (x, y) in ((-n, n), (n, -n)):
        out.append((x, z, y))
    if (x, y, z) in ((n, -n, -n), (-n, n, n)):
        out.append((-(n - 1), n - 1, z))
    if (x, y, z) == (-n, -(n - 1), n - 1):
        out.append((-n, -n, n))
    if (x, y, z) == (n, -(n - 1), n - 1):
        out.append((n, n, -n))
    return set(out)


def xi(x: int, y: int, z: int, n: int) -> tuple[int, int, int]:
    out = _xi_cases(x, y, z, n)
    assert len(out) == 1, (x, y, z, out)
    return next(iter(out))


@lru_cache(maxsize=None)
def _xi_inverse_table(n: int):
    table: dict = {}
    for x in letters.all_letters(n):
        for y in letters.all_letters(n):
            for z in letters.all_letters(n):
                out = _xi_cases(x, y, z, n)
                if len(out) == 1:
                    table.setdefault(next(iter(out)), []).append((x, y, z))
    return table


def xi_inverse(x: int, y: int, z: int, n: int):
    pre = _xi_inverse_table(n).get((x, y, z))
    if pre is None or len(pre) != 1:
        return None
    return pre[0]


# ---------------------------------------------------------------------------
# inserting one letter


def _appendable(c: int, b: int, n: int) -> bool:
    return letters.lt(c, b, n) or (abs(c) == n and abs(b) == n and c != b)


def _violation(seq, n: int):
    """Least unbarred y with y and ybar both in seq and too many entries
    pinched between them; None if the column is admissible."""
    for y in range(1, n + 1):
        if y in seq and -y in seq:
            count = sum(1 for v in seq
                        if letters.le(v, y, n) or letters.le(-y, v, n))
            if count > y:
                return y
    return None


def _remove_pair(seq, z: int):
    out = list(seq)
    for v in (z, -z):
        for i in range(len(out) - 1, -1, -1):
            if out[i] == v:
                del out[i]
                break
    return tuple(out)


def insert_letter(b: int, cols, n: int, _grow_only: bool = False):
    """Insert letter b into a tableau, returning the new tableau.

    With _grow_only set, the box count must increase; the pair-removal
    case is then an error (used for the cascades that a removal spawns,
    which can only grow).
    """
    if not cols:
        return ((b,),)
    col, rest = cols[0], cols[1:]
    if _appendable(col[-1], b, n):
        word = col + (b,)
        z = _violation(word, n)
        if z is not None:
            assert not _grow_only, (b, cols)
            out = rest
            for v in _remove_pair(word, z):
                out = insert_letter(v, out, n, _grow_only=True)
            return out
        return (word,) + rest
    if len(col) == 1:
        assert letters.le(b, col[0], n), (b, col)
        return ((b,),) + insert_letter(col[0], rest, n, _grow_only=_grow_only)
    word = col + (b,)
    for i in range(len(col) - 2, -1, -1):
        word = word[:i] + xi(word[i], word[i + 1], word[i + 2], n) + word[i + 3:]
    return (word[1:],) + insert_letter(word[0], rest, n, _grow_only=_grow_only)


# ---------------------------------------------------------------------------
# shapes, flags, recording sequences


def shape_of(cols) -> tuple[int, ...]:
    return tuple(len(c) for c in cols)


def flag_of(cols, n: int) -> int:
    """0 when no full-height column; otherwise +1/-1 by the parity rule on
    the first middle letter of each full column (all must agree)."""
    flags = []
    for col in cols:
        if len(col) != n:
            continue
        middle = [(i + 1, v) for i, v in enumerate(col) if abs(v) == n]
        assert middle, cols
        row, v = middle[0]
        plus = (v == n) == ((n - row) % 2 == 0)
        flags.append(1 if plus else -1)
    if not flags:
        return 0
    assert all(f == flags[0] for f in flags), cols
    return flags[0]


def word_to_pq(word, n: int):
    """Insert a word letter by letter; returns (tableau, recording)."""
    cols = ()
    rec = [((), 0)]
    for b in word:
        prev_boxes = sum(shape_of(cols))
        cols = insert_letter(b, cols, n)
        assert abs(sum(shape_of(cols)) - prev_boxes) == 1, (word, cols)
        rec.append((shape_of(cols), flag_of(cols, n)))
    return cols, tuple(rec)


# ---------------------------------------------------------------------------
# the inverse bijection


def _undo_passthrough(prefix, carried: int, n: int):
    """Undo the bumping chain across a tuple of columns, right to left.
    Returns (columns before, letter that entered column 1), or None."""
    cols = prefix
    for i in range(len(prefix) - 1, -1, -1):
        col = cols[i]
        if len(col) == 1:
            inner = col[0]
            cols = cols[:i] + ((carried,),) + cols[i + 1:]
            carried = inner
        else:
            word = (carried,) + col
            for pos in range(len(col) - 1):
                inv = xi_inverse(word[pos], word[pos + 1], word[pos + 2], n)
                if inv is None:
                    return None
                word = word[:pos] + inv + word[pos + 3:]
            cols = cols[:i] + (word[:-1],) + cols[i + 1:]
            carried = word[-1]
    return cols, carried


def _undo_grow(after, before_shape, n: int):
    """Undo one box-adding insertion given the previous shape."""
    sa = shape_of(after)
    sb = tuple(before_shape)
    if len(after) == len(sb) + 1:
        if sa[:-1] != sb or sa[-1] != 1:
            return None
        j = len(after) - 1
        carried = after[j][0]
        cols = after[:j]
    elif len(after) == len(sb):
        diffs = [i for i in range(len(sb)) if sa[i] != sb[i]]
        if len(diffs) != 1 or sa[diffs[0]] != sb[diffs[0]] + 1:
            return None
        j = diffs[0]
        carried = after[j][-1]
        cols = after[:j] + (after[j][:-1],) + after[j + 1:]
    else:
        return None
    res = _undo_passthrough(cols[:j], carried, n)
    if res is None:
        return None
    head, b = res
    return head + cols[j:], b


def _column_arrangements(mset, n: int):
    """All ways to order a letter multiset as a strictly increasing column,
    with the two middle letters allowed to alternate."""
    low = sorted((v for v in mset if letters.order_key(v, n) < n),
                 key=lambda v: letters.order_key(v, n))
    high = sorted((v for v in mset if letters.order_key(v, n) > n),
                  key=lambda v: letters.order_key(v, n))
    for part in (low, high):
        for u, v in zip(part, part[1:]):
            if u == v:
                return []
    p = sum(1 for v in mset if v == n)
    q = sum(1 for v in mset if v == -n)
    if p == q == 0:
        mids = [[]]
    elif p == q:
        mids = [[n, -n] * p, [-n, n] * p]
    elif abs(p - q) == 1:
        start = n if p > q else -n
        mids = [[start, -start] * min(p, q) + [start]]
    else:
        return []
    return [tuple(low + mid + high) for mid in mids]


def _shape_paths(start, target):
    """All one-box-at-a-time growth paths between two shapes."""
    t = tuple(target)
    s = tuple(start) + (0,) * (len(t) - len(start))
    if len(s) > len(t) or any(a > b for a, b in zip(s, t)):
        return
    def strip(sh):
        while sh and sh[-1] == 0:
            sh = sh[:-1]
        return sh
    if s == t:
        yield [strip(s)]
        return
    for j in range(len(t)):
        if s[j] < t[j] and (j == 0 or s[j] + 1 <= s[j - 1]):
            nxt = s[:j] + (s[j] + 1,) + s[j + 1:]
            for path in _shape_paths(nxt, t):
                yield [strip(s)] + path


def _undo_shrink(after, before_shape, n: int):
    """Candidates (letter, tableau before) for undoing one pair-removing
    insertion: searches over the dissolved column position, cascade orders
    and the removed pair, keeping only candidates that verify forward."""
    sa = shape_of(after)
    sb = tuple(before_shape)
    candidates = set()
    for j0 in range(min(len(sa), len(sb) - 1) + 1):
        if sa[:j0] != sb[:j0]:
            break
        candidates |= _shrink_candidates_at(after, sb, j0, n)
    return candidates


def _shrink_candidates_at(after, sb, j0: int, n: int):
    h = sb[j0]
    suffix_after = after[j0:]
    candidates = set()
    for path in _shape_paths(sb[j0 + 1:], shape_of(suffix_after)):
        cur = suffix_after
        cascade_rev = []
        ok = True
        for t in range(len(path) - 1, 0, -1):
            res = _undo_grow(cur, path[t - 1], n)
            if res is None:
                ok = False
                break
            cur, c = res
            cascade_rev.append(c)
        if not ok:
            continue
        rest_before = cur
        reduced = tuple(reversed(cascade_rev))
        for z in range(1, n + 1):
            mset = list(reduced) + [z, -z]
            for bi in range(len(mset)):
                arrived = mset[bi]
                for col in _column_arrangements(mset[:bi] + mset[bi + 1:], n):
                    if len(col) != h:
                        continue
                    res = _undo_passthrough(after[:j0], arrived, n)
                    if res is None:
                        continue
                    head, b = res
                    before = head + (col,) + rest_before
                    if shape_of(before) != sb:
                        continue
                    try:
                        redone = insert_letter(b, before, n)
                    except AssertionError:
                        continue
                    if redone == after:
                        candidates.add((b, before))
    return candidates


def pq_to_word(p_cols, rec, n: int) -> tuple[int, ...]:
    """Inverse of word_to_pq: rebuild the word from tableau and recording.

    Undoing a pair-removing step can be locally ambiguous, so this walks
    the recording backwards with backtracking and demands exactly one word
    that reproduces the full (tableau, recording) pair.
    """
    rec = tuple((tuple(s), f) for s, f in rec)
    shapes = [s for s, _ in rec]
    flags = [f for _, f in rec]
    assert shape_of(p_cols) == shapes[-1]
    assert flag_of(p_cols, n) == flags[-1]
    solutions = set()

    def descend(cur, k, acc):
        if k == 0:
            if cur == ():
                word = tuple(reversed(acc))
                if word_to_pq(word, n) == (p_cols, rec):
                    solutions.add(word)
            return
        sb = shapes[k - 1]
        delta = sum(shape_of(cur)) - sum(sb)
        if delta == 1:
            res = _undo_grow(cur, sb, n)
            cands = [] if res is None else [(res[1], res[0])]
        else:
            assert delta == -1, (cur, sb)
            cands = sorted(_undo_shrink(cur, sb, n))
        for b, prev in cands:
            try:
                ok = (shape_of(prev) == sb and flag_of(prev, n) == flags[k - 1]
                      and insert_letter(b, prev, n) == cur)
            except AssertionError:
                continue
            if ok:
                descend(prev, k - 1, acc + [b])

    descend(p_cols, len(rec) - 1, [])
    assert len(solutions) == 1, (p_cols, rec, solutions)
    return next(iter(solutions))
