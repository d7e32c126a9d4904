"""Generic crystal plumbing: tensor products by the signature rule, graph
closure, axiom checks, and a brute-force isomorphism finder that serves as
an independent oracle for hand-coded maps."""

from __future__ import annotations

from collections import deque

from . import letters
from .weights import add, alpha, sub


def word_signature(word, i: int, n: int) -> list[tuple[int, int]]:
    """Surviving signature of a letter word for index i.

    Each letter contributes its minus then plus signs; adjacent "+-" pairs
    cancel.  Returns the surviving (position, sign) tokens, minuses first.
    """
    stack: list[tuple[int, int]] = []
    for k, b in enumerate(word):
        if letters.letter_eps(i, b, n):
            if stack and stack[-1][1] == 1:
                stack.pop()
            else:
                stack.append((k, -1))
        if letters.letter_phi(i, b, n):
            stack.append((k, 1))
    return stack


class Crystal:
    """A crystal over hashable elements.

    Subclasses set ``n`` and ``index_set`` and implement ``e``, ``f`` and
    ``wt``.  String lengths fall back to repeated application; subclasses
    override them when a direct formula exists.
    """

    n: int
    index_set: tuple[int, ...]

    def e(self, x, i):
        raise NotImplementedError

    def f(self, x, i):
        raise NotImplementedError

    def wt(self, x):
        raise NotImplementedError

    def eps(self, x, i) -> int:
        k = 0
        y = self.e(x, i)
        while y is not None:
            k += 1
            assert k < 100000
            y = self.e(y, i)
        return k

    def phi(self, x, i) -> int:
        k = 0
        y = self.f(x, i)
        while y is not None:
            k += 1
            assert k < 100000
            y = self.f(y, i)
        return k


class LetterCrystal(Crystal):
    """The 2n-letter crystal with classical operators only."""

    def __init__(self, n: int):
        self.n = n
        self.index_set = tuple(range(1, n + 1))

    def elements(self):
        return letters.all_letters(self.n)

    def e(self, x, i):
        return letters.letter_e(i, x, self.n)

    def f(self, x, i):
        return letters.letter_f(i, x, self.n)

    def eps(self, x, i):
        return letters.letter_eps(i, x, self.n)

    def phi(self, x, i):
        return letters.letter_phi(i, x, self.n)

    def wt(self, x):
        return letters.letter_wt(x, self.n)


class TensorCrystal(Crystal):
    """Tensor product b_1 (x) ... (x) b_L over a shared index set.

    Signature rule: reading factors left to right, factor k contributes
    eps_i(b_k) minus signs then phi_i(b_k) plus signs; adjacent "+-" pairs
    cancel; e_i acts on the factor owning the rightmost surviving minus,
    f_i on the factor owning the leftmost surviving plus.
    """

    def __init__(self, *factors: Crystal):
        assert factors
        self.n = factors[0].n
        self.index_set = factors[0].index_set
        for c in factors:
            assert c.n == self.n and c.index_set == self.index_set
        self.factors = factors

    def _surviving(self, x, i):
        stack: list[tuple[int, int]] = []
        for k, (crys, b) in enumerate(zip(self.factors, x)):
            for _ in range(crys.eps(b, i)):
                if stack and stack[-1][1] == 1:
                    stack.pop()
                else:
                    stack.append((k, -1))
            for _ in range(crys.phi(b, i)):
                stack.append((k, 1))
        return stack

    def e(self, x, i):
        minus = [k for k, s in self._surviving(x, i) if s == -1]
        if not minus:
            return None
        k = minus[-1]
        y = self.factors[k].e(x[k], i)
        assert y is not None
        return x[:k] + (y,) + x[k + 1:]

    def f(self, x, i):
        plus = [k for k, s in self._surviving(x, i) if s == 1]
        if not plus:
            return None
        k = plus[0]
        y = self.factors[k].f(x[k], i)
        assert y is not None
        return x[:k] + (y,) + x[k + 1:]

    def eps(self, x, i):
        return sum(1 for _, s in self._surviving(x, i) if s == -1)

    def phi(self, x, i):
        return sum(1 for _, s in self._surviving(x, i) if s == 1)

    def wt(self, x):
        w = self.factors[0].wt(x[0])
        for crys, b in zip(self.factors[1:], x[1:]):
            w = add(w, crys.wt(b))
        return w


def enumerate_component(crys: Crystal, seed, indices=None, budget: int = 2_000_000):
    """Every element reachable from ``seed`` by e_i/f_i for i in indices."""
    if indices is None:
        indices = crys.index_set
    seen = {seed}
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for i in indices:
            for op in (crys.e, crys.f):
                y = op(x, i)
                if y is not None and y not in seen:
                    assert len(seen) < budget
                    seen.add(y)
                    queue.append(y)
    return seen


def check_axioms(crys: Crystal, elements, indices=None) -> list[str]:
    """Check e/f inverse relations, weight shifts, string lengths, and
    phi - eps = <h_i, wt> over a closed element set.

    Returns human-readable failure descriptions; an empty list means clean.
    """
    if indices is None:
        indices = crys.index_set
    n = crys.n
    failures = []
    elements = list(elements)
    elem_set = set(elements)
    for x in elements:
        wx = crys.wt(x)
        for i in indices:
            ai = alpha(i, n)
            y = crys.e(x, i)
            if y is not None:
                if y not in elem_set:
                    failures.append(f"e_{i} leaves the set at {x!r}")
                elif crys.f(y, i) != x:
                    failures.append(f"f_{i} e_{i} != id at {x!r}")
                elif crys.wt(y) != add(wx, ai):
                    failures.append(f"wt(e_{i} x) != wt(x)+alpha_{i} at {x!r}")
            z = crys.f(x, i)
            if z is not None:
                if z not in elem_set:
                    failures.append(f"f_{i} leaves the set at {x!r}")
                elif crys.e(z, i) != x:
                    failures.append(f"e_{i} f_{i} != id at {x!r}")
                elif crys.wt(z) != sub(wx, ai):
                    failures.append(f"wt(f_{i} x) != wt(x)-alpha_{i} at {x!r}")
            ex, px = crys.eps(x, i), crys.phi(x, i)
            if px - ex != wx[i]:
                failures.append(f"phi-eps != <h_{i}, wt> at {x!r}")
            k, y2 = 0, x
            while k <= ex:
                y2 = crys.e(y2, i)
                if y2 is None:
                    break
                k += 1
            if k != ex:
                failures.append(f"eps_{i} formula disagrees with count at {x!r}")
            k, y2 = 0, x
            while k <= px:
                y2 = crys.f(y2, i)
                if y2 is None:
                    break
                k += 1
            if k != px:
                failures.append(f"phi_{i} formula disagrees with count at {x!r}")
    return failures


def unique_isomorphism(crys_a: Crystal, elems_a, crys_b: Crystal, elems_b,
                       indices=None) -> dict:
    """The unique colored-digraph isomorphism between two connected crystals.

    Elements are bucketed on (wt, eps_*, phi_*); a bucket holding exactly one
    element on each side forces a seed pair, and the pairing is grown along
    every arrow from there.  Raises AssertionError if the bucket statistics
    differ, the graphs are not connected from the seed, or any arrow or
    weight disagrees.  Connectedness plus the forced seed make the returned
    map the only possible isomorphism.
    """
    if indices is None:
        indices = crys_a.index_set
    elems_a, elems_b = list(elems_a), list(elems_b)
    assert len(elems_a) == len(elems_b)

    def signature(crys, x):
        return (crys.wt(x),
                tuple(crys.eps(x, i) for i in indices),
                tuple(crys.phi(x, i) for i in indices))

    buckets_a: dict[tuple, list] = {}
    buckets_b: dict[tuple, list] = {}
    for x in elems_a:
        buckets_a.setdefault(signature(crys_a, x), []).append(x)
    for x in elems_b:
        buckets_b.setdefault(signature(crys_b, x), []).append(x)
    assert set(buckets_a) == set(buckets_b), "signature sets differ"
    for s in buckets_a:
        assert len(buckets_a[s]) == len(buckets_b[s]), "bucket sizes differ"
    seeds = [s for s in buckets_a if len(buckets_a[s]) == 1]
    assert seeds, "no singleton signature to seed from"
    s0 = min(seeds)
    a0, b0 = buckets_a[s0][0], buckets_b[s0][0]

    pair = {a0: b0}
    rpair = {b0: a0}
    queue = deque([a0])
    while queue:
        a = queue.popleft()
        b = pair[a]
        for i in indices:
            for op_a, op_b in ((crys_a.e, crys_b.e), (crys_a.f, crys_b.f)):
                xa, xb = op_a(a, i), op_b(b, i)
                assert (xa is None) == (xb is None), \
                    f"arrow {i} defined on one side only at {a!r}"
                if xa is None:
                    continue
                if xa in pair:
                    assert pair[xa] == xb, f"arrow conflict at {xa!r}"
                else:
                    assert xb not in rpair, f"two-to-one at {xb!r}"
                    pair[xa] = xb
                    rpair[xb] = xa
                    queue.append(xa)
    assert len(pair) == len(elems_a), "not connected from the forced seed"
    for a in elems_a:
        b = pair[a]
        assert crys_a.wt(a) == crys_b.wt(b)
        for i in indices:
            for op_a, op_b in ((crys_a.e, crys_b.e), (crys_a.f, crys_b.f)):
                xa, xb = op_a(a, i), op_b(b, i)
                assert (xa is None) == (xb is None)
                if xa is not None:
                    assert pair[xa] == xb
    return pair
