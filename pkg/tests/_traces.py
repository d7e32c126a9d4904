"""Golden evolution runs used by the automaton tests.

Each trace lists consecutive states of a 27 cell chain under the carrier
whose capacity equals the longer soliton, together with the expected
outgoing soliton data after the collision.
"""

from __future__ import annotations

from dnsca.tableaux import TwoRow


def _st(tops, bots):
    assert len(tops) == len(bots) == 27
    return tuple(TwoRow(((t, b),), 1) for t, b in zip(tops, bots))


TRACES = {
    4: {
        "carrier": 3,
        "states": [
            _st([1]*5 + [2, 2] + [1]*20, [-3, -4, -4, 2, 2, 4, 3] + [2]*20),
            _st([1]*7 + [2, 2] + [1]*18, [2, 2, 2, -3, -4, -4, 2, 4, 3] + [2]*18),
            _st([1]*9 + [2, 2] + [1]*16, [2]*6 + [-3, -4, -4, 4, 3] + [2]*16),
            _st([1]*11 + [-4, 2] + [1]*14, [2]*9 + [-3, -4, 4, 3] + [2]*14),
            _st([1]*13 + [-4, 2] + [1]*12, [2]*12 + [-3, -3, 3, 3] + [2]*11),
            _st([1]*16 + [2, 2] + [1]*9, [2]*14 + [-3, -4, -3, 3, 3] + [2]*8),
            _st([1]*19 + [2, 2] + [1]*6, [2]*16 + [-3, -4, 2, -3, 3, 3] + [2]*5),
            _st([1]*22 + [2, 2] + [1]*3, [2]*18 + [-3, -4, 2, 2, -3, 3, 3] + [2]*2),
        ],
        "outgoing": (
            (2, ((2, 0), (0, 2), (1, 1)), -4),
            (3, ((1, 2), (2, 1), (2, 1)), -1),
        ),
        "shift": 1,
        "energy": -3,
    },
    5: {
        "carrier": 4,
        "states": [
            _st([2, 2] + [1]*4 + [2] + [1]*20, [-3, 5, 4, 3, 2, 2, -4, -5] + [2]*19),
            _st([1]*4 + [2, 2, 1, 1, 2] + [1]*18, [2]*4 + [-3, 5, 4, 3, -4, -5] + [2]*17),
            _st([1]*8 + [2, 2, 4] + [1]*16, [2]*8 + [-3, 5, -4, -5, 3] + [2]*14),
            _st([1]*11 + [2, 1, 2, 2] + [1]*12, [2]*11 + [5, 4, -3, -4, -5, 3] + [2]*10),
            _st([1]*13 + [2, 1, 1, 1, 2, 2] + [1]*8, [2]*13 + [5, 4, 2, 2, -3, -4, -5, 3] + [2]*6),
        ],
        "outgoing": (
            (2, ((1, 1), ((1, 2), (3, 3))), -5),
            (4, ((2, 2), ((1, 1, 2, 3), (2, 4, 4, 4))), -1),
        ),
        "shift": 1,
        "energy": -3,
    },
    6: {
        "carrier": 5,
        "states": [
            _st([2, 2] + [1]*5 + [2, 2] + [1]*18, [-3, -5, 6, 5, 4, 2, 2, -5, -5] + [2]*18),
            _st([1]*5 + [2, 2, 1, 1, 4, 2] + [1]*16, [2]*5 + [-3, -5, 6, 5, -5, -5] + [2]*16),
            _st([1]*10 + [2, -5, 6, 2] + [1]*13, [2]*10 + [-3, -4, -5, 4, 4] + [2]*12),
            _st([1]*15 + [2, 2, 2, 2] + [1]*8, [2]*13 + [-5, 6, -3, -4, -5, 4, 4] + [2]*7),
            _st([1]*20 + [2, 2, 2, 2] + [1]*3, [2]*15 + [-5, 6, 2, 2, 2, -3, -4, -5, 4, 4] + [2]*2),
        ],
        "outgoing": (
            (2, ((2, 0), (0, 0, 0, 1, 0, 1, 0, 0)), -7),
            (5, ((1, 4), (0, 2, 0, 0, 0, 1, 1, 1)), 0),
        ),
        "shift": 0,
        "energy": -4,
    },
}
