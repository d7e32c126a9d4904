"""Crystal combinatorics for the doubly-forked affine family and a soliton
cellular automaton built on two-row tableau states."""

from .rmatrix import (h_one_row, h_two_row, r_box_cell, r_one_row, r_two_row,
                      yang_baxter_one_row, yang_baxter_two_row)
from .sca import (check_scattering, detect_solitons, evolve, evolve_natural,
                  fmt_state, is_one_soliton_state, make_state, parse_state,
                  soliton_label, soliton_modes, state_energy)
from .tableaux import (TwoRow, enumerate_one_row, enumerate_two_row,
                       parse_one_row, parse_two_row, u_one_row, u_two_row)
from .zero_action import e0, eps0, f0, phi0, sigma

__version__ = "0.1.0"

__all__ = [
    "TwoRow", "check_scattering", "detect_solitons", "e0", "enumerate_one_row",
    "enumerate_two_row", "eps0", "evolve", "evolve_natural", "f0", "fmt_state",
    "h_one_row", "h_two_row", "is_one_soliton_state", "make_state",
    "parse_one_row", "parse_state", "parse_two_row", "phi0", "r_box_cell",
    "r_one_row", "r_two_row", "sigma", "soliton_label", "soliton_modes",
    "state_energy", "u_one_row", "u_two_row", "yang_baxter_one_row",
    "yang_baxter_two_row",
]
