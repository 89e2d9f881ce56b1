"""Rainbow-neighbourhood (J-) colourings of cycles, wheels and Jahangir graphs."""

from ._backend import BACKEND
from .budget import BudgetExceeded
from .coloring import Colouring, chi_minus_colourings, chromatic_number, r_chi, rainbow_report
from .generators import complete, cycle, jahangir, mycielski, path, wheel
from .graph import Graph, complement, new_graph
from .jcolor import (
    JDecision,
    construct_jahangir_j,
    decide_cycle,
    decide_jahangir,
    decide_wheel,
    exists_k_j_colouring,
    is_j_colouring,
    is_jstar_colouring,
    j_number,
    jstar_number,
)

__version__ = "0.1.0"
