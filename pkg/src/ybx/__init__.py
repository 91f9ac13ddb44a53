"""Exact verification and construction of braided sets on cocommutative coalgebras."""

from .braided import BraidedPair, check_braid, check_qybe, full_report
from .coalgebra import Coalgebra, make_primitive, make_setlike
from .extension import extend
from .field import GF, QQ
from .hopf import Brace, BraidingOperator, Cocycle, HopfAlgebra
from .linmap import LinMap
from .primitive import PrimParams, check_conditions, prim_to_solution
from .rack import Rack, solution_to_rack

__version__ = "0.1.0"
