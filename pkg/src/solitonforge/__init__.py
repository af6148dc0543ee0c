"""Exact solutions of sinh-Gordon and sine-Gordon type equations.

    (delta/eps)(w_xx - eps^2 w_yy) = 2 (a^2 - delta^2 b^2) sinh(2 delta w / eps),
    delta, eps in {1, i}

Submodules:

* :mod:`~solitonforge.core` unit parameters, equation specs, second-order jets
* :mod:`~solitonforge.specialfn` Jacobi elliptic functions and adaptive quadrature
* :mod:`~solitonforge.expsum` exponential polynomials and Hirota D-operators
* :mod:`~solitonforge.hirota` one-, two-, three- and N-soliton solutions
* :mod:`~solitonforge.separation` functional-separation families
* :mod:`~solitonforge.backlund` Backlund transformations and the auto-BT integrator
* :mod:`~solitonforge.verify` residual engine
* :mod:`~solitonforge.cli` command-line front end
"""

from .core import EquationSpec, Jet2, Solution, UnitParam
from .errors import SolitonForgeError
from .verify import ResidualReport, fd_crosscheck, grid_scan, pde_residual, realize

__version__ = "0.1.0"

__all__ = ["EquationSpec", "Jet2", "Solution", "UnitParam", "SolitonForgeError", "ResidualReport",
           "fd_crosscheck", "grid_scan", "pde_residual", "realize", "__version__"]
