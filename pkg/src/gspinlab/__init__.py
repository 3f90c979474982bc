"""gspinlab: exact Clifford/GSpin algebra with local L-factor verification.

Subpackages follow the pipeline: quadratic spaces feed the Clifford engine,
whose even-algebra structure is classified and witnessed at low rank; abstract
parameter decompositions give component-group constants; Satake data gives
unramified Euler factors; and the local period module verifies the unramified
period identity numerically.
"""

from ._kernel import IMPLEMENTATION as KERNEL_IMPLEMENTATION

__version__ = "0.1.0"

__all__ = ["KERNEL_IMPLEMENTATION", "__version__"]
