"""coprimax: which finite simple groups have two maximal subgroups of coprime orders?

The classifier answers exactly, listing every pair (H, M) with structures and
factored orders, and ships an independent brute-force permutation oracle for
small two-dimensional linear groups.
"""

from .arith import FactoredInt, PrimePower, factorize, fi_gcd, fi_mul

__version__ = "0.1.0"

__all__ = ["FactoredInt", "PrimePower", "factorize", "fi_gcd", "fi_mul", "__version__"]
