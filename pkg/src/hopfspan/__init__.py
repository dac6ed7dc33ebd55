"""Exact-arithmetic workbench for labeled span bicategories.

Finite sets and spans form the skeleton; each apex element carries a label
drawn from a monoidal backend (graded rational vector spaces, or finite
categories).  On top of that sit monad presentations, comonoid structure,
fusion operators and antipode computation, all checked with exact equality.
"""

__version__ = "0.1.0"
