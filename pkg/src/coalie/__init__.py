"""Exact computations with coassociative Lie algebras and their enveloping Hopf algebras."""

from .exactmath import MultiPoly, QMatrix, Rational, Subspace, kernel_basis, parse_rational, rref
from .liecoalg import (INFINITE, CLAStructure, conilpotency, cocommutativity_type, center,
                       coradical_unital, delta_kernel, nilpotency, verify_structure)
from .envalg import EnvelopingAlgebra, UElement, TensorElement, antipode, is_involutory

__version__ = "0.1.0"
