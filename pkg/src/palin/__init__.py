"""Palindromic numbers across all bases: counting, multiplicities and checks."""

from .kernels import BACKEND
from .radix import RadixExpansion, from_digits, integer_root, is_k_palindromic, is_palindromic, to_digits
from .palgen import PalindromeWitness, count_all, count_upto, enumerate_palindromes, max_palindrome
from .intrinsic import INFINITE, CountResult, MultiplicityProfile, mu, mu_ge, phi, phi_multi, phi_window

__all__ = [
    "BACKEND",
    "INFINITE",
    "CountResult",
    "MultiplicityProfile",
    "PalindromeWitness",
    "RadixExpansion",
    "count_all",
    "count_upto",
    "enumerate_palindromes",
    "from_digits",
    "integer_root",
    "is_k_palindromic",
    "is_palindromic",
    "max_palindrome",
    "mu",
    "mu_ge",
    "phi",
    "phi_multi",
    "phi_window",
    "to_digits",
]
