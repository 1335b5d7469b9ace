"""reeskit: exact tools for the defining equations of Rees algebras of
square-free monomial ideals."""

__version__ = "0.1.0"
