"""N6 Algebra - exact construction and certification of N=6 3-algebras."""

__version__ = "0.1.0"
