"""Exact symbolic verification of twisted partial actions of Hopf algebras
and of the partial crossed products they define."""

__version__ = "0.1.0"
