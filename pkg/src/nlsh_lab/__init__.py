"""Spectral ImEx solvers for the nonlinear Schrodinger equation and its
hyperbolic relaxation, with experiment drivers and a CLI."""

__version__ = "0.1.0"
