"""Exact algebra for rational curves over number fields.

The package computes optimal affine reparametrizations of rational curves
parametrized over an algebraic extension of the rationals, using restriction
of scalars, witness varieties and hypercircles, all in exact arithmetic.
It also generates infinite families of quadratic parametrization fields for
conics with rational coefficients.
"""

__version__ = "0.1.0"
