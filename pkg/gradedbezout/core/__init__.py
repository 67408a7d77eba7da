"""Numerical polynomials, Kolchin dimension polynomials, minimizing coefficients."""
