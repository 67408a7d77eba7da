"""Graded modules: rankings, Groebner bases and characteristic polynomials."""
