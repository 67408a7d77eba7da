"""Gradedbezout package.

Kolchin dimension polynomials, minimizing coefficients, characteristic
polynomials of graded ideals and Bezout-type bounds on typical dimension.
"""
