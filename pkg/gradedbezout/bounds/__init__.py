"""Bezout-type bounds on the typical dimension of graded systems."""
