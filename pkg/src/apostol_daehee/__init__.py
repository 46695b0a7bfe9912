"""Exact computation of lambda-Apostol-Daehee and Simsek numbers and polynomials."""

__version__ = "0.1.0"
