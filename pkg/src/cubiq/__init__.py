"""
cubiq
Exact arithmetic for Gaussian integers, Hurwitz quaternions, twin vectors and icubes in Z^3
"""

__version__ = "0.1.0"
