"""
B-spline Transform Inversion
src package root
"""
__version__ = "1.0.0"
