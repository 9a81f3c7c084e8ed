"""Numerical engines: B-splines, WA, COS, Laplace and error metrics."""
