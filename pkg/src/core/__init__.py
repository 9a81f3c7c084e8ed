"""Core domain models for transform inversion."""
