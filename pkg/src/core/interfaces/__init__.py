"""Core interfaces and abstract base classes."""
