"""Application layer - experiment use cases."""
