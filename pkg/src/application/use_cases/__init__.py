"""Use cases - experiment orchestration."""
