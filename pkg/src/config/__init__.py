"""Configuration management with Pydantic."""
