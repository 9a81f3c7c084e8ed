"""Transform catalog repository."""
