"""schublas core module."""
