"""Functions and their set extensions."""
