"""Tuples, signatures and Cartesian products."""
