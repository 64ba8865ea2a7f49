"""Finite sets, partitions and set-theoretic encodings."""
