"""Relations and the relational operations."""
