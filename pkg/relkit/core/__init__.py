"""relkit core: configuration, errors, models and services."""
