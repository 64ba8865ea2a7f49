"""This file contains decorators used to inject fixture databases into tests."""


def with_fixture_database(database_class):
    """
    Decorator to inject a fixture database into a test function.

    Args:
        database_class: The class of the fixture database to inject.
    """

    def decorator(test_func):
        def wrapper(*args, **kwargs):
            # Materialize the database for this test only
            database = database_class()
            try:
                return test_func(database, *args, **kwargs)
            finally:
                database.cleanup()
        return wrapper
    return decorator
