import pytest


@pytest.fixture
def announce(capsys):
    """Print a line straight to the terminal, bypassing capture.

    The acceptance tests use this for their one pass/fail line per
    criterion.
    """

    def emit(text):
        with capsys.disabled():
            print(text)

    return emit
