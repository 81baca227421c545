import pytest

from hyperoct.generating_functions import descent_table


@pytest.fixture(scope="session")
def tables():
    """Descent tables of B_1 .. B_6, built once per session."""
    return {n: descent_table(n) for n in range(1, 7)}
