import pytest

from adelcat.provers import (
    build_five_data,
    build_snake_figure,
    five_category,
    snake_category,
)
from adelcat.quivercat import Arrow, Path, Quiver, QuiverCategory, Relation


@pytest.fixture(scope="session")
def snake_cat():
    return snake_category()


@pytest.fixture(scope="session")
def five_cat():
    return five_category()


@pytest.fixture(scope="session")
def snake_fig():
    return build_snake_figure()


@pytest.fixture(scope="session")
def five_data():
    return build_five_data()


@pytest.fixture(scope="session")
def torsion_cat():
    """Single arrow x: a -> b with 2x = 0; Hom(a, b) is Z/2."""
    q = Quiver(("a", "b"), (Arrow("x", "a", "b"),))
    rel = Relation("a", "b", ((2, Path("a", "b", (0,))),))
    return QuiverCategory(q, (rel,), name="torsion")


@pytest.fixture(scope="session")
def kronecker_cat():
    """Two parallel arrows a -> b, no relations; Hom(a, b) is Z^2."""
    q = Quiver(("a", "b"), (Arrow("u", "a", "b"), Arrow("v", "a", "b")))
    return QuiverCategory(q, (), name="kronecker")
