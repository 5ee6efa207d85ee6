import pytest

from finito import FinitePoset


@pytest.fixture
def ex4():
    """Four-point space with covers d<b, b<a, c<a (a maximum)."""
    return FinitePoset.from_cover_pairs(4, [(3, 1), (1, 0), (2, 0)], labels="abcd")


@pytest.fixture
def ss0():
    """Four-point circle model: two minimal points under two maximal ones."""
    return FinitePoset.from_cover_pairs(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def wedge5():
    """Five-point model of a two-circle wedge: three minimal under two maximal."""
    return FinitePoset.from_cover_pairs(
        5, [(2, 0), (3, 0), (4, 0), (2, 1), (3, 1), (4, 1)]
    )


@pytest.fixture
def osaki_x():
    """Six-point space X with c,d < a1; c,d,e < b; d,e < a2."""
    return FinitePoset.from_cover_pairs(
        6,
        [(3, 0), (4, 0), (3, 1), (4, 1), (5, 1), (4, 2), (5, 2)],
        labels=["a1", "b", "a2", "c", "d", "e"],
    )


@pytest.fixture
def osaki_y():
    """Five-point suspension of three discrete points."""
    return FinitePoset.from_cover_pairs(
        5,
        [(2, 0), (3, 0), (4, 0), (2, 1), (3, 1), (4, 1)],
        labels=["a", "b", "c", "d", "e"],
    )
