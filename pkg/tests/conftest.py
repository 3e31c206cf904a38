import pytest

from shadowcodes import FiniteField, Polynomial, ShadowCodeSpec, build


@pytest.fixture(scope="session")
def f7():
    return FiniteField(7)


@pytest.fixture(scope="session")
def golden_spec(f7):
    # q=7, r=2, P = [x^2 + 1, x^2 + x + 3]
    p1 = Polynomial(f7, [1, 0, 1])
    p2 = Polynomial(f7, [3, 1, 1])
    return ShadowCodeSpec(f7, 2, [p1, p2])


@pytest.fixture(scope="session")
def golden_matrix(golden_spec):
    return build(golden_spec)
