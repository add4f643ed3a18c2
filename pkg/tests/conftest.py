"""
테스트 공용 fixture
"""
import numpy as np
import pytest

from src.construct.data import ConstructionData
from src.poly.biform import BiForm, monomials
from src.poly.text_format import parse_biform

SEED = 20260101

# q, ∂p/∂u|_C, ∂p/∂v|_C 의 계수 절댓값이 모두 1/10 미만인 섭동
SMALL_PERTURBATION = """
1/30 x^2 y w^3
1/15 y^3 u w^2
-1/12 y z^2 v w^2
"""


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture
def random_biform():
    """(rng, bidegree, 항 개수) → 정수 계수 무작위 BiForm"""
    def make(rng, bidegree, n_terms=4, bound=4):
        pool = monomials(*bidegree)
        picks = rng.choice(len(pool), size=min(n_terms, len(pool)), replace=False)
        terms = {pool[int(i)]: int(rng.integers(-bound, bound + 1)) for i in picks}
        return BiForm(terms, bidegree)
    return make


@pytest.fixture
def default_data():
    return ConstructionData.default()


@pytest.fixture
def small_data():
    return ConstructionData.with_perturbation(parse_biform(SMALL_PERTURBATION, (3, 3)))


def perturbed(text: str) -> ConstructionData:
    return ConstructionData.with_perturbation(parse_biform(text, (3, 3)))


@pytest.fixture
def make_data():
    return perturbed
