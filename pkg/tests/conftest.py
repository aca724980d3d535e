import os
import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from tenval.linalg import Matrix  # noqa: E402
from tenval.symtensor import SymTensor, exponents  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)
positive_rationals = st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=8)


@st.composite
def sym_tensors(draw, dim=2, max_rank=6):
    p = draw(st.integers(0, max_rank))
    coords = {beta: draw(small_rationals) for beta in exponents(dim, p)}
    return SymTensor(dim, p, coords)


@st.composite
def invertible_matrices(draw, n=2):
    rows = draw(st.lists(st.lists(small_rationals, min_size=n, max_size=n), min_size=n, max_size=n))
    phi = Matrix(rows)
    from hypothesis import assume
    assume(phi.det() != 0)
    return phi


@pytest.fixture
def rng():
    import random
    return random.Random(12345)
