"""Shared fixtures and hypothesis strategies for the test suite."""
from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from hermlie import Complexification
from hermlie.catalog import list_entries
from hermlie.forms import Form, all_index_tuples
from hermlie.scalars import GaussianRational

# ---------------------------------------------------------------------------
# exact-scalar strategies

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)

gaussian_rationals = st.builds(GaussianRational, small_fractions, small_fractions)

nonzero_gaussian_rationals = gaussian_rationals.filter(bool)


@st.composite
def exact_forms(draw, dim=6, degree=None, max_terms=4):
    """Random form with GaussianRational coefficients on f^1..f^dim."""
    if degree is None:
        degree = draw(st.integers(min_value=0, max_value=dim))
    keys = all_index_tuples(dim, degree)
    chosen = draw(st.lists(st.sampled_from(keys), max_size=max_terms, unique=True)
                  ) if keys else []
    coeffs = {k: draw(gaussian_rationals) for k in chosen}
    return Form(dim, degree, coeffs)


@st.composite
def rational_vectors(draw, dim=6):
    return [draw(small_fractions) for _ in range(dim)]


# ---------------------------------------------------------------------------
# catalog-backed fixtures (cached: building a Complexification is not free)


@lru_cache(maxsize=None)
def catalog_complexifications():
    """One exact Complexification per catalog entry (first stored example)."""
    out = []
    for entry in list_entries():
        ex = entry.examples[0]
        g = ex.algebra_instance()
        out.append(Complexification.from_real(g, ex.j()))
    return tuple(out)


@lru_cache(maxsize=None)
def catalog_algebras():
    return tuple(e.algebra_instance() for e in list_entries())


@pytest.fixture(scope="session")
def complexifications():
    return catalog_complexifications()


@pytest.fixture(scope="session")
def algebras():
    return catalog_algebras()
