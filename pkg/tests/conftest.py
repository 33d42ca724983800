"""Shared fixtures and hypothesis strategies for the suite."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from chromheap.families import (
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from chromheap.graphs import Graph, from_edge_list
from chromheap.series import TruncatedSeries


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def k1() -> Graph:
    return complete_graph(1)


@pytest.fixture
def k2() -> Graph:
    return complete_graph(2)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def star5() -> Graph:
    return star_graph(5)


@st.composite
def graphs(draw, max_n: int = 6) -> Graph:
    """Arbitrary small graph: vertex count then a subset of possible edges."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    picks = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return from_edge_list(n, picks)


@st.composite
def rational_series(draw, max_vars: int = 3, max_bound: int = 4) -> TruncatedSeries:
    """Random truncated series with small rational coefficients."""
    nvars = draw(st.integers(min_value=1, max_value=max_vars))
    bound = draw(st.integers(min_value=1, max_value=max_bound))
    exps = st.tuples(*[st.integers(min_value=0, max_value=bound) for _ in range(nvars)])
    coeff = st.builds(
        Fraction,
        st.integers(min_value=-9, max_value=9),
        st.integers(min_value=1, max_value=9),
    )
    raw = draw(st.dictionaries(exps, coeff, max_size=8))
    terms = {e: c for e, c in raw.items() if sum(e) <= bound}
    return TruncatedSeries(nvars, bound, terms)
