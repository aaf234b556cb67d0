"""Shared fixtures and independent oracles built on networkx / numpy."""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from systolic.core import Complex, from_facets

ACCEPTANCE_LINES: list = []


def graph_of(K: Complex) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(K.vertices)
    G.add_edges_from(K.skeleton_faces(1))
    return G


def closure_faces(facets) -> set:
    """Downward closure computed directly from subsets."""
    out = set()
    for f in facets:
        f = sorted(set(f))
        for k in range(1, len(f) + 1):
            out.update(combinations(f, k))
    return out


def oracle_is_flag(K: Complex) -> bool:
    return all(tuple(sorted(c)) in K.faces for c in nx.enumerate_all_cliques(graph_of(K)))


def oracle_full_cycles(K: Complex, lo: int, hi: int) -> list:
    """Induced cycles with lo <= length <= hi, as sorted vertex sets.

    Length-3 cycles count only when the triangle is not a face.
    """
    out = []
    for c in nx.chordless_cycles(graph_of(K), length_bound=hi):
        if len(c) < lo:
            continue
        if len(c) == 3 and tuple(sorted(c)) in K.faces:
            continue
        out.append(tuple(sorted(c)))
    return sorted(out, key=lambda c: (len(c), c))


def oracle_systole(K: Complex) -> float:
    cyc = oracle_full_cycles(K, 3, K.vertex_count)
    return min((len(c) for c in cyc), default=float("inf"))


@st.composite
def small_complexes(draw, max_vertices: int = 8, max_facets: int = 8, max_size: int = 4):
    """Arbitrary (not necessarily flag) complexes on few vertices."""
    n = draw(st.integers(2, max_vertices))
    facets = draw(st.lists(
        st.lists(st.integers(0, n - 1), min_size=1, max_size=max_size, unique=True),
        min_size=1, max_size=max_facets))
    return from_facets(facets)


@st.composite
def small_flag_complexes(draw, max_vertices: int = 9):
    from systolic.core import flag_complex

    n = draw(st.integers(2, max_vertices))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return flag_complex(range(n), [p for p, m in zip(pairs, mask) if m])


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
