import numpy as np
import pytest
from hypothesis import given, settings

from systolic.corpus import cycle, dunce_hat, hollow_triangle, octahedron, projective_plane
from systolic.core import from_facets
from systolic.errors import CapacityError
from systolic.homology import boundary_matrix, first_homology, smith_diagonal

from conftest import small_complexes


def numpy_betti1(K):
    """Rational first Betti number from matrix ranks."""
    edges = len(K.skeleton_faces(1))
    r1 = np.linalg.matrix_rank(np.array(boundary_matrix(K, 1))) if edges else 0
    r2 = np.linalg.matrix_rank(np.array(boundary_matrix(K, 2))) if K.skeleton_faces(2) else 0
    return edges - r1 - r2


@pytest.mark.parametrize("K, rank, torsion", [
    (cycle(6), 1, ()),
    (hollow_triangle(), 1, ()),
    (from_facets([[0, 1, 2]]), 0, ()),
    (octahedron(), 0, ()),
    (projective_plane(), 0, (2,)),
    (dunce_hat(), 0, ()),
    (from_facets([[0, 1], [1, 2], [2, 0], [2, 3], [3, 4], [4, 2]]), 2, ()),
])
def test_first_homology_examples(K, rank, torsion):
    h = first_homology(K)
    assert (h.rank, h.torsion) == (rank, torsion)
    assert h.trivial == (rank == 0 and not torsion)


@given(small_complexes(max_vertices=7))
@settings(max_examples=80)
def test_rank_matches_numpy(K):
    assert first_homology(K).rank == numpy_betti1(K)


def test_smith_diagonal_divisibility():
    assert smith_diagonal([[2, 0], [0, 3]]) == [1, 6]
    assert smith_diagonal([[0, 0], [0, 0]]) == []


def test_capacity():
    with pytest.raises(CapacityError):
        smith_diagonal([[1] * 10] * 10, max_entries=50)


def test_boundary_matrix_squares_to_zero():
    K = octahedron()
    d1 = np.array(boundary_matrix(K, 1))
    d2 = np.array(boundary_matrix(K, 2))
    assert not (d1 @ d2).any()
