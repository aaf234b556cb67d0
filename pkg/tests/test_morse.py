import pytest

from systolic.arborescent import hex_disk, hex_labels
from systolic.core import from_facets, full_simplex, join_simplex
from systolic.corpus import (
    cycle,
    dunce_hat,
    hollow_triangle,
    octahedron,
    tetrahedron_boundary,
)
from systolic.errors import (
    CapacityError,
    LemmaViolation,
    SchedulingError,
    SingleCriticalCellViolation,
    UndefinedPointer,
    Unreachable,
)
from systolic.formats import dumps
from systolic.morse import (
    FIRST_SPHERE,
    MIXED,
    SPHERE,
    VectorField,
    acyclicity,
    brute_force_collapsible,
    certify_collapsible,
    collapse_sequence,
    gradient_matching,
    pointer_function,
    replay,
    validate_vector_field,
)
from systolic.projection import ball_tower, elementary_projection

LAB = hex_labels(3)


class TestPointer:
    def test_first_sphere(self):
        K = full_simplex(2)
        pa = pointer_function(K, ball_tower(K, [0]), (1, 2))
        assert (pa.pointer, pa.case_tag) == (0, FIRST_SPHERE)

    def test_sphere_case(self):
        K = hex_disk(2)
        tower = ball_tower(K, [0])
        for x in tower.vertices_at(2):
            joinable = sorted(y for y in K.adjacency[x] if y in K.adjacency[0])
            pa = pointer_function(K, tower, (x,))
            assert (pa.pointer, pa.case_tag) == (joinable[0], SPHERE)

    def test_mixed_case_pointer(self):
        K = hex_disk(2)
        tower = ball_tower(K, [0])
        b = LAB[(1, 1)]
        lo, hi = sorted((LAB[(1, 0)], LAB[(0, 1)]))
        pa = pointer_function(K, tower, tuple(sorted((hi, b))))
        assert (pa.pointer, pa.case_tag) == (lo, MIXED)
        assert join_simplex(tuple(sorted((hi, b))), lo) in K.faces
        # the other edge already holds its pointer and is matched as an image
        with pytest.raises(UndefinedPointer):
            pointer_function(K, tower, tuple(sorted((lo, b))))

    def test_pointer_through_geodesic_of_lower_vertex_is_not_joinable(self):
        # taking the pointer from the geodesic of the lower vertex gives the
        # centre, which is two steps from the upper vertex
        K = hex_disk(2)
        tower = ball_tower(K, [0])
        d = tower.vertex_distance
        mixed = [(a, b) for a, b in K.skeleton_faces(1) if {d[a], d[b]} == {1, 2}]
        assert mixed
        for e in mixed:
            assert join_simplex(e, 0) not in K.faces

    def test_base_vertex_excluded(self):
        K = full_simplex(2)
        with pytest.raises(UndefinedPointer):
            pointer_function(K, ball_tower(K, [0]), (0, 1))

    def test_projection_not_a_simplex(self):
        # the far vertex of the hexagon sees two unjoined vertices one level down
        K = cycle(6)
        tower = ball_tower(K, [0])
        with pytest.raises(LemmaViolation):
            pointer_function(K, tower, (3,))

    def test_disconnected_simplex(self):
        K = from_facets([[0, 1], [2, 3]])
        with pytest.raises(Unreachable):
            pointer_function(K, ball_tower(K, [0]), (2,))

    def test_pointer_points_inward_everywhere(self):
        K = hex_disk(3)
        tower = ball_tower(K, [0])
        d = tower.vertex_distance
        for s in K:
            if 0 in s:
                continue
            try:
                pa = pointer_function(K, tower, s)
            except UndefinedPointer:
                continue
            assert d[pa.pointer] < max(d[x] for x in s)
            assert pa.pointer not in s and join_simplex(s, pa.pointer) in K.faces


class TestMatching:
    def test_edge(self):
        V = gradient_matching(from_facets([[0, 1]]), 0)
        assert V.pairs == [((1,), (0, 1))] and V.critical == [(0,)]

    def test_triangle(self):
        V = gradient_matching(full_simplex(2), 0)
        assert set(V.pairs) == {((1,), (0, 1)), ((2,), (0, 2)), ((1, 2), (0, 1, 2))}
        assert V.critical == [(0,)]

    def test_hexdisk(self):
        K = hex_disk(2)
        V = gradient_matching(K, 0)
        assert validate_vector_field(K, V) and V.critical == [(0,)]
        assert len(V.pairs) == (len(K) - 1) // 2

    def test_non_systolic_inputs_raise(self):
        with pytest.raises(LemmaViolation):
            gradient_matching(octahedron(), 0)
        with pytest.raises(SingleCriticalCellViolation):
            gradient_matching(from_facets([[0, 1], [2]]), 0)

    def test_deterministic(self):
        K = hex_disk(3)
        a = dumps(gradient_matching(K, 5).to_dict())
        b = dumps(gradient_matching(hex_disk(3), 5).to_dict())
        assert a == b


class TestValidation:
    def test_simplex_in_two_pairs(self):
        K = full_simplex(2)
        V = VectorField([((1,), (0, 1)), ((0,), (0, 1)), ((2,), (0, 2)), ((1, 2), (0, 1, 2))], [])
        res = validate_vector_field(K, V)
        assert not res and res.witness == [[[1], [0, 1]], [[0], [0, 1]]]

    def test_missing_face(self):
        K = full_simplex(2)
        V = VectorField([((1,), (0, 1)), ((2,), (0, 2))], [(0,)])
        res = validate_vector_field(K, V)
        assert not res and res.witness == [1, 2]

    def test_not_codimension_one(self):
        K = full_simplex(2)
        res = validate_vector_field(K, VectorField([((1,), (0, 1, 2))], []))
        assert not res and "codimension" in res.reason


class TestAcyclicity:
    def test_triangle_order(self):
        K = full_simplex(2)
        cert = acyclicity(K, gradient_matching(K, 0))
        assert cert and len(cert.topological_order) == 3 and cert.closed_path is None

    def test_square_boundary_cycle(self):
        # each vertex pushed along the square into the next edge
        K = cycle(4)
        V = VectorField([((0,), (0, 1)), ((1,), (1, 2)), ((2,), (2, 3)), ((3,), (0, 3))], [])
        assert validate_vector_field(K, V)
        cert = acyclicity(K, V)
        assert not cert and cert.topological_order is None
        path = cert.closed_path
        assert path[0] == path[-1] and len(set(path)) == 4

    @pytest.mark.parametrize("v", hex_disk(3).vertices)
    def test_hexdisk_every_base(self, v):
        K = hex_disk(3)
        assert acyclicity(K, gradient_matching(K, v))


class TestCollapse:
    def test_triangle(self):
        K = full_simplex(2)
        V = gradient_matching(K, 0)
        seq = collapse_sequence(K, V, acyclicity(K, V))
        assert seq[0] == ((1, 2), (0, 1, 2))
        assert replay(K, seq) == from_facets([[0]])

    def test_single_vertex(self):
        K = from_facets([[4]])
        V = gradient_matching(K, 4)
        assert collapse_sequence(K, V, acyclicity(K, V)) == []

    def test_hexdisk_length(self):
        K = hex_disk(2)
        cert = certify_collapsible(K, 0)
        assert len(cert.sequence) == (len(K) - 1) // 2
        assert replay(K, cert.sequence).faces == {(0,)}

    def test_cyclic_matching_refused(self):
        K = cycle(4)
        V = VectorField([((0,), (0, 1)), ((1,), (1, 2)), ((2,), (2, 3)), ((3,), (0, 3))], [])
        with pytest.raises(ValueError):
            collapse_sequence(K, V, acyclicity(K, V))

    def test_bad_replay(self):
        with pytest.raises(SchedulingError):
            replay(full_simplex(2), [((1,), (1, 2))])


class TestOracle:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_simplices(self, n):
        assert brute_force_collapsible(full_simplex(n))

    @pytest.mark.parametrize("K", [hollow_triangle(), tetrahedron_boundary(), cycle(5)])
    def test_not_collapsible(self, K):
        assert not brute_force_collapsible(K)

    def test_dunce_hat(self):
        assert not brute_force_collapsible(dunce_hat(), max_faces=80)

    def test_needs_search(self):
        # two triangles joined at a vertex plus a tail: collapsible only in a good order
        K = from_facets([[0, 1, 2], [2, 3, 4], [4, 5]])
        assert brute_force_collapsible(K)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            brute_force_collapsible(full_simplex(5))
