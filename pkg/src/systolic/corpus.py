"""Named small complexes and seeded random families used as test data."""

from __future__ import annotations

import random
from typing import Dict, List, Tuple

from .arborescent import hex_disk, hex_labels, _DIRECTIONS
from .core import Complex, flag_complex, from_facets, full_simplex

OCTAHEDRON_FACETS = [
    [0, 1, 2], [0, 1, 3], [0, 2, 4], [0, 3, 4],
    [5, 1, 2], [5, 1, 3], [5, 2, 4], [5, 3, 4],
]


def octahedron() -> Complex:
    """Boundary of the octahedron; antipodes {0,5}, {1,4}, {2,3}."""
    return from_facets(OCTAHEDRON_FACETS)


def hollow_triangle() -> Complex:
    return from_facets([[0, 1], [1, 2], [0, 2]])


def cycle(n: int) -> Complex:
    return from_facets([[i, (i + 1) % n] for i in range(n)])


def path(n: int) -> Complex:
    return from_facets([[i, i + 1] for i in range(n - 1)])


def two_triangles() -> Complex:
    """Triangles {0,1,2} and {1,2,3} glued along {1,2}."""
    return from_facets([[0, 1, 2], [1, 2, 3]])


def three_triangles_on_edge() -> Complex:
    return from_facets([[0, 1, 2], [0, 1, 3], [0, 1, 4]])


def tetrahedron_boundary() -> Complex:
    return from_facets([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def projective_plane() -> Complex:
    """Six-vertex real projective plane."""
    facets = [[1, 2, 4], [1, 2, 6], [1, 3, 4], [1, 3, 5], [1, 5, 6],
              [2, 3, 5], [2, 3, 6], [2, 4, 5], [3, 4, 6], [4, 5, 6]]
    return from_facets([[x - 1 for x in f] for f in facets])


def dunce_hat(m: int = 3) -> Complex:
    """Triangulated dunce hat: contractible, yet without free faces.

    The boundary of a disk reads a a a^-1 with ``a`` a loop on vertices
    0..m-1; a collar ring and a cone point fill the interior.
    """
    bnd = list(range(m)) + list(range(m)) + [0] + list(range(m - 1, 0, -1))
    n = len(bnd)
    ring = [m + k for k in range(n)]
    centre = m + n
    facets = []
    for k in range(n):
        nk = (k + 1) % n
        facets += [[bnd[k], bnd[nk], ring[k]], [bnd[nk], ring[nk], ring[k]],
                   [ring[k], ring[nk], centre]]
    return from_facets(facets)


def fan(n: int = 6) -> Complex:
    """Cone from hub 0 over the cycle 1..n."""
    return from_facets([[0, 1 + i, 1 + (i + 1) % n] for i in range(n)])


def cone(K: Complex, apex: int) -> Complex:
    faces = set(K.faces)
    faces.update(tuple(sorted(f + (apex,))) for f in K.faces)
    faces.add((apex,))
    return Complex(faces)


def relabel_dense(K: Complex) -> Complex:
    index = {v: i for i, v in enumerate(K.vertices)}
    return Complex(tuple(sorted(index[x] for x in f)) for f in K.faces)


def lattice_patch(rng: random.Random, size: int, radius: int = 4) -> Complex:
    """Flag complex on a randomly grown connected set of lattice points."""
    labels = hex_labels(radius)
    grown = [(0, 0)]
    seen = {(0, 0)}
    while len(grown) < size:
        q, r = rng.choice(grown)
        dq, dr = rng.choice(_DIRECTIONS)
        p = (q + dq, r + dr)
        if p in labels and p not in seen:
            seen.add(p)
            grown.append(p)
    pts = sorted(seen, key=labels.get)
    index = {p: i for i, p in enumerate(pts)}
    edges = [(index[p], index[(p[0] + dq, p[1] + dr)])
             for p in pts for dq, dr in _DIRECTIONS[:3] if (p[0] + dq, p[1] + dr) in index]
    return flag_complex(range(len(pts)), edges)


def random_chordal(rng: random.Random, n: int, max_clique: int = 4) -> Complex:
    """Each new vertex is joined to a random clique of the current graph."""
    cliques = [[0]]
    edges = []
    for v in range(1, n):
        base = rng.choice(cliques)
        k = rng.randint(1, min(len(base), max_clique - 1))
        attach = sorted(rng.sample(base, k))
        edges += [(u, v) for u in attach]
        cliques.append(attach + [v])
    return flag_complex(range(n), edges)


def random_graph_flag(rng: random.Random, n: int, p: float) -> Complex:
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return flag_complex(range(n), edges)


def random_candidates(seed: int = 2024, count: int = 40) -> List[Tuple[str, Complex]]:
    """Seeded pool of random flag complexes on at most 25 vertices.

    Mixes lattice patches (some with holes), cones over patches, chordal
    clique complexes and Erdos-Renyi flag complexes; callers filter with
    ``is_systolic``.
    """
    rng = random.Random(seed)
    out = []
    for i in range(count):
        kind = i % 4
        if kind == 0:
            K = lattice_patch(rng, rng.randint(8, 25))
            out.append((f"patch-{i}", K))
        elif kind == 1:
            P = lattice_patch(rng, rng.randint(6, 16))
            out.append((f"cone-patch-{i}", cone(P, P.vertex_count)))
        elif kind == 2:
            out.append((f"chordal-{i}", random_chordal(rng, rng.randint(6, 14))))
        else:
            out.append((f"gnp-{i}", random_graph_flag(rng, rng.randint(5, 10), 0.45)))
    return out


def named_complexes() -> Dict[str, Complex]:
    named = {f"simplex-{n}": full_simplex(n) for n in range(1, 6)}
    named.update({f"hexdisk-{r}": hex_disk(r) for r in range(1, 4)})
    named.update({
        "octahedron": octahedron(),
        "hollow-triangle": hollow_triangle(),
        "c6": cycle(6),
        "fan6": fan(6),
        "two-triangles": two_triangles(),
        "tetrahedron-boundary": tetrahedron_boundary(),
        "dunce-hat": dunce_hat(),
    })
    return named
