"""Combinatorial balls and spheres around a subcomplex, elementary projections,
projection rays and directed geodesics."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Union

from .core import (
    Complex,
    Simplex,
    SubcomplexHandle,
    Verdict,
    bfs_distances,
    canonical_key,
    combinatorial_distance,
    link_faces,
    proper_faces,
    simplex,
)
from .errors import (
    CapacityError,
    ConvexityViolation,
    InternalConsistencyError,
    LemmaViolation,
    NotSpherical,
    OutOfBall,
    Unreachable,
)

QLike = Union[SubcomplexHandle, Iterable[int]]


def _handle(K: Complex, Q: QLike) -> SubcomplexHandle:
    if isinstance(Q, SubcomplexHandle):
        return Q
    return SubcomplexHandle.induced(K, Q)


def neighborhood(K: Complex, faces: Iterable[Simplex]) -> frozenset:
    """N_K(B): union of the closed simplices of K meeting B."""
    vs = {x for f in faces for x in f}
    out = set()
    for x in vs:
        for t in K.cofaces((x,)):
            if t not in out:
                out.add(t)
                out.update(proper_faces(t))
    return frozenset(out)


@dataclass
class BallTower:
    base: SubcomplexHandle
    levels: List[SubcomplexHandle]
    vertex_distance: Dict[int, int]
    convexity: str = "asserted"

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def vertices_at(self, n: int) -> List[int]:
        return sorted(v for v, d in self.vertex_distance.items() if d == n)

    def to_dict(self) -> Dict:
        return {
            "base": sorted(self.base.vertex_set),
            "convexity": self.convexity,
            "levels": [
                {"radius": n, "vertices": sorted(B.vertex_set), "faces": len(B.face_set)}
                for n, B in enumerate(self.levels)
            ],
        }


def ball_tower(K: Complex, Q: QLike, n_max: Optional[int] = None,
               convexity: str = "asserted") -> BallTower:
    """Iterate B_{n+1} = N_K(B_n) from B_0 = Q.

    Each level is compared against the full subcomplex spanned by the
    vertices at distance <= n from Q; any difference raises
    :class:`ConvexityViolation` naming a vertex of an offending face.
    """
    Q = _handle(K, Q)
    dist = bfs_distances(K, sorted(Q.vertex_set))
    for f in K.faces:
        if Q.vertex_set.issuperset(f) and f not in Q.face_set:
            raise ConvexityViolation(f"base is not full: misses {list(f)}", vertex=f[0])
    if n_max is None:
        n_max = max(dist.values())
    levels = [Q]
    current = Q.face_set
    for n in range(1, n_max + 1):
        current = neighborhood(K, current)
        expected = frozenset(f for f in K.faces
                             if all(dist.get(x, n + 1) <= n for x in f))
        if current != expected:
            bad = min(current ^ expected, key=canonical_key)
            worst = max(bad, key=lambda x: (dist.get(x, -1), x))
            raise ConvexityViolation(
                f"B_{n} differs from the distance-{n} span at face {list(bad)}", vertex=worst)
        levels.append(SubcomplexHandle(K, frozenset(x for f in current for x in f),
                                       current, is_full=True))
    return BallTower(Q, levels, dist, convexity)


def sphere(K: Complex, tower: BallTower, n: int) -> SubcomplexHandle:
    """Full subcomplex on the vertices at distance exactly n."""
    if not 1 <= n <= tower.depth:
        raise ValueError(f"radius {n} outside 1..{tower.depth}")
    ring = set(tower.vertices_at(n))
    faces = frozenset(f for f in K.faces if ring.issuperset(f))
    inner = tower.levels[n - 1].vertex_set
    disjoint = frozenset(f for f in tower.levels[n].face_set if inner.isdisjoint(f))
    if faces != disjoint:
        raise InternalConsistencyError(f"S_{n} differs from the part of B_{n} missing B_{n-1}")
    return SubcomplexHandle(K, frozenset(ring), faces, is_full=True)


def elementary_projection(K: Complex, Q: QLike, s: Sequence[int]) -> Simplex:
    """Face-poset projection of a simplex of B_1 Q onto Q."""
    Q = _handle(K, Q)
    s = tuple(s)
    if s not in K.faces:
        raise OutOfBall(f"{list(s)} is not a face")
    meet = tuple(x for x in s if x in Q.vertex_set)
    if meet:
        if meet not in Q.face_set:
            raise LemmaViolation(f"{list(s)} meets the base in a non-face {list(meet)}")
        return meet
    # St(s, K) ∩ Q is spanned by the base vertices joinable to s
    span = tuple(sorted(q for q in Q.vertex_set if simplex(s + (q,)) in K.faces))
    if not span:
        raise OutOfBall(f"{list(s)} is not in the 1-ball around the base")
    if span not in Q.face_set or simplex(s + span) not in K.faces:
        raise LemmaViolation(
            f"star of {list(s)} meets the base in {list(span)}, not a single simplex")
    return span


@dataclass
class SimplexSequence:
    simplices: List[Simplex]
    kind: str = "projection_ray"

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self):
        return iter(self.simplices)

    def __getitem__(self, i):
        return self.simplices[i]

    def to_list(self) -> List[List[int]]:
        return [list(s) for s in self.simplices]


def _check_distance_law(K: Complex, ray: List[Simplex]) -> None:
    for k, sk in enumerate(ray):
        for v in sk:
            dist = bfs_distances(K, [v])
            for m in range(k + 1, len(ray)):
                for w in ray[m]:
                    if dist.get(w) != m - k:
                        raise LemmaViolation(
                            f"distance law fails: d({v},{w})={dist.get(w)}, expected {m - k}")


def projection_ray(K: Complex, Q: QLike, s: Sequence[int],
                   tower: Optional[BallTower] = None) -> SimplexSequence:
    """sigma_0 = s, then sigma_k = projection of sigma_{k-1} onto B_{n-k} Q."""
    s = tuple(s)
    if tower is None:
        Q = _handle(K, Q)
        tower = ball_tower(K, Q)
    levels = {tower.vertex_distance.get(x) for x in s}
    if len(levels) != 1 or None in levels:
        raise NotSpherical(f"{list(s)} has vertices at distances {sorted(levels, key=str)}")
    n = levels.pop()
    if n > tower.depth:
        raise OutOfBall(f"{list(s)} lies beyond the tower depth {tower.depth}")
    ray = [s]
    for k in range(1, n + 1):
        ray.append(elementary_projection(K, tower.levels[n - k], ray[-1]))
    _check_distance_law(K, ray)
    return SimplexSequence(ray, "projection_ray")


def directed_geodesic(K: Complex, u: int, w: int) -> SimplexSequence:
    """The projection ray from {u} onto {w}."""
    d = combinatorial_distance(K, u, w)
    if d is None:
        raise Unreachable(f"no edge path from {u} to {w}")
    tower = ball_tower(K, [w], n_max=d)
    ray = projection_ray(K, tower.base, (u,), tower=tower)
    if len(ray) != d + 1:
        raise InternalConsistencyError(f"geodesic has {len(ray)} entries for distance {d}")
    return SimplexSequence(ray.simplices, "directed_geodesic")


def _star_ball_equals(K: Complex, a: Simplex, b: Simplex, c: Simplex) -> bool:
    """St(a, K) ∩ B_1(c, K) == closed b, without materialising either side."""
    near = set(c)
    for x in c:
        near |= K.adjacency[x]
    joinable = {x for x in near if x in a or simplex(a + (x,)) in K.faces}
    return joinable == set(b) and simplex(set(a) | set(b)) in K.faces


def _star_ball_literal(K: Complex, a: Simplex, b: Simplex, c: Simplex) -> bool:
    star_faces = set()
    for t in K.cofaces(a):
        star_faces.add(t)
        star_faces.update(proper_faces(t))
    dist = bfs_distances(K, c)
    ball = {f for f in K.faces if all(dist.get(x, 2) <= 1 for x in f)}
    closed_b = {b} | set(proper_faces(b))
    return (star_faces & ball) == closed_b


def is_directed_geodesic(K: Complex, seq) -> Verdict:
    """Check both directed-geodesic axioms; witness is the first failing index."""
    seq = [tuple(s) for s in seq]
    for i, s in enumerate(seq):
        if s not in K.faces:
            return Verdict(False, witness=i, reason="entry is not a face")
    for i in range(len(seq) - 1):
        a, b = seq[i], seq[i + 1]
        if set(a) & set(b) or simplex(set(a) | set(b)) not in K.faces:
            return Verdict(False, witness=i, reason="axiom 1: not disjoint and spanning")
    for i in range(len(seq) - 2):
        if not _star_ball_literal(K, seq[i], seq[i + 1], seq[i + 2]):
            return Verdict(False, witness=i, reason="axiom 2: star/ball intersection")
    return Verdict(True)


def enumerate_directed_geodesics(K: Complex, u: int, w: int, cap: int,
                                 max_nodes: int = 1_000_000) -> List[SimplexSequence]:
    """Every sequence from {u} to {w} with at most cap+1 entries obeying both axioms.

    Nothing about distances is assumed; the search branches over whole links.
    """
    d = combinatorial_distance(K, u, w)
    if d is None:
        raise Unreachable(f"no edge path from {u} to {w}")
    if d > cap:
        raise CapacityError(f"distance {d} exceeds cap {cap}")
    links: Dict[Simplex, List[Simplex]] = {}

    def successors(s):
        if s not in links:
            links[s] = sorted(link_faces(K, s), key=canonical_key)
        return links[s]

    found: List[SimplexSequence] = []
    target = (w,)
    nodes = 0
    stack = [[(u,)]]
    while stack:
        seq = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            raise CapacityError(f"search exceeded {max_nodes} nodes")
        if seq[-1] == target:
            found.append(SimplexSequence(list(seq), "directed_geodesic"))
        if len(seq) > cap:
            continue
        for t in reversed(successors(seq[-1])):
            if len(seq) >= 2 and not _star_ball_equals(K, seq[-2], seq[-1], t):
                continue
            stack.append(seq + [t])
    found.sort(key=lambda g: [canonical_key(s) for s in g.simplices])
    return found
