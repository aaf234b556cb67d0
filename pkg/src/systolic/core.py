"""Finite abstract simplicial complexes and the elementary operations on them.

Simplices are sorted tuples of non-negative vertex ids. The empty simplex is
never stored. Every iteration over a complex follows the canonical order
(dimension first, then lexicographic on the vertex tuple) so that matchings
and collapse sequences built on top are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import DegenerateJoin, InvalidCollapse, MalformedInput, UnknownSimplex

Simplex = Tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical form of a vertex collection; rejects duplicates."""
    vs = tuple(sorted(vertices))
    if len(set(vs)) != len(vs):
        raise MalformedInput(f"duplicate vertex in {list(vertices)}")
    return vs


def canonical_key(s: Simplex) -> Tuple[int, Simplex]:
    return (len(s), s)


def proper_faces(s: Simplex) -> Iterator[Simplex]:
    for size in range(1, len(s)):
        yield from combinations(s, size)


def boundary(s: Simplex) -> List[Simplex]:
    """Codimension-one faces of ``s`` (empty for a vertex)."""
    if len(s) == 1:
        return []
    return [s[:i] + s[i + 1:] for i in range(len(s))]


@dataclass(frozen=True)
class Verdict:
    """A boolean outcome that carries the evidence behind it."""

    ok: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


class Complex:
    """Immutable finite simplicial complex stored as its full face set.

    Vertex ids are arbitrary non-negative integers; complexes built by
    :func:`from_facets` on dense input and standalone links use ``0..n-1``.
    """

    __slots__ = ("faces", "_by_dim", "vertices", "adjacency", "_cofacets")

    def __init__(self, faces: Iterable[Simplex]):
        self.faces: FrozenSet[Simplex] = frozenset(faces)
        ordered = sorted(self.faces, key=canonical_key)
        by_dim: List[List[Simplex]] = []
        for s in ordered:
            while len(by_dim) < len(s):
                by_dim.append([])
            by_dim[len(s) - 1].append(s)
        self._by_dim = tuple(tuple(level) for level in by_dim)
        self.vertices: Tuple[int, ...] = tuple(s[0] for s in self.skeleton_faces(0))
        adj: Dict[int, set] = {v: set() for v in self.vertices}
        for a, b in self.skeleton_faces(1):
            adj[a].add(b)
            adj[b].add(a)
        self.adjacency: Dict[int, FrozenSet[int]] = {v: frozenset(n) for v, n in adj.items()}
        self._cofacets: Optional[Dict[Simplex, Tuple[Simplex, ...]]] = None

    # container protocol -------------------------------------------------
    def __contains__(self, s) -> bool:
        return tuple(s) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self) -> Iterator[Simplex]:
        for level in self._by_dim:
            yield from level

    def __eq__(self, other) -> bool:
        return isinstance(other, Complex) and self.faces == other.faces

    def __hash__(self) -> int:
        return hash(self.faces)

    def __repr__(self) -> str:
        return f"Complex(f_vector={self.f_vector})"

    # shape --------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self._by_dim) - 1

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(level) for level in self._by_dim)

    def skeleton_faces(self, d: int) -> Tuple[Simplex, ...]:
        if 0 <= d < len(self._by_dim):
            return self._by_dim[d]
        return ()

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector))

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def common_neighbors(self, s: Simplex) -> FrozenSet[int]:
        common = self.adjacency[s[0]]
        for x in s[1:]:
            common = common & self.adjacency[x]
        return common

    def cofacets(self, s: Simplex) -> Tuple[Simplex, ...]:
        """Faces of ``self`` having ``s`` as a codimension-one face."""
        if self._cofacets is None:
            table: Dict[Simplex, list] = {f: [] for f in self.faces}
            for t in self:
                for r in boundary(t):
                    table[r].append(t)
            self._cofacets = {f: tuple(ts) for f, ts in table.items()}
        return self._cofacets[s]

    def cofaces(self, s: Simplex) -> List[Simplex]:
        """All faces containing ``s`` (including ``s``), canonical order."""
        s = tuple(s)
        if s not in self.faces:
            raise UnknownSimplex(f"{list(s)} is not a face")
        seen = {s}
        queue = deque([s])
        while queue:
            f = queue.popleft()
            for t in self.cofacets(f):
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return sorted(seen, key=canonical_key)

    def facets(self) -> List[Simplex]:
        return [s for s in self if not self.cofacets(s)]

    def induced(self, vs: Iterable[int]) -> "Complex":
        """Full subcomplex spanned by ``vs``."""
        vs = set(vs)
        return Complex(s for s in self.faces if vs.issuperset(s))


def from_facets(facets: Iterable[Sequence[int]]) -> Complex:
    """Downward closure of a facet list."""
    faces = set()
    for raw in facets:
        raw = list(raw)
        if not raw:
            raise MalformedInput("empty facet")
        if any((not isinstance(x, int)) or isinstance(x, bool) or x < 0 for x in raw):
            raise MalformedInput(f"vertex ids must be non-negative integers: {raw}")
        top = simplex(raw)
        if top in faces:
            continue
        faces.add(top)
        faces.update(proper_faces(top))
    return Complex(faces)


def full_simplex(n: int) -> Complex:
    """The n-simplex on vertices ``0..n``."""
    return from_facets([range(n + 1)])


def _require(K: Complex, s: Simplex) -> Simplex:
    s = tuple(s)
    if s not in K.faces:
        raise UnknownSimplex(f"{list(s)} is not a face of the complex")
    return s


def link_faces(K: Complex, s: Simplex) -> FrozenSet[Simplex]:
    """Lk(s, K) in the original vertex labels."""
    s = _require(K, s)
    members = set(s)
    out = set()
    for t in K.cofaces(s):
        if len(t) > len(s):
            out.add(tuple(x for x in t if x not in members))
    return frozenset(out)


def link(K: Complex, s: Simplex) -> Tuple[Complex, List[int]]:
    """Lk(s, K) re-indexed densely.

    Returns the standalone complex and ``labels`` with ``labels[i]`` the
    original id of new vertex ``i``.
    """
    faces = link_faces(K, s)
    labels = sorted({x for f in faces for x in f})
    index = {old: new for new, old in enumerate(labels)}
    return Complex(tuple(index[x] for x in f) for f in faces), labels


@dataclass
class SubcomplexHandle:
    """A subcomplex of ``parent`` with lazily filled certificate flags.

    The flags are tri-state: ``None`` means unchecked.
    """

    parent: Complex
    vertex_set: FrozenSet[int]
    face_set: FrozenSet[Simplex]
    is_full: Optional[bool] = None
    is_3_convex: Optional[bool] = None
    is_convex: Optional[bool] = None
    notes: Dict[str, str] = field(default_factory=dict)

    @classmethod
    def induced(cls, K: Complex, vs: Iterable[int]) -> "SubcomplexHandle":
        vs = frozenset(vs)
        missing = vs.difference(K.adjacency)
        if missing:
            raise UnknownSimplex(f"vertices {sorted(missing)} not in complex")
        faces = frozenset(s for s in K.faces if vs.issuperset(s))
        return cls(K, vs, faces, is_full=True)

    @classmethod
    def from_faces(cls, K: Complex, faces: Iterable[Simplex]) -> "SubcomplexHandle":
        closed = set()
        for f in faces:
            f = _require(K, f)
            closed.add(f)
            closed.update(proper_faces(f))
        vs = frozenset(x for f in closed for x in f)
        return cls(K, vs, frozenset(closed))

    def complex(self) -> Complex:
        return Complex(self.face_set)

    def __contains__(self, s) -> bool:
        return tuple(s) in self.face_set


def star(K: Complex, s: Simplex) -> SubcomplexHandle:
    """Closed star: every face containing ``s`` together with its faces."""
    s = _require(K, s)
    faces = set()
    for t in K.cofaces(s):
        faces.add(t)
        faces.update(proper_faces(t))
    return SubcomplexHandle(K, frozenset(x for f in faces for x in f), frozenset(faces))


def join_simplex(s: Simplex, w: int) -> Simplex:
    if w in s:
        raise DegenerateJoin(f"vertex {w} already belongs to {list(s)}")
    return tuple(sorted(s + (w,)))


def is_full(K: Complex, vs: Iterable[int], faces: Optional[Iterable[Simplex]] = None) -> bool:
    """Whether the subcomplex on ``vs`` (or the given face subset) is full in K."""
    vs = set(vs)
    if faces is None:
        return True
    faces = set(map(tuple, faces))
    return all(f in faces for f in K.faces if vs.issuperset(f))


def is_flag(K: Complex) -> bool:
    # every clique is a face iff every face is closed under adding a common neighbour
    for f in K:
        for x in K.common_neighbors(f):
            if x not in f and join_simplex(f, x) not in K.faces:
                return False
    return True


def bfs_distances(K: Complex, sources: Iterable[int]) -> Dict[int, int]:
    """Edge-path distance from the source set to every reachable vertex."""
    dist = {}
    queue = deque()
    for v in sources:
        if v not in dist:
            dist[v] = 0
            queue.append(v)
    while queue:
        u = queue.popleft()
        for w in sorted(K.adjacency[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def combinatorial_distance(K: Complex, u: int, w: int) -> Optional[int]:
    """Shortest edge-path length, or ``None`` if ``u`` and ``w`` are disconnected."""
    for x in (u, w):
        if x not in K.adjacency:
            raise UnknownSimplex(f"vertex {x} not in complex")
    return bfs_distances(K, [u]).get(w)


def connected_components(K: Complex) -> List[List[int]]:
    seen = set()
    comps = []
    for v in K.vertices:
        if v in seen:
            continue
        comp = sorted(bfs_distances(K, [v]))
        seen.update(comp)
        comps.append(comp)
    return comps


def free_faces(K: Complex) -> List[Tuple[Simplex, Simplex]]:
    """Pairs (s, t) where t is a facet and s lies in no other face."""
    pairs = []
    for s in K:
        cof = K.cofacets(s)
        if len(cof) == 1 and not K.cofacets(cof[0]):
            pairs.append((s, cof[0]))
    return pairs


def elementary_collapse(K: Complex, s: Simplex) -> Complex:
    s = _require(K, s)
    cof = K.cofacets(s)
    if len(cof) != 1 or K.cofacets(cof[0]):
        raise InvalidCollapse(f"{list(s)} is not a free face")
    return Complex(K.faces - {s, cof[0]})


def is_pseudomanifold(K: Complex) -> Verdict:
    """Pure complex whose codimension-one faces have one or two cofacets."""
    facets = K.facets()
    if not facets:
        return Verdict(False, reason="empty complex")
    top = K.dim
    impure = [f for f in facets if len(f) - 1 != top]
    if impure:
        return Verdict(False, witness=list(impure[0]), reason="not pure")
    for r in K.skeleton_faces(top - 1):
        n = len(K.cofacets(r))
        if n not in (1, 2):
            return Verdict(False, witness=list(r), reason=f"ridge with {n} cofacets")
    return Verdict(True)


def flag_complex(vertices: Iterable[int], edges: Iterable[Sequence[int]]) -> Complex:
    """Clique complex of a graph: every clique spans a face."""
    adj: Dict[int, set] = {v: set() for v in vertices}
    for a, b in edges:
        if a == b:
            raise MalformedInput(f"loop at vertex {a}")
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    faces = []

    def grow(clique: Simplex, candidates: List[int]) -> None:
        faces.append(clique)
        for i, x in enumerate(candidates):
            grow(clique + (x,), [y for y in candidates[i + 1:] if y in adj[x]])

    for v in sorted(adj):
        grow((v,), sorted(y for y in adj[v] if y > v))
    return Complex(faces)
