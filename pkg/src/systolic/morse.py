"""Gradient matching along projection rays towards a base vertex, its
certification as an acyclic matching, and the collapse sequence it encodes."""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .core import (
    Complex,
    Simplex,
    Verdict,
    boundary,
    elementary_collapse,
    join_simplex,
)
from .errors import (
    CapacityError,
    InternalConsistencyError,
    InvalidCollapse,
    LemmaViolation,
    MatchingConflict,
    SchedulingError,
    SingleCriticalCellViolation,
    UndefinedPointer,
    Unreachable,
)
from .projection import BallTower, ball_tower, elementary_projection

FIRST_SPHERE = "first_sphere_case"
SPHERE = "sphere_case"
MIXED = "mixed_case"

Pair = Tuple[Simplex, Simplex]


@dataclass(frozen=True)
class PointerAssignment:
    simplex: Simplex
    pointer: int
    case_tag: str


def _base_vertex(tower: BallTower) -> int:
    if len(tower.base.vertex_set) != 1:
        raise ValueError("pointer function needs a single-vertex base")
    return next(iter(tower.base.vertex_set))


def pointer_function(K: Complex, tower: BallTower, s: Sequence[int]) -> PointerAssignment:
    """Vertex that ``s`` is matched towards.

    The part of ``s`` on its outermost level is projected one level inward;
    the pointer is the smallest vertex of that projection. For a simplex
    lying on a single level this is the second entry of its projection ray.
    """
    s = tuple(s)
    v = _base_vertex(tower)
    if v in s:
        raise UndefinedPointer(f"{list(s)} contains the base vertex {v}")
    dist = tower.vertex_distance
    if any(x not in dist for x in s):
        raise Unreachable(f"{list(s)} is not connected to the base vertex {v}")
    n = max(dist[x] for x in s)
    if n == 1:
        tag, target = FIRST_SPHERE, (v,)
    else:
        top = tuple(x for x in s if dist[x] == n)
        low = tuple(x for x in s if dist[x] < n)
        target = elementary_projection(K, tower.levels[n - 1], top)
        if not set(low) <= set(target):
            raise LemmaViolation(
                f"lower part {list(low)} of {list(s)} escapes the projection {list(target)}")
        tag = MIXED if low else SPHERE
    w = target[0]
    if w in s:
        raise UndefinedPointer(
            f"{list(s)} already holds its pointer {w}; it is matched from {list(s)} minus {w}")
    if join_simplex(s, w) not in K.faces:
        raise LemmaViolation(f"{list(s)} and pointer {w} do not span a face")
    return PointerAssignment(s, w, tag)


@dataclass
class VectorField:
    pairs: List[Pair]
    critical: List[Simplex]
    base: Optional[int] = None
    hypothesis: str = "asserted"

    def to_dict(self) -> Dict:
        return {
            "pairs": [[list(s), list(t)] for s, t in self.pairs],
            "critical": [list(c) for c in self.critical],
        }


@dataclass
class AcyclicityCertificate:
    verdict: bool
    closed_path: Optional[List[Pair]] = None
    topological_order: Optional[List[Pair]] = None

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> Dict:
        conv = (lambda ps: None if ps is None else [[list(s), list(t)] for s, t in ps])
        return {"acyclic": self.verdict, "closed_path": conv(self.closed_path),
                "topological_order": conv(self.topological_order)}


def validate_vector_field(K: Complex, V: VectorField) -> Verdict:
    owner: Dict[Simplex, Pair] = {}
    for s, t in V.pairs:
        if s not in K.faces or t not in K.faces:
            return Verdict(False, witness=[list(s), list(t)], reason="pair outside complex")
        if len(t) != len(s) + 1 or not set(s) < set(t):
            return Verdict(False, witness=[list(s), list(t)], reason="not a codimension-one pair")
        for f in (s, t):
            if f in owner:
                other = owner[f]
                return Verdict(False, witness=[[list(x) for x in other], [list(s), list(t)]],
                               reason=f"{list(f)} in two pairs")
            owner[f] = (s, t)
    for c in V.critical:
        if c in owner:
            return Verdict(False, witness=list(c), reason="critical simplex also paired")
        if c not in K.faces:
            return Verdict(False, witness=list(c), reason="critical simplex outside complex")
    covered = set(owner) | set(V.critical)
    for f in K:
        if f not in covered:
            return Verdict(False, witness=list(f), reason="face neither paired nor critical")
    return Verdict(True)


def gradient_matching(K: Complex, v: int, tower: Optional[BallTower] = None,
                      hypothesis: str = "asserted") -> VectorField:
    """Match each still-unmatched simplex with its join with the pointer.

    Faces are visited in canonical order; simplices containing ``v`` are only
    ever matched as images. Raises if a join target is already taken or if
    anything other than ``{v}`` is left unmatched.
    """
    if tower is None:
        tower = ball_tower(K, [v], convexity=hypothesis)
    partner: Dict[Simplex, Pair] = {}
    pairs: List[Pair] = []
    dist = tower.vertex_distance
    stray = [(x,) for x in K.vertices if x not in dist]
    if stray:
        raise SingleCriticalCellViolation(
            f"vertices {[x for (x,) in stray]} are not connected to {v}", [(v,)] + stray)
    for s in K:
        if s in partner or v in s:
            continue
        pa = pointer_function(K, tower, s)
        t = join_simplex(s, pa.pointer)
        if t in partner:
            raise MatchingConflict(f"{list(t)} is already matched", partner[t], (s, t))
        if dist[pa.pointer] >= max(dist[x] for x in s):
            raise InternalConsistencyError(f"pointer of {list(s)} does not point inward")
        partner[s] = partner[t] = (s, t)
        pairs.append((s, t))
    critical = [s for s in K if s not in partner]
    V = VectorField(pairs, critical, base=v, hypothesis=hypothesis)
    check = validate_vector_field(K, V)
    if not check:
        raise InternalConsistencyError(f"invalid vector field: {check.reason} {check.witness}")
    if critical != [(v,)]:
        raise SingleCriticalCellViolation(
            f"critical cells {[list(c) for c in critical]} instead of [[{v}]]", critical)
    return V


def _gradient_graph(V: VectorField) -> TopologicalSorter:
    source = {s: i for i, (s, _) in enumerate(V.pairs)}
    ts = TopologicalSorter()
    for i, (s, t) in enumerate(V.pairs):
        ts.add(i)
        for r in boundary(t):
            j = source.get(r)
            if j is not None and r != s:
                ts.add(j, i)
    return ts


def acyclicity(K: Complex, V: VectorField) -> AcyclicityCertificate:
    """Closed-gradient-path detection on the graph of pairs.

    Pair (s, t) points at pair (s', t') when s' != s is a codimension-one
    face of t.
    """
    try:
        order = list(_gradient_graph(V).static_order())
    except CycleError as exc:
        cycle = exc.args[1]
        return AcyclicityCertificate(False, closed_path=[V.pairs[i] for i in cycle])
    return AcyclicityCertificate(True, topological_order=[V.pairs[i] for i in order])


def collapse_sequence(K: Complex, V: VectorField, cert: AcyclicityCertificate) -> List[Pair]:
    """Order the pairs so that each is an elementary collapse when its turn comes.

    The order is replayed against coface counts before being returned.
    """
    if not cert.verdict:
        raise ValueError("matching is not acyclic")
    if len(V.critical) != 1 or len(V.critical[0]) != 1:
        raise ValueError("collapse needs exactly one critical vertex")
    owner = {}
    for i, (s, t) in enumerate(V.pairs):
        owner[s] = owner[t] = i
    ts = TopologicalSorter()
    for i, (s, t) in enumerate(V.pairs):
        ts.add(i)
        for r in boundary(t) + boundary(s):
            j = owner.get(r)
            if j is not None and j != i:
                ts.add(j, i)
    try:
        order = [V.pairs[i] for i in ts.static_order()]
    except CycleError as exc:
        raise SchedulingError(f"collapse dependencies are cyclic: {exc.args[1]}") from None
    _replay_counts(K, order, V.critical[0])
    return order


def _replay_counts(K: Complex, order: List[Pair], final: Simplex) -> None:
    present = set(K.faces)
    cof = {f: len(K.cofacets(f)) for f in K.faces}
    for step, (s, t) in enumerate(order):
        if s not in present or t not in present or cof[t] != 0 or cof[s] != 1:
            raise SchedulingError(f"step {step}: {list(s)} is not free in {list(t)}")
        for f in (t, s):
            present.discard(f)
            for r in boundary(f):
                cof[r] -= 1
    if present != {final}:
        raise SchedulingError(f"replay ends with {len(present)} faces, not {list(final)}")


def replay(K: Complex, sequence: Sequence[Pair]) -> Complex:
    """Apply the collapses one by one with :func:`elementary_collapse`."""
    for s, t in sequence:
        if t not in K.cofacets(s):
            raise SchedulingError(f"{list(t)} is not the coface of {list(s)}")
        try:
            K = elementary_collapse(K, s)
        except InvalidCollapse as exc:
            raise SchedulingError(str(exc)) from None
    return K


def brute_force_collapsible(K: Complex, max_faces: int = 60) -> bool:
    """Exhaustive search over elementary collapse sequences, memoising dead ends."""
    if len(K) > max_faces:
        raise CapacityError(f"{len(K)} faces exceeds the bound of {max_faces}")
    dead = set()

    def moves(faces: FrozenSet[Simplex]):
        cof: Dict[Simplex, List[Simplex]] = {f: [] for f in faces}
        for t in faces:
            for r in boundary(t):
                cof[r].append(t)
        for s in sorted(faces):
            if len(cof[s]) == 1 and not cof[cof[s][0]]:
                yield s, cof[s][0]

    def search(faces: FrozenSet[Simplex]) -> bool:
        if len(faces) == 1:
            return True
        if faces in dead:
            return False
        for s, t in moves(faces):
            if search(faces - {s, t}):
                return True
        dead.add(faces)
        return False

    return bool(K.faces) and search(K.faces)


@dataclass
class MorseCertificate:
    vector_field: VectorField
    acyclicity: AcyclicityCertificate
    sequence: List[Pair] = field(default_factory=list)

    def to_dict(self) -> Dict:
        out = self.vector_field.to_dict()
        out["base"] = self.vector_field.base
        out["acyclic"] = self.acyclicity.verdict
        out["collapse_sequence"] = [[list(s), list(t)] for s, t in self.sequence]
        return out


def certify_collapsible(K: Complex, v: int, hypothesis: str = "asserted") -> MorseCertificate:
    """Matching, acyclicity and checked collapse sequence for base vertex ``v``."""
    V = gradient_matching(K, v, hypothesis=hypothesis)
    cert = acyclicity(K, V)
    if not cert:
        return MorseCertificate(V, cert)
    return MorseCertificate(V, cert, collapse_sequence(K, V, cert))
