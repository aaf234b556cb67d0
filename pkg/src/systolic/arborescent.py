"""Ball filtrations of locally finite complexes given through finite truncations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .core import Complex, bfs_distances, canonical_key, from_facets
from .errors import CapacityError, GeneratorContractError, SystolicError
from .morse import brute_force_collapsible, certify_collapsible
from .verify import is_systolic

# axial directions of the triangular lattice, counter-clockwise
_DIRECTIONS = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]


def hex_distance(q: int, r: int) -> int:
    return (abs(q) + abs(r) + abs(q + r)) // 2


def hex_ring(k: int) -> List[Tuple[int, int]]:
    """Lattice points at distance k from the origin, counter-clockwise from (k, 0)."""
    if k == 0:
        return [(0, 0)]
    q, r = k, 0
    ring = []
    # walking direction i from corner i moves towards corner i+1
    for dq, dr in _DIRECTIONS[2:] + _DIRECTIONS[:2]:
        for _ in range(k):
            ring.append((q, r))
            q, r = q + dq, r + dr
    return ring


def hex_labels(radius: int) -> Dict[Tuple[int, int], int]:
    """Ring-by-ring labels; a point's label does not depend on ``radius``."""
    labels = {}
    for k in range(radius + 1):
        for p in hex_ring(k):
            labels[p] = len(labels)
    return labels


def hex_disk(radius: int) -> Complex:
    """Flag completion of the triangular lattice within graph distance ``radius``."""
    labels = hex_labels(radius)
    facets = [[i] for i in labels.values()]
    for (q, r), a in labels.items():
        for (dq1, dr1), (dq2, dr2) in zip(_DIRECTIONS, _DIRECTIONS[1:] + _DIRECTIONS[:1]):
            b = labels.get((q + dq1, r + dr1))
            c = labels.get((q + dq2, r + dr2))
            if b is not None:
                facets.append([a, b])
            if b is not None and c is not None:
                facets.append([a, b, c])
    return from_facets(facets)


@dataclass
class ComplexGenerator:
    """Truncations of a locally finite complex indexed by radius."""

    produce_fn: Callable[[int], Complex]
    base: int = 0
    name: str = "generator"
    _cache: Dict[int, Complex] = field(default_factory=dict, repr=False)

    def produce(self, radius: int) -> Tuple[Complex, int]:
        if radius not in self._cache:
            self._cache[radius] = self.produce_fn(radius)
        return self._cache[radius], self.base


def hex_plane_generator() -> ComplexGenerator:
    return ComplexGenerator(hex_disk, base=0, name="hex-plane")


def facet_stream_generator(facet_lists: Sequence[Sequence[Sequence[int]]], base: int = 0,
                           name: str = "facet-stream") -> ComplexGenerator:
    """Wrap user truncations: entry i is the radius-(i+1) complex.

    Radius 0 is the base vertex alone; radii beyond the list repeat the last
    entry. Inclusion between consecutive entries is checked on demand.
    """
    complexes = [from_facets(f) for f in facet_lists]

    def produce(radius: int) -> Complex:
        if radius == 0 or not complexes:
            return from_facets([[base]])
        idx = min(radius, len(complexes)) - 1
        if idx > 0:
            prev, cur = complexes[idx - 1], complexes[idx]
            missing = prev.faces - cur.faces
            if missing:
                bad = min(missing, key=canonical_key)
                raise GeneratorContractError(
                    f"face {list(bad)} of radius {idx} is missing at radius {idx + 1}")
        return complexes[idx]

    return ComplexGenerator(produce, base=base, name=name)


def facet_files_generator(paths: Sequence[str], base: int = 0) -> ComplexGenerator:
    from .formats import read_facets

    return facet_stream_generator([read_facets(p) for p in paths], base=base,
                                  name="facet-files")


@dataclass
class LevelReport:
    radius: int
    f_vector: Tuple[int, ...]
    monotone: bool
    is_ball: bool
    systolic: bool
    pipeline_collapsible: bool
    oracle_collapsible: Optional[bool]
    error: Optional[str] = None

    @property
    def collapsible(self) -> bool:
        return self.pipeline_collapsible or bool(self.oracle_collapsible)

    def to_dict(self) -> Dict:
        return {
            "radius": self.radius,
            "f_vector": list(self.f_vector),
            "monotone": self.monotone,
            "is_ball": self.is_ball,
            "systolic": self.systolic,
            "pipeline_collapsible": self.pipeline_collapsible,
            "oracle_collapsible": self.oracle_collapsible,
            "collapsible": self.collapsible,
            "error": self.error,
        }


@dataclass
class FiltrationReport:
    generator: str
    radii: List[int]
    levels: List[LevelReport]
    hypothesis: str = "systolic verified per level"

    @property
    def verdict(self) -> bool:
        return all(lv.collapsible and lv.monotone for lv in self.levels)

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> Dict:
        return {
            "generator": self.generator,
            "hypothesis": self.hypothesis,
            "radii": list(self.radii),
            "verdict": self.verdict,
            "levels": [lv.to_dict() for lv in self.levels],
        }


def check_level(gen: ComplexGenerator, n: int, oracle_bound: int = 60) -> LevelReport:
    """Verify one truncation: inclusion of the previous level, ball shape,
    systolicity and collapsibility."""
    K, base = gen.produce(n)
    prev, _ = gen.produce(n - 1)
    missing = prev.faces - K.faces
    if missing:
        bad = min(missing, key=canonical_key)
        raise GeneratorContractError(f"face {list(bad)} of radius {n - 1} missing at radius {n}")
    dist = bfs_distances(K, [base])
    is_ball = prev == K.induced(v for v, d in dist.items() if d <= n - 1)
    systolic = is_systolic(K).verdict
    error = None
    try:
        cert = certify_collapsible(K, base, hypothesis="verified" if systolic else "asserted")
        pipeline = cert.acyclicity.verdict
    except SystolicError as exc:
        pipeline = False
        error = f"{type(exc).__name__}: {exc}"
    try:
        oracle = brute_force_collapsible(K, oracle_bound)
    except CapacityError:
        oracle = None
    return LevelReport(n, K.f_vector, True, is_ball, systolic, pipeline, oracle, error)


def ball_filtration_check(gen: ComplexGenerator, N: int, cat0_asserted: bool = False,
                          oracle_bound: int = 60) -> FiltrationReport:
    """Run :func:`check_level` for radii 1..N and collect the verdicts."""
    levels = [check_level(gen, n, oracle_bound) for n in range(1, N + 1)]
    hyp = "CAT(0) hypothesis asserted by caller" if cat0_asserted else "systolic verified per level"
    return FiltrationReport(gen.name, list(range(1, N + 1)), levels, hyp)
