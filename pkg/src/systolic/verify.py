"""Combinatorial curvature checks: full cycles, systole, (local) k-largeness,
systolicity, and 3-convexity / convexity of subcomplexes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional

from .core import (
    Complex,
    Simplex,
    SubcomplexHandle,
    Verdict,
    connected_components,
    link,
    link_faces,
    star,
)
from .homology import H1Summary, first_homology

SYSTOLE_SEARCH_BOUND = 7


def unfilled_triangles(K: Complex) -> List[List[int]]:
    """Length-3 full cycles: 3-cliques of the 1-skeleton with no 2-face."""
    out = []
    for a, b in K.skeleton_faces(1):
        for c in sorted(K.adjacency[a] & K.adjacency[b]):
            if c > b and (a, b, c) not in K.faces:
                out.append([a, b, c])
    return out


def _induced_cycles(K: Complex, min_len: int, max_len: int, first_only: bool = False):
    """Induced cycles with ``min_len <= length <= max_len`` (length >= 4).

    Each cycle is produced once, starting at its smallest vertex and walking
    towards the smaller of that vertex's two cycle neighbours.
    """
    adj = K.adjacency
    found = []
    for s in K.vertices:
        path = [s]
        on_path = {s}

        def extend():
            last = path[-1]
            for x in sorted(adj[last]):
                if x <= s or x in on_path:
                    continue
                # x may touch only `last` and, when it closes the cycle, `s`
                if any(x in adj[p] for p in path[1:-1]):
                    continue
                if s in adj[x] and len(path) >= 2:
                    if len(path) + 1 >= max(min_len, 4) and path[1] < x:
                        found.append(path + [x])
                        if first_only:
                            return True
                    continue
                if len(path) + 1 < max_len:
                    path.append(x)
                    on_path.add(x)
                    if extend():
                        return True
                    path.pop()
                    on_path.discard(x)
            return False

        if extend() and first_only:
            return found
    return found


def full_cycles_shorter_than(K: Complex, bound: int) -> List[List[int]]:
    """Induced cycles of length 4 .. bound-1, sorted by (length, vertices)."""
    if bound < 4:
        raise ValueError("bound must be at least 4")
    cycles = _induced_cycles(K, 4, bound - 1)
    return sorted(cycles, key=lambda c: (len(c), c))


def systole(K: Complex, bound: Optional[int] = None) -> float:
    """Length of the shortest full cycle, ``math.inf`` if there is none.

    With a ``bound`` only cycles shorter than it are searched, and ``math.inf``
    then reads as "at least bound".
    """
    if unfilled_triangles(K):
        return 3
    limit = K.vertex_count if bound is None else min(bound - 1, K.vertex_count)
    for length in range(4, limit + 1):
        if _induced_cycles(K, length, length, first_only=True):
            return length
    return math.inf


def _shortest_full_cycle(K: Complex, bound: int) -> Optional[List[int]]:
    tri = unfilled_triangles(K)
    if tri:
        return tri[0]
    for length in range(4, min(bound - 1, K.vertex_count) + 1):
        hit = _induced_cycles(K, length, length, first_only=True)
        if hit:
            return hit[0]
    return None


@dataclass
class LargenessReport:
    k: int
    verdict: bool
    witness_cycle: Optional[List[int]] = None
    witness_location: Optional[List[int]] = None
    diagnostics: Dict[str, object] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> Dict:
        return {
            "verdict": self.verdict,
            "k": self.k,
            "witness_cycle": self.witness_cycle,
            "witness_location": self.witness_location,
            "diagnostics": dict(sorted(self.diagnostics.items())),
        }


def is_k_large(K: Complex, k: int) -> LargenessReport:
    """sys(K) >= k and sys(Lk(s, K)) >= k for every face s.

    On failure the witness cycle is in the labels of K; the location is the
    face whose link fails, or ``[]`` for K itself.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    cyc = _shortest_full_cycle(K, k)
    if cyc is not None:
        return LargenessReport(k, False, cyc, [])
    for s in K:
        L, labels = link(K, s)
        cyc = _shortest_full_cycle(L, k)
        if cyc is not None:
            return LargenessReport(k, False, [labels[i] for i in cyc], list(s))
    return LargenessReport(k, True)


def _links_k_large(K: Complex, k: int) -> LargenessReport:
    for s in K:
        L, labels = link(K, s)
        rep = is_k_large(L, k)
        if not rep:
            loc = list(s)
            return LargenessReport(k, False, [labels[i] for i in rep.witness_cycle], loc)
    return LargenessReport(k, True)


def is_locally_k_large(K: Complex, k: int, cross_check: bool = True) -> LargenessReport:
    """Every closed star is k-large.

    The link-based reading (every link is k-large) is evaluated alongside;
    if the two disagree the report records it under ``diagnostics``.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    report = None
    for s in K:
        St = star(K, s).complex()
        rep = is_k_large(St, k)
        if not rep:
            report = LargenessReport(k, False, rep.witness_cycle, list(s))
            report.diagnostics["failing_star_location"] = rep.witness_location
            break
    if report is None:
        report = LargenessReport(k, True)
    if cross_check:
        alt = _links_k_large(K, k)
        report.diagnostics["link_check"] = alt.verdict
        if alt.verdict != report.verdict:
            report.diagnostics["disagreement"] = True
            report.diagnostics["link_witness"] = {
                "cycle": alt.witness_cycle, "location": alt.witness_location}
    return report


@dataclass
class SystolicReport:
    connected: bool
    locally_6_large: LargenessReport
    h1: H1Summary
    components: List[List[int]] = field(default_factory=list)

    @property
    def h1_trivial(self) -> bool:
        return self.h1.trivial

    @property
    def verdict(self) -> bool:
        return self.connected and self.locally_6_large.verdict and self.h1.trivial

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> Dict:
        lk = self.locally_6_large
        return {
            "verdict": self.verdict,
            "k": lk.k,
            "connected": self.connected,
            "locally_large": lk.verdict,
            "simple_connectivity": "h1-proxy",
            "witness_cycle": lk.witness_cycle,
            "witness_location": lk.witness_location,
            "witness_components": None if self.connected else [c[:1] for c in self.components[:2]],
            "h1_rank": self.h1.rank,
            "torsion": list(self.h1.torsion),
            "diagnostics": dict(sorted(lk.diagnostics.items())),
        }


def is_systolic(K: Complex, k: int = 6) -> SystolicReport:
    """Connected, H_1-trivial (proxy for simply connected) and locally k-large."""
    comps = connected_components(K)
    return SystolicReport(
        connected=len(comps) == 1,
        locally_6_large=is_locally_k_large(K, k),
        h1=first_homology(K),
        components=comps,
    )


def _as_faces(Q) -> frozenset:
    return Q.face_set if isinstance(Q, SubcomplexHandle) else frozenset(map(tuple, Q))


def three_convex_faces(K: Complex, Q_faces) -> Verdict:
    """3-convexity of a face subset of K (both in the same vertex labels)."""
    Q_faces = frozenset(Q_faces)
    qv = {x for f in Q_faces for x in f}
    for f in K.faces:
        if qv.issuperset(f) and f not in Q_faces:
            return Verdict(False, witness=list(f), reason="not full")
    for v1 in K.vertices:
        if v1 in qv:
            continue
        ends = sorted(K.adjacency[v1] & qv)
        for v0, v2 in combinations(ends, 2):
            if tuple(sorted((v0, v1, v2))) not in K.faces:
                return Verdict(False, witness=[v0, v1, v2], reason="full 2-path leaves Q")
    return Verdict(True)


def is_3_convex(K: Complex, Q) -> Verdict:
    res = three_convex_faces(K, _as_faces(Q))
    if isinstance(Q, SubcomplexHandle):
        Q.is_3_convex = res.ok
        Q.is_full = res.reason != "not full"
    return res


def is_convex(K: Complex, Q) -> Verdict:
    """Connected and locally 3-convex (links in Q are 3-convex in links in K)."""
    faces = _as_faces(Q)
    if not faces:
        return Verdict(False, reason="empty")
    QC = Complex(faces)
    if len(connected_components(QC)) != 1:
        res = Verdict(False, witness=[c[0] for c in connected_components(QC)[:2]],
                      reason="disconnected")
    else:
        res = Verdict(True)
        for s in QC:
            lq = link_faces(QC, s)
            lk = Complex(link_faces(K, s))
            sub = three_convex_faces(lk, lq)
            if not sub:
                res = Verdict(False, witness={"simplex": list(s), "link_witness": sub.witness},
                              reason=f"link not 3-convex: {sub.reason}")
                break
    if isinstance(Q, SubcomplexHandle):
        Q.is_convex = res.ok
    return res


__all__ = [
    "LargenessReport",
    "SystolicReport",
    "full_cycles_shorter_than",
    "systole",
    "is_k_large",
    "is_locally_k_large",
    "is_systolic",
    "is_3_convex",
    "is_convex",
    "three_convex_faces",
    "unfilled_triangles",
    "first_homology",
]
