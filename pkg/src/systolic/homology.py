"""Integer boundary matrices and Smith normal form, enough for H_1."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Tuple

from .core import Complex, boundary
from .errors import CapacityError

MAX_ENTRIES = 5000 * 5000


def boundary_matrix(K: Complex, d: int) -> List[List[int]]:
    """Dense matrix of the boundary map C_d -> C_{d-1}, rows indexed by (d-1)-faces."""
    rows = K.skeleton_faces(d - 1)
    cols = K.skeleton_faces(d)
    index = {r: i for i, r in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i, r in enumerate(boundary(s)):
            M[index[r]][j] = (-1) ** i
    return M


def smith_diagonal(M: List[List[int]], max_entries: int = MAX_ENTRIES) -> List[int]:
    """Nonzero invariant factors of an integer matrix, each dividing the next."""
    m = len(M)
    n = len(M[0]) if m else 0
    if m * n > max_entries:
        raise CapacityError(f"boundary matrix {m}x{n} exceeds bound of {max_entries} entries")
    A = [row[:] for row in M]
    diag = []
    t = 0
    while t < m and t < n:
        # pivot: smallest nonzero magnitude in the trailing block
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                a = row[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        ri, rt = A[i], A[t]
                        for j in range(t, n):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if A[i][t]:
                        dirty = True
            rt = A[t]
            for j in range(t + 1, n):
                if rt[j]:
                    q = rt[j] // p
                    if q:
                        for i in range(t, m):
                            if A[i][t]:
                                A[i][j] -= q * A[i][t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                break
            # a remainder survived: move the smallest one into the pivot slot
            best = None
            for i in range(t, m):
                if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                    best = (abs(A[i][t]), i, t)
            for j in range(t, n):
                if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    # enforce divisibility d_1 | d_2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a:
                    g = gcd(a, b)
                    diag[i], diag[j] = g, a * b // g
                    changed = True
    return sorted(diag)


@dataclass(frozen=True)
class H1Summary:
    trivial: bool
    rank: int
    torsion: Tuple[int, ...]

    def __bool__(self) -> bool:
        return self.trivial

    def to_dict(self) -> Dict:
        return {"h1_trivial": self.trivial, "h1_rank": self.rank, "torsion": list(self.torsion)}


def first_homology(K: Complex, max_entries: int = MAX_ENTRIES) -> H1Summary:
    """Rank and torsion of H_1(K; Z)."""
    edges = len(K.skeleton_faces(1))
    d1 = smith_diagonal(boundary_matrix(K, 1), max_entries) if edges else []
    d2 = smith_diagonal(boundary_matrix(K, 2), max_entries) if K.skeleton_faces(2) else []
    rank = edges - len(d1) - len(d2)
    torsion = tuple(x for x in d2 if x > 1)
    return H1Summary(rank == 0 and not torsion, rank, torsion)


first_homology_trivial = first_homology
