"""Concrete oracle for the symbolic set algebra.

Each fan is cut to members ``0..N-1`` plus one ``far`` point that stands for
every index ``>= N``.  A symbolic set whose supports stay below ``N`` is
represented exactly: the far point is in the set iff the fan part is
cofinite.  Topology is given by explicit neighbourhood bases and the order by
an explicit relation matrix, so none of the symbolic formulas are reused.
"""

from __future__ import annotations

import numpy as np

from latsep.symbolic.space import SpaceSpec, SymSet

TRUNCATION = 12


class Truncation:
    def __init__(self, space: SpaceSpec, size: int = TRUNCATION):
        self.space = space
        self.size = size
        pts: list[tuple] = [("n", i) for i in range(len(space.named))]
        for j in range(len(space.fans)):
            pts += [("f", j, k) for k in range(size)] + [("far", j)]
        self.points = pts
        self.pos = {p: i for i, p in enumerate(pts)}
        m = len(pts)
        rel = np.zeros((m, m), dtype=bool)
        for a, p in enumerate(pts):
            for b, q in enumerate(pts):
                rel[a, b] = self._le(p, q)
        self.rel = rel
        # neighbourhood bases: a list of point-index sets for each point
        self.bases: list[list[frozenset[int]]] = []
        for p in pts:
            if p[0] == "n" and space.limit_idx.count(p[1]):
                fans = [j for j, lim in enumerate(space.limit_idx) if lim == p[1]]
                nbhds = []
                for start in range(size + 1):
                    tail = {self.pos[("f", j, k)] for j in fans for k in range(start, size)}
                    tail |= {self.pos[("far", j)] for j in fans}
                    nbhds.append(frozenset(tail | {self.pos[p]}))
                self.bases.append(nbhds)
            else:
                self.bases.append([frozenset({self.pos[p]})])

    def _le(self, p: tuple, q: tuple) -> bool:
        sp = self.space
        member = lambda x: x[0] in ("f", "far")
        if not member(p) and not member(q):
            return bool(sp.leq[p[1], q[1]])
        if not member(p):
            return sp.named[p[1]] in sp.fans[q[1]].below
        if not member(q):
            return sp.named[q[1]] in sp.fans[p[1]].above
        return p == q

    # conversion ----------------------------------------------------------

    def encode(self, s: SymSet) -> np.ndarray:
        out = np.zeros(len(self.points), dtype=bool)
        for i, p in enumerate(self.points):
            if p[0] == "far":
                out[i] = s.fans[p[1]][0]
            else:
                out[i] = s.contains(p)
        return out

    def decode(self, v: np.ndarray) -> SymSet:
        sp = self.space
        named = sum(1 << i for i in range(len(sp.named)) if v[self.pos[("n", i)]])
        fans = []
        for j in range(len(sp.fans)):
            inside = {k for k in range(self.size) if v[self.pos[("f", j, k)]]}
            if v[self.pos[("far", j)]]:
                fans.append((True, frozenset(set(range(self.size)) - inside)))
            else:
                fans.append((False, frozenset(inside)))
        return SymSet(sp, named, tuple(fans))

    # operators -------------------------------------------------------------

    def closure(self, v: np.ndarray) -> np.ndarray:
        return np.array([all(v[list(n)].any() for n in basis) for basis in self.bases])

    def interior(self, v: np.ndarray) -> np.ndarray:
        return np.array([any(v[list(n)].all() for n in basis) for basis in self.bases])

    def down(self, v: np.ndarray) -> np.ndarray:
        return (self.rel & v[None, :]).any(axis=1)

    def up(self, v: np.ndarray) -> np.ndarray:
        return (self.rel.T & v[None, :]).any(axis=1)

    def cl1(self, v: np.ndarray) -> np.ndarray:
        c = self.closure(v)
        return np.array([(self.rel[a] & c).any() for a in range(len(self.points))])

    def int1(self, v: np.ndarray) -> np.ndarray:
        i = self.interior(v)
        return np.array([not (self.rel[a] & ~i).any() for a in range(len(self.points))])

    def apply(self, op: str, s: SymSet) -> SymSet:
        return self.decode(getattr(self, op)(self.encode(s)))
