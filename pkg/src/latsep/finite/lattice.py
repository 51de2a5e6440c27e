"""Finite bounded distributive lattices with cached meet/join tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from latsep.poset import FinPoset, PosetError, Violation, bits, canonical_form, downset_masks


class LatticeError(ValueError):
    """The carrier is not a bounded distributive lattice."""

    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


def _tables(poset: FinPoset) -> tuple[list[list[int]], list[list[int]]] | Violation:
    n = len(poset)
    up, down = poset.up_masks, poset.down_masks
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            ub = up[i] & up[j]
            least = [k for k in bits(ub) if up[k] & ub == ub]
            if len(least) != 1:
                return Violation("join", (poset.elements[i], poset.elements[j]))
            lb = down[i] & down[j]
            greatest = [k for k in bits(lb) if down[k] & lb == lb]
            if len(greatest) != 1:
                return Violation("meet", (poset.elements[i], poset.elements[j]))
            join[i][j] = join[j][i] = least[0]
            meet[i][j] = meet[j][i] = greatest[0]
    return join, meet


def validate_dlat(poset: FinPoset) -> Violation | None:
    """``None`` when ``poset`` is a bounded distributive lattice.

    Otherwise the failing property (``bounded``, ``join``, ``meet`` or
    ``distributivity``) with the offending elements.
    """
    n = len(poset)
    if n == 0:
        return Violation("bounded", ())
    full = (1 << n) - 1
    if not any(poset.up_masks[i] == full for i in range(n)):
        return Violation("bounded", ("bottom",))
    if not any(poset.down_masks[i] == full for i in range(n)):
        return Violation("bounded", ("top",))
    tables = _tables(poset)
    if isinstance(tables, Violation):
        return tables
    join, meet = tables
    for a, b, c in itertools.product(range(n), repeat=3):
        if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
            return Violation("distributivity", tuple(poset.elements[x] for x in (a, b, c)))
    return None


class FinDLat:
    """A finite bounded distributive lattice.

    Elements are addressed by id in the public API; ``meet``/``join`` tables
    and the bitmask helpers work on indices.
    """

    def __init__(self, carrier: FinPoset):
        violation = validate_dlat(carrier)
        if violation is not None:
            raise LatticeError(violation)
        self.carrier = carrier
        self.join_table, self.meet_table = _tables(carrier)
        n = len(carrier)
        full = (1 << n) - 1
        self.bottom = next(i for i in range(n) if carrier.up_masks[i] == full)
        self.top = next(i for i in range(n) if carrier.down_masks[i] == full)

    @classmethod
    def from_pairs(cls, elements: Sequence[str], pairs: Iterable[tuple[str, str]]) -> "FinDLat":
        return cls(FinPoset.from_pairs(elements, pairs))

    @classmethod
    def from_json(cls, data: dict) -> "FinDLat":
        return cls(FinPoset.from_json(data))

    def to_json(self) -> dict:
        return self.carrier.to_json()

    @classmethod
    def of_downsets(cls, poset: FinPoset) -> "FinDLat":
        """Birkhoff: the lattice of downsets of ``poset`` under inclusion."""
        masks = downset_masks(poset)
        names = [_downset_name(poset, m) for m in masks]
        leq = np.array([[a & b == a for b in masks] for a in masks], dtype=bool)
        return cls(FinPoset(names, leq))

    @classmethod
    def chain(cls, n: int) -> "FinDLat":
        """The ``n``-element chain ``0 < c1 < ... < 1`` (``n >= 1``)."""
        if n == 1:
            return cls(FinPoset(("0",), np.ones((1, 1), dtype=bool)))
        names = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
        return cls(FinPoset(names, np.triu(np.ones((n, n), dtype=bool))))

    @classmethod
    def boolean(cls, k: int) -> "FinDLat":
        """The Boolean lattice ``2^k`` on subsets of ``{a, b, c, ...}``."""
        atoms = "abcdefgh"[:k]
        masks = list(range(1 << k))
        names = ["0" if m == 0 else "".join(atoms[i] for i in bits(m)) for m in masks]
        names[-1] = "1" if k else names[-1]
        leq = np.array([[a & b == a for b in masks] for a in masks], dtype=bool)
        return cls(FinPoset(names, leq))

    def __len__(self) -> int:
        return len(self.carrier)

    def __repr__(self) -> str:
        return f"FinDLat({list(self.elements)})"

    @property
    def elements(self) -> tuple[str, ...]:
        return self.carrier.elements

    @property
    def zero(self) -> str:
        return self.elements[self.bottom]

    @property
    def one(self) -> str:
        return self.elements[self.top]

    def idx(self, a: str) -> int:
        try:
            return self.carrier.index[a]
        except KeyError:
            raise PosetError(f"unknown element id {a!r}") from None

    def le(self, a: str, b: str) -> bool:
        return self.carrier.le(a, b)

    def meet(self, a: str, b: str) -> str:
        return self.elements[self.meet_table[self.idx(a)][self.idx(b)]]

    def join(self, a: str, b: str) -> str:
        return self.elements[self.join_table[self.idx(a)][self.idx(b)]]

    def leq_i(self, i: int, j: int) -> bool:
        return bool(self.carrier.up_masks[i] >> j & 1)

    def join_mask(self, mask: int) -> int:
        out = self.bottom
        for i in bits(mask):
            out = self.join_table[out][i]
        return out

    def meet_mask(self, mask: int) -> int:
        out = self.top
        for i in bits(mask):
            out = self.meet_table[out][i]
        return out

    def join_irreducibles(self) -> list[int]:
        n = len(self)
        out = []
        for i in range(n):
            if i == self.bottom:
                continue
            below = self.carrier.down_masks[i] & ~(1 << i)
            if self.join_mask(below) != i:
                out.append(i)
        return out

    def join_irreducible_poset(self) -> FinPoset:
        ji = self.join_irreducibles()
        leq = np.array([[self.leq_i(a, b) for b in ji] for a in ji], dtype=bool).reshape(len(ji), len(ji))
        return FinPoset([self.elements[i] for i in ji], leq)

    def canonical_form(self) -> tuple:
        return canonical_form(self.join_irreducible_poset())

    def complement(self, i: int) -> int | None:
        for c in range(len(self)):
            if self.meet_table[i][c] == self.bottom and self.join_table[i][c] == self.top:
                return c
        return None

    def sub(self, ids: Iterable[str]) -> "FinDLat":
        """The induced sub-order on ``ids``, revalidated as a lattice."""
        keep = [self.idx(e) for e in ids]
        keep.sort()
        leq = np.array([[self.leq_i(a, b) for b in keep] for a in keep], dtype=bool).reshape(len(keep), len(keep))
        return FinDLat(FinPoset([self.elements[i] for i in keep], leq))


def _downset_name(poset: FinPoset, mask: int) -> str:
    if mask == 0:
        return "0"
    return "+".join(poset.ids(poset.maximal_mask(mask)))


def is_isomorphic(a: FinDLat, b: FinDLat) -> bool:
    return len(a) == len(b) and a.canonical_form() == b.canonical_form()


@dataclass(frozen=True)
class IdealOrFilter:
    kind: str  # "ideal" | "filter"
    members: frozenset[str]

    def is_valid(self, lat: FinDLat) -> bool:
        if not self.members:
            return False
        m = lat.carrier.mask(self.members)
        if self.kind == "ideal":
            closed = lat.carrier.down_mask(m) == m
            op = lat.join_table
        else:
            closed = lat.carrier.up_mask(m) == m
            op = lat.meet_table
        return closed and all(m >> op[i][j] & 1 for i in bits(m) for j in bits(m))


@dataclass(frozen=True)
class SublatticePair:
    ambient: FinDLat
    sub: frozenset[str]

    def __post_init__(self) -> None:
        lat = self.ambient
        m = lat.carrier.mask(self.sub)
        if not (m >> lat.bottom & 1 and m >> lat.top & 1):
            raise LatticeError(Violation("bounded sublattice", ("0/1 missing",)))
        for i in bits(m):
            for j in bits(m):
                for op, name in ((lat.meet_table, "meet"), (lat.join_table, "join")):
                    if not m >> op[i][j] & 1:
                        raise LatticeError(Violation(f"{name}-closure",
                                                     (lat.elements[i], lat.elements[j])))

    @property
    def lattice(self) -> FinDLat:
        return self.ambient.sub(self.sub)


def bounded_sublattices(lat: FinDLat) -> list[frozenset[str]]:
    """Every bounded sublattice of ``lat`` (brute force over subsets)."""
    n = len(lat)
    ends = 1 << lat.bottom | 1 << lat.top
    middle = [i for i in range(n) if not ends >> i & 1]
    found = []
    for r in range(len(middle) + 1):
        for combo in itertools.combinations(middle, r):
            m = ends | sum(1 << i for i in combo)
            if all(m >> lat.meet_table[i][j] & 1 and m >> lat.join_table[i][j] & 1
                   for i in bits(m) for j in bits(m)):
                found.append(frozenset(lat.carrier.ids(m)))
    return found
