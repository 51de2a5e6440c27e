"""Finite Priestley (Birkhoff) duality.

The dual of a finite distributive lattice is its poset of prime filters with
the discrete topology, so closure and interior are the identity and every
upset is clopen.  Prime filters are found by scanning all upsets of the
lattice for meet-closure and primality, independently of join-irreducibles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from latsep.finite.lattice import FinDLat
from latsep.poset import FinPoset, bits, downset_masks


@dataclass(frozen=True)
class FiniteDual:
    lattice: FinDLat
    space: FinPoset
    filters: tuple[int, ...]  # prime filters as element masks of the lattice
    stone: tuple[int, ...]  # lattice index -> mask of prime filters containing it

    @property
    def full(self) -> int:
        return (1 << len(self.space)) - 1

    def s(self, a: str) -> int:
        return self.stone[self.lattice.idx(a)]

    def down(self, mask: int) -> int:
        return self.space.down_mask(mask)

    def up(self, mask: int) -> int:
        return self.space.up_mask(mask)

    # discrete topology: cl = int = identity
    def int1(self, mask: int) -> int:
        return self.full & ~self.down(self.full & ~mask)

    def cl2(self, mask: int) -> int:
        return self.up(mask)

    def cl1(self, mask: int) -> int:
        return self.down(mask)

    def upsets(self) -> list[int]:
        return [self.full & ~d for d in downset_masks(self.space)]

    def minimal(self) -> int:
        return self.space.minimal_mask()

    def maximal(self) -> int:
        return self.space.maximal_mask()

    def regular_part(self, v: int) -> int:
        """Union of clopen upsets whose down-closure fits inside ``v``."""
        out = 0
        for u in self.upsets():
            if self.down(u) & ~v == 0:
                out |= u
        return out


def _is_prime_filter(lat: FinDLat, m: int) -> bool:
    if m == 0 or m >> lat.bottom & 1:
        return False
    if any(not m >> lat.meet_table[i][j] & 1 for i in bits(m) for j in bits(m)):
        return False
    n = len(lat)
    for i in range(n):
        for j in range(i, n):
            if m >> lat.join_table[i][j] & 1 and not (m >> i & 1 or m >> j & 1):
                return False
    return True


def prime_filters(lat: FinDLat) -> FiniteDual:
    """The prime-filter poset of ``lat`` ordered by inclusion, with the Stone map."""
    full = (1 << len(lat)) - 1
    upsets = [full & ~d for d in downset_masks(lat.carrier)]
    filters = [m for m in upsets if _is_prime_filter(lat, m)]
    filters.sort(key=lambda m: (-bin(m).count("1"), tuple(bits(m))))
    names = []
    for m in filters:
        names.append("x_" + lat.elements[lat.meet_mask(m)])
    leq = np.array([[a & b == a for b in filters] for a in filters], dtype=bool)
    leq = leq.reshape(len(filters), len(filters))
    space = FinPoset(names, leq)
    stone = tuple(sum(1 << k for k, f in enumerate(filters) if f >> i & 1) for i in range(len(lat)))
    return FiniteDual(lat, space, tuple(filters), stone)


def clopen_upset_lattice(space: FinPoset) -> FinDLat:
    """``L(X)`` for a finite poset ``X``: its upsets under inclusion."""
    full = (1 << len(space)) - 1
    ups = sorted((full & ~d for d in downset_masks(space)), key=lambda m: (bin(m).count("1"), tuple(bits(m))))
    names = ["{" + ",".join(space.ids(u)) + "}" for u in ups]
    leq = np.array([[a & b == a for b in ups] for a in ups], dtype=bool).reshape(len(ups), len(ups))
    return FinDLat(FinPoset(names, leq))


def stone_is_isomorphism(dual: FiniteDual) -> bool:
    """Round trip: ``a -> s(a)`` is a bijective order embedding onto ``L(X)``."""
    lat = dual.lattice
    images = dual.stone
    ups = set(dual.upsets())
    if set(images) != ups or len(set(images)) != len(lat):
        return False
    return all((images[i] & images[j] == images[i]) == lat.leq_i(i, j)
               for i in range(len(lat)) for j in range(len(lat)))
