"""Every finite distributive lattice up to isomorphism, by Birkhoff.

Lattices of size ``n`` are downset lattices of posets, so it suffices to
enumerate posets up to isomorphism.  Each poset is grown from a smaller one
by adding a new maximal element over one of its downsets; since adding an
element never loses a downset, a branch is cut as soon as its downset count
exceeds the size bound.  The one-element lattice (empty poset) is omitted.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from latsep.finite.lattice import FinDLat
from latsep.poset import FinPoset, bits, canonical_form, downset_masks

MAX_SIZE_BOUND = 10
_NAMES = "abcdefghijklmnop"


def _extend(poset: FinPoset, below: int) -> FinPoset:
    n = len(poset)
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[:n, :n] = poset.leq
    leq[n, n] = True
    for i in bits(below):
        leq[i, n] = True
    return FinPoset(tuple(_NAMES[: n + 1]), leq)


def posets_with_few_downsets(max_downsets: int) -> list[FinPoset]:
    """Nonempty posets, up to isomorphism, having at most ``max_downsets`` downsets."""
    level = {canonical_form(FinPoset((), np.zeros((0, 0), dtype=bool))): FinPoset((), np.zeros((0, 0), dtype=bool))}
    found: list[tuple[tuple, FinPoset]] = []
    while level:
        nxt: dict[tuple, FinPoset] = {}
        for poset in level.values():
            for below in downset_masks(poset):
                grown = _extend(poset, below)
                if len(downset_masks(grown)) > max_downsets:
                    continue
                key = canonical_form(grown)
                if key not in nxt:
                    nxt[key] = grown
        found.extend(nxt.items())
        level = nxt
    found.sort(key=lambda kv: (len(downset_masks(kv[1])), kv[0]))
    return [p for _, p in found]


def enumerate_dlats(max_size: int, bound: int = MAX_SIZE_BOUND) -> Iterator[FinDLat]:
    """Yield each distributive lattice with ``2 <= |L| <= max_size`` exactly once.

    Order is by size, then by the canonical form of the join-irreducible
    poset, so repeated runs yield the same sequence.
    """
    if max_size > bound:
        raise ValueError(f"max_size {max_size} exceeds bound {bound}")
    for poset in posets_with_few_downsets(max_size):
        yield FinDLat.of_downsets(poset)
