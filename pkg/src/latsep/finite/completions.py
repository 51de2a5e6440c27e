"""The five completions of a finite distributive lattice, built from their
defining constructions (normal ideals, D-ideals, ideals, upsets of the dual,
and the sublattice of D-ideals generated by relative annihilators).

For finite input every one of them is isomorphic to the input; the point of
building them is that the isomorphism is then a checkable fact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from latsep.finite.axioms import (Admissibility, annihilator_mask, is_d_ideal_mask,
                                  is_ideal_mask, is_normal_mask)
from latsep.finite.duality import prime_filters
from latsep.finite.lattice import FinDLat, is_isomorphic
from latsep.poset import FinPoset, bits, downset_masks

KINDS = ("dm", "bl", "ideal", "canonical", "ph")
BL_SIZE_BOUND = 12


@dataclass(frozen=True)
class Completion:
    kind: str
    lattice: FinDLat
    members: tuple[int, ...]  # each completion element as a mask over its carrier
    embedding: dict[str, str]  # source element -> completion element

    def embedding_is_isomorphism(self, source: FinDLat) -> bool:
        e = self.embedding
        if len(set(e.values())) != len(source) or len(self.lattice) != len(source):
            return False
        return all(source.le(a, b) == self.lattice.le(e[a], e[b])
                   for a in source.elements for b in source.elements)


def _build(kind: str, source: FinDLat, carrier: FinPoset, masks: list[int],
           embed: dict[str, int]) -> Completion:
    masks = sorted(set(masks), key=lambda m: (bin(m).count("1"), tuple(bits(m))))
    names = ["{" + ",".join(carrier.ids(m)) + "}" for m in masks]
    leq = np.array([[a & b == a for b in masks] for a in masks], dtype=bool).reshape(len(masks), len(masks))
    lat = FinDLat(FinPoset(names, leq))
    pos = {m: i for i, m in enumerate(masks)}
    embedding = {a: names[pos[m]] for a, m in embed.items()}
    return Completion(kind, lat, tuple(masks), embedding)


def _downsets(lat: FinDLat) -> list[int]:
    return downset_masks(lat.carrier)


def _principal(lat: FinDLat) -> dict[str, int]:
    return {a: lat.carrier.down_masks[lat.idx(a)] for a in lat.elements}


def normal_ideals(lat: FinDLat) -> list[int]:
    return [m for m in _downsets(lat) if is_ideal_mask(lat, m) and is_normal_mask(lat, m)]


def ideals(lat: FinDLat) -> list[int]:
    return [m for m in _downsets(lat) if is_ideal_mask(lat, m)]


def d_ideals(lat: FinDLat) -> list[int]:
    if len(lat) > BL_SIZE_BOUND:
        raise ValueError(f"D-ideal scan is bounded to lattices of size {BL_SIZE_BOUND}")
    adm = Admissibility(lat)
    return [m for m in _downsets(lat) if is_d_ideal_mask(lat, m, adm)]


def _d_ideal_join(d_ideals_list: list[int], a: int, b: int) -> int:
    """Least D-ideal above both: intersection of all D-ideals containing a | b."""
    out = -1
    for d in d_ideals_list:
        if (a | b) & ~d == 0:
            out = d if out == -1 else out & d
    return out


def ph_members(lat: FinDLat) -> list[int]:
    """Sublattice of the D-ideals generated by the relative annihilators."""
    dl = d_ideals(lat)
    n = len(lat)
    gens = {annihilator_mask(lat, a, b) for a in range(n) for b in range(n)}
    gens |= {min(dl, key=lambda m: bin(m).count("1")), max(dl, key=lambda m: bin(m).count("1"))}
    current = set(gens)
    while True:
        fresh = set()
        items = list(current)
        for x in items:
            for y in items:
                for z in (x & y, _d_ideal_join(dl, x, y)):
                    if z not in current:
                        fresh.add(z)
        if not fresh:
            return sorted(current)
        current |= fresh


def completion(lat: FinDLat, which: str) -> Completion:
    """Build the requested completion of ``lat`` together with its embedding."""
    if which == "dm":
        return _build(which, lat, lat.carrier, normal_ideals(lat), _principal(lat))
    if which == "bl":
        return _build(which, lat, lat.carrier, d_ideals(lat), _principal(lat))
    if which == "ideal":
        return _build(which, lat, lat.carrier, ideals(lat), _principal(lat))
    if which == "ph":
        return _build(which, lat, lat.carrier, ph_members(lat), _principal(lat))
    if which == "canonical":
        dual = prime_filters(lat)
        ups = dual.upsets()
        embed = {a: dual.stone[lat.idx(a)] for a in lat.elements}
        return _build(which, lat, dual.space, ups, embed)
    raise ValueError(f"unknown completion {which!r}")


def collapses(lat: FinDLat, which: str) -> bool:
    """The completion is isomorphic to ``lat`` via its own embedding."""
    comp = completion(lat, which)
    return comp.embedding_is_isomorphism(lat) and is_isomorphic(comp.lattice, lat)
