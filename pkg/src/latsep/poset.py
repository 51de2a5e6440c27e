"""Finite posets and the order-combinatorial primitives shared by both engines.

A :class:`FinPoset` keeps two views of its order: a read-only boolean numpy
matrix (``leq[i, j]`` iff element ``i`` <= element ``j``) and per-element
bitmasks of the up- and down-sets, which is what the hot loops use.  Element
ids are opaque strings; every set-valued output is reported in input order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

DOWNSET_BOUND = 20


class PosetError(ValueError):
    """Raised for malformed order data or violated size bounds."""


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.axiom} violated at {self.witness}"


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def validate(elements: Sequence[str], leq: np.ndarray) -> Violation | None:
    """Return ``None`` if ``leq`` is a partial order on ``elements``.

    Otherwise the first violated axiom, checked in the order reflexivity,
    antisymmetry, transitivity, with a witness tuple of element ids.
    """
    n = len(elements)
    leq = np.asarray(leq, dtype=bool)
    if leq.shape != (n, n):
        raise PosetError(f"leq must be {n}x{n}, got {leq.shape}")
    for i in range(n):
        if not leq[i, i]:
            return Violation("reflexivity", (elements[i],))
    for i in range(n):
        for j in range(i + 1, n):
            if leq[i, j] and leq[j, i]:
                return Violation("antisymmetry", (elements[i], elements[j]))
    for i, j, k in itertools.product(range(n), repeat=3):
        if leq[i, j] and leq[j, k] and not leq[i, k]:
            return Violation("transitivity", (elements[i], elements[j], elements[k]))
    return None


def transitive_closure(leq: np.ndarray) -> np.ndarray:
    closed = np.array(leq, dtype=bool)
    n = closed.shape[0]
    for k in range(n):
        closed |= np.outer(closed[:, k], closed[k, :])
    return closed


class FinPoset:
    """Immutable finite partial order, validated on construction."""

    __slots__ = ("elements", "leq", "index", "up_masks", "down_masks", "_hash")

    def __init__(self, elements: Sequence[str], leq: np.ndarray):
        elements = tuple(str(e) for e in elements)
        if len(set(elements)) != len(elements):
            raise PosetError("duplicate element ids")
        leq = np.array(leq, dtype=bool)
        violation = validate(elements, leq)
        if violation is not None:
            raise PosetError(str(violation))
        leq.flags.writeable = False
        self.elements = elements
        self.leq = leq
        self.index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        self.up_masks = tuple(sum(1 << j for j in range(n) if leq[i, j]) for i in range(n))
        self.down_masks = tuple(sum(1 << j for j in range(n) if leq[j, i]) for i in range(n))
        self._hash = hash((elements, leq.tobytes()))

    @classmethod
    def from_pairs(cls, elements: Sequence[str], pairs: Iterable[tuple[str, str]],
                   close: bool = True) -> "FinPoset":
        """Build from ``(a, b)`` pairs meaning ``a <= b``.

        With ``close`` the reflexive-transitive closure is taken first, so a
        cover relation is enough; without it the pairs must already be a
        partial order.
        """
        elements = tuple(str(e) for e in elements)
        index = {e: i for i, e in enumerate(elements)}
        leq = np.zeros((len(elements), len(elements)), dtype=bool)
        for a, b in pairs:
            try:
                leq[index[str(a)], index[str(b)]] = True
            except KeyError as exc:
                raise PosetError(f"unknown element id {exc.args[0]!r}") from None
        if close:
            np.fill_diagonal(leq, True)
            leq = transitive_closure(leq)
        return cls(elements, leq)

    @classmethod
    def from_json(cls, data: dict) -> "FinPoset":
        try:
            return cls.from_pairs(data["elements"], [tuple(p) for p in data["leq"]])
        except (KeyError, TypeError) as exc:
            raise PosetError(f"bad poset JSON: {exc}") from None

    def to_json(self) -> dict:
        pairs = [[a, b] for a in self.elements for b in self.elements
                 if a != b and self.le(a, b)]
        return {"elements": list(self.elements), "leq": pairs}

    @classmethod
    def chain(cls, n: int, prefix: str = "c") -> "FinPoset":
        return cls(tuple(f"{prefix}{i}" for i in range(n)), np.triu(np.ones((n, n), dtype=bool)))

    @classmethod
    def antichain(cls, n: int, prefix: str = "a") -> "FinPoset":
        return cls(tuple(f"{prefix}{i}" for i in range(n)), np.eye(n, dtype=bool))

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FinPoset) and self.elements == other.elements
                and bool(np.array_equal(self.leq, other.leq)))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FinPoset({list(self.elements)}, covers={self.covers()})"

    def le(self, a: str, b: str) -> bool:
        return bool(self.leq[self.index[a], self.index[b]])

    def dual(self) -> "FinPoset":
        return FinPoset(self.elements, self.leq.T)

    def covers(self) -> list[tuple[str, str]]:
        lt = self.leq & ~np.eye(len(self), dtype=bool)
        between = (lt.astype(np.uint8) @ lt.astype(np.uint8)) > 0
        cov = lt & ~between
        return [(self.elements[i], self.elements[j]) for i, j in zip(*np.nonzero(cov))]

    # set <-> mask conversion; masks are the internal currency

    def mask(self, ids: Iterable[str]) -> int:
        m = 0
        for e in ids:
            try:
                m |= 1 << self.index[e]
            except KeyError:
                raise PosetError(f"unknown element id {e!r}") from None
        return m

    def ids(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in bits(mask))

    def up_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up_masks[i]
        return out

    def down_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.down_masks[i]
        return out

    def is_downset(self, mask: int) -> bool:
        return self.down_mask(mask) == mask

    def is_upset(self, mask: int) -> bool:
        return self.up_mask(mask) == mask

    def minimal_mask(self, within: int | None = None) -> int:
        within = (1 << len(self)) - 1 if within is None else within
        return sum(1 << i for i in bits(within) if self.down_masks[i] & within == 1 << i)

    def maximal_mask(self, within: int | None = None) -> int:
        within = (1 << len(self)) - 1 if within is None else within
        return sum(1 << i for i in bits(within) if self.up_masks[i] & within == 1 << i)

    def linear_extension(self) -> list[int]:
        return sorted(range(len(self)), key=lambda i: (bin(self.down_masks[i]).count("1"), i))


def up_closure(poset: FinPoset, subset: Iterable[str]) -> tuple[str, ...]:
    return poset.ids(poset.up_mask(poset.mask(subset)))


def down_closure(poset: FinPoset, subset: Iterable[str]) -> tuple[str, ...]:
    return poset.ids(poset.down_mask(poset.mask(subset)))


def minimals(poset: FinPoset) -> tuple[str, ...]:
    return poset.ids(poset.minimal_mask())


def maximals(poset: FinPoset) -> tuple[str, ...]:
    return poset.ids(poset.maximal_mask())


def downset_masks(poset: FinPoset, bound: int = DOWNSET_BOUND) -> list[int]:
    """All downsets as bitmasks, ordered lexicographically by index tuple."""
    if len(poset) > bound:
        raise PosetError(f"poset has {len(poset)} elements, downset bound is {bound}")
    order = poset.linear_extension()
    strict_below = [poset.down_masks[i] & ~(1 << i) for i in range(len(poset))]
    found: list[int] = []

    def walk(pos: int, current: int) -> None:
        if pos == len(order):
            found.append(current)
            return
        i = order[pos]
        walk(pos + 1, current)
        if strict_below[i] & current == strict_below[i]:
            walk(pos + 1, current | 1 << i)

    walk(0, 0)
    return sorted(found, key=lambda m: tuple(bits(m)))


def enumerate_downsets(poset: FinPoset, bound: int = DOWNSET_BOUND) -> list[tuple[str, ...]]:
    return [poset.ids(m) for m in downset_masks(poset, bound)]


def _refine(poset: FinPoset) -> list[int]:
    """Colour refinement by (colours below, colours above) until stable."""
    n = len(poset)
    colour = [0] * n
    while True:
        sig = [
            (colour[i],
             tuple(sorted(colour[j] for j in bits(poset.down_masks[i]) if j != i)),
             tuple(sorted(colour[j] for j in bits(poset.up_masks[i]) if j != i)))
            for i in range(n)
        ]
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        fresh = [ranks[s] for s in sig]
        if len(set(fresh)) == len(set(colour)):
            return fresh
        colour = fresh


def canonical_form(poset: FinPoset) -> tuple:
    """Isomorphism invariant that is complete: equal iff the posets are isomorphic.

    Elements are first split into refined colour classes; the lexicographically
    least upper-triangle bitstring over all class-respecting orderings wins.
    """
    n = len(poset)
    if n == 0:
        return (0, ())
    colour = _refine(poset)
    classes = [[i for i in range(n) if colour[i] == c] for c in sorted(set(colour))]
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [i for p in perms for i in p]
        word = tuple(int(poset.leq[order[a], order[b]]) for a in range(n) for b in range(n))
        if best is None or word < best:
            best = word
    return (n, tuple(sorted(colour)), best)
