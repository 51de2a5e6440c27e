"""Lattices of symbolic sets: L, DM, BL, OpUp, Up and pH over a fan space."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from latsep.symbolic.space import SpaceSpec, SymSet

VIEW_KINDS = ("L", "DM", "BL", "OpUp", "Up", "pH")
MAX_SHAPE_BOUND = 4
DEFAULT_BOUND = 2


class ViewError(ValueError):
    pass


@dataclass(frozen=True)
class ShapeBound:
    """Fan supports range over subsets of ``{0, ..., k-1}``."""

    k: int = DEFAULT_BOUND

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ViewError(f"shape bound must be >= 1, got {self.k}")


def _bound(bound: ShapeBound | int) -> ShapeBound:
    return bound if isinstance(bound, ShapeBound) else ShapeBound(bound)


@dataclass(frozen=True, eq=False)
class LatticeView:
    space: SpaceSpec
    kind: str
    bound: ShapeBound = ShapeBound()

    def __post_init__(self) -> None:
        if self.kind not in VIEW_KINDS:
            raise ViewError(f"unknown view kind {self.kind!r}")

    def contains(self, s: SymSet) -> bool:
        return is_member(self, s)

    def join(self, sets: Iterable[SymSet]) -> SymSet:
        union = self.space.empty()
        for s in sets:
            union = union | s
        if self.kind == "DM":
            return union.cl2().int1()
        if self.kind in ("BL", "pH"):
            return union.closure().int1()
        return union

    def meet(self, sets: Iterable[SymSet]) -> SymSet:
        out = self.space.full()
        for s in sets:
            out = out & s
        return out

    @property
    def top(self) -> SymSet:
        return self.space.full()

    @property
    def bottom(self) -> SymSet:
        return self.space.empty()

    def shapes(self, bound: ShapeBound | int | None = None) -> list[SymSet]:
        return enumerate_shapes(self.space, bound or self.bound, self.kind)


def _check(view: LatticeView, s: SymSet) -> None:
    if s.space is not view.space:
        raise ViewError("set belongs to a different space")


def is_bl(s: SymSet) -> bool:
    return s.closure().int1() == s


def is_member(view: LatticeView, s: SymSet) -> bool:
    """Decide membership of ``s`` in ``view`` from the defining predicate."""
    _check(view, s)
    kind = view.kind
    if kind == "L":
        return s.is_upset() and s.is_clopen()
    if kind == "DM":
        return s.cl2().int1() == s
    if kind == "BL":
        return is_bl(s)
    if kind == "OpUp":
        return s.is_upset() and s.is_open()
    if kind == "Up":
        return s.is_upset()
    return is_bl(s) and ph_member_test(view, s, view.bound)


def bl_join(view: LatticeView, sets: list[SymSet]) -> SymSet:
    """Join in BL(X): ``int1 cl`` of the union."""
    for s in sets:
        _check(view, s)
        if not is_bl(s):
            raise ViewError(f"not a BL-upset: {s!r}")
    union = view.space.empty()
    for s in sets:
        union = union | s
    return union.closure().int1()


def bl_pseudocomplement(view: LatticeView, u: SymSet) -> SymSet:
    _check(view, u)
    if not is_bl(u):
        raise ViewError(f"not a BL-upset: {u!r}")
    return (~u.closure().down()).closure().int1()


def _require_clopen_upset(s: SymSet) -> None:
    if not (s.is_upset() and s.is_clopen()):
        raise ViewError(f"not a clopen upset: {s!r}")


def rel_annihilator_upset(space: SpaceSpec, a: SymSet, b: SymSet) -> SymSet:
    """The open upset dual to the relative annihilator of ``a`` and ``b``."""
    _require_clopen_upset(a)
    _require_clopen_upset(b)
    return ~(a - b).down()


def ph_generators(space: SpaceSpec, k: SymSet) -> SymSet:
    if not k.is_clopen():
        raise ViewError(f"not clopen: {k!r}")
    return ~k.down()


def ph_member_test(view: LatticeView, s: SymSet, bound: ShapeBound | int) -> bool:
    """``s`` is a finite BL-join of generators built from clopens at ``bound``.

    Joins are monotone, so it is enough to join every generator below ``s``.
    """
    _check(view, s)
    if not is_bl(s):
        return False
    below = [g for g in _generators(view.space, _bound(bound).k) if g <= s]
    union = view.space.empty()
    for g in below:
        union = union | g
    return union.closure().int1() == s


@lru_cache(maxsize=64)
def _generators(space: SpaceSpec, k: int) -> tuple[SymSet, ...]:
    return tuple(dict.fromkeys(~c.down() for c in clopens(space, k)))


def _subsets(k: int) -> list[frozenset[int]]:
    out = []
    for r in range(k + 1):
        out += [frozenset(c) for c in itertools.combinations(range(k), r)]
    return out


def clopens(space: SpaceSpec, k: int) -> Iterator[SymSet]:
    """Every clopen set whose fan supports lie below ``k``."""
    subs = _subsets(k)
    for named in range(space.full_named + 1):
        choices = [[(bool(named >> lim & 1), idx) for idx in subs] for lim in space.limit_idx]
        for parts in itertools.product(*choices):
            yield SymSet(space, named, tuple(parts))


def all_shapes(space: SpaceSpec, k: int) -> Iterator[SymSet]:
    subs = _subsets(k)
    per_fan = [(False, idx) for idx in subs] + [(True, idx) for idx in subs]
    for named in range(space.full_named + 1):
        for parts in itertools.product(per_fan, repeat=len(space.fans)):
            yield SymSet(space, named, tuple(parts))


_SHAPE_CACHE: dict[tuple[int, int, str], list[SymSet]] = {}


def enumerate_shapes(space: SpaceSpec, bound: ShapeBound | int, kind: str) -> list[SymSet]:
    """All ``kind``-members with supports below ``bound.k``, without repeats.

    Order: by named-point mask, then fan parts with finite before cofinite
    and smaller supports first.
    """
    k = _bound(bound).k
    if k > MAX_SHAPE_BOUND:
        raise ViewError(f"shape bound {k} exceeds {MAX_SHAPE_BOUND}")
    key = (id(space), k, kind)
    hit = _SHAPE_CACHE.get(key)
    if hit is not None and hit and hit[0].space is space:
        return hit
    view = LatticeView(space, kind, ShapeBound(k))
    source = clopens(space, k) if kind == "L" else all_shapes(space, k)
    out = [s for s in source if is_member(view, s)]
    _SHAPE_CACHE[key] = out
    return out
