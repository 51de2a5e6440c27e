"""Fan spaces and their symbolic subsets.

A fan space has finitely many named points, ordered among themselves, and
finitely many fans.  A fan is a sequence ``f_0, f_1, ...`` of isolated points
converging to a named ``limit``; its members are pairwise incomparable and sit
uniformly above the named points in ``below`` and under those in ``above``.
Every other named point is isolated.

A :class:`SymSet` stores a set of named points as a bitmask and, for each
fan, either a finite index set or the complement of one.  This family is a
Boolean algebra closed under closure, interior, ``down`` and ``up``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Iterator, Sequence

import numpy as np

from latsep.poset import Violation, bits, transitive_closure, validate


class SpaceError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True)
class Fan:
    id: str
    limit: str
    below: frozenset[str] = frozenset()
    above: frozenset[str] = frozenset()

    def to_json(self) -> dict:
        return {"id": self.id, "limit": self.limit,
                "below": sorted(self.below), "above": sorted(self.above)}


# Concrete points: ("n", i) for the i-th named point, ("f", j, k) for member k of fan j.
Point = tuple


@dataclass(frozen=True)
class PointClass:
    """A named point, or the generic member of a fan (``fan`` set)."""

    name: str
    fan: str | None = None

    def __str__(self) -> str:
        return self.name if self.fan is None else f"{self.fan}_n"

    def to_json(self) -> str:
        return str(self)


class SpaceSpec:
    """A finitely presented Priestley space; see the module docstring."""

    def __init__(self, named: Sequence[str], leq: np.ndarray, fans: Sequence[Fan],
                 check: bool = True):
        self.named = tuple(named)
        self.leq = np.array(leq, dtype=bool).reshape(len(self.named), len(self.named))
        self.leq.setflags(write=False)
        self.fans = tuple(fans)
        self.index = {p: i for i, p in enumerate(self.named)}
        self.fan_index = {f.id: j for j, f in enumerate(self.fans)}
        violation = _schema_violation(self)
        if violation is not None:
            raise SpaceError(violation)
        n = len(self.named)
        self.full_named = (1 << n) - 1
        self.up_masks = [sum(1 << j for j in range(n) if self.leq[i, j]) for i in range(n)]
        self.down_masks = [sum(1 << j for j in range(n) if self.leq[j, i]) for i in range(n)]
        self.limit_idx = tuple(self.index[f.limit] for f in self.fans)
        self.below_masks = tuple(self._mask(f.below) for f in self.fans)
        self.above_masks = tuple(self._mask(f.above) for f in self.fans)
        self.limit_mask = sum(1 << i for i in set(self.limit_idx))
        if check:
            violation = validate_space(self)
            if violation is not None:
                raise SpaceError(violation)

    # construction ------------------------------------------------------

    @classmethod
    def build(cls, named: Sequence[str], pairs: Iterable[tuple[str, str]],
              fans: Sequence[Fan] = (), close: bool = True) -> "SpaceSpec":
        """Build from order pairs; ``close`` adds reflexive and transitive pairs first."""
        named = tuple(named)
        index = {p: i for i, p in enumerate(named)}
        leq = np.zeros((len(named), len(named)), dtype=bool)
        for a, b in pairs:
            if a not in index or b not in index:
                raise SpaceError(Violation("schema", (a, b)))
            leq[index[a], index[b]] = True
        if close:
            np.fill_diagonal(leq, True)
            leq = transitive_closure(leq)
        return cls(named, leq, fans)

    @classmethod
    def from_json(cls, data: dict) -> "SpaceSpec":
        try:
            fans = [Fan(f["id"], f["limit"], frozenset(f.get("below", ())), frozenset(f.get("above", ())))
                    for f in data.get("fans", ())]
            return cls.build(data["named"], [tuple(p) for p in data.get("named_leq", ())], fans)
        except (KeyError, TypeError) as exc:
            raise SpaceError(Violation("schema", (repr(exc),))) from None

    def to_json(self) -> dict:
        n = len(self.named)
        return {
            "named": list(self.named),
            "named_leq": [[self.named[i], self.named[j]] for i in range(n) for j in range(n)
                          if i != j and self.leq[i, j]],
            "fans": [f.to_json() for f in self.fans],
        }

    def _mask(self, ids: Iterable[str]) -> int:
        return sum(1 << self.index[p] for p in ids)

    def named_ids(self, mask: int) -> list[str]:
        return [self.named[i] for i in bits(mask)]

    # points ------------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return not self.fans

    def point_classes(self) -> list[PointClass]:
        return [PointClass(p) for p in self.named] + [PointClass(f.id, f.id) for f in self.fans]

    def representative(self, pc: PointClass, index: int = 0) -> Point:
        if pc.fan is None:
            return ("n", self.index[pc.name])
        return ("f", self.fan_index[pc.fan], index)

    def point_name(self, pt: Point) -> str:
        if pt[0] == "n":
            return self.named[pt[1]]
        return f"{self.fans[pt[1]].id}_{pt[2]}"

    def point_le(self, p: Point, q: Point) -> bool:
        if p[0] == "n" and q[0] == "n":
            return bool(self.leq[p[1], q[1]])
        if p[0] == "n":
            return bool(self.below_masks[q[1]] >> p[1] & 1)
        if q[0] == "n":
            return bool(self.above_masks[p[1]] >> q[1] & 1)
        return p == q

    # sets --------------------------------------------------------------

    def empty(self) -> "SymSet":
        return SymSet(self, 0, tuple((False, frozenset()) for _ in self.fans))

    def full(self) -> "SymSet":
        return SymSet(self, self.full_named, tuple((True, frozenset()) for _ in self.fans))

    def point_set(self, pt: Point) -> "SymSet":
        if pt[0] == "n":
            return SymSet(self, 1 << pt[1], self.empty().fans)
        fans = list(self.empty().fans)
        fans[pt[1]] = (False, frozenset({pt[2]}))
        return SymSet(self, 0, tuple(fans))

    def symset(self, named: Iterable[str] = (), fin: dict | None = None,
               cofin: dict | None = None) -> "SymSet":
        """Convenience constructor: ``fin``/``cofin`` map fan ids to index sets."""
        parts = [(False, frozenset())] * len(self.fans)
        for fid, idx in (fin or {}).items():
            parts[self.fan_index[fid]] = (False, frozenset(idx))
        for fid, idx in (cofin or {}).items():
            parts[self.fan_index[fid]] = (True, frozenset(idx))
        return SymSet(self, self._mask(named), tuple(parts))

    def min_set(self) -> "SymSet":
        n = len(self.named)
        covered = 0
        for a in self.above_masks:
            covered |= a
        named = sum(1 << i for i in range(n)
                    if self.down_masks[i] == 1 << i and not covered >> i & 1)
        return SymSet(self, named, tuple((not b, frozenset()) for b in self.below_masks))

    def max_set(self) -> "SymSet":
        n = len(self.named)
        covered = 0
        for b in self.below_masks:
            covered |= b
        named = sum(1 << i for i in range(n)
                    if self.up_masks[i] == 1 << i and not covered >> i & 1)
        return SymSet(self, named, tuple((not a, frozenset()) for a in self.above_masks))

    def __repr__(self) -> str:
        return f"SpaceSpec(named={list(self.named)}, fans={[f.id for f in self.fans]})"


def _points_for_separation(spec: SpaceSpec) -> list[Point]:
    pts: list[Point] = [("n", i) for i in range(len(spec.named))]
    for j in range(len(spec.fans)):
        pts += [("f", j, 0), ("f", j, 1)]
    return pts


def separating_upset(spec: SpaceSpec, p: Point, q: Point) -> "SymSet | None":
    """Least clopen upset containing ``p`` built by forcing; ``None`` if it contains ``q``."""
    u = spec.point_set(p).up()
    while True:
        fans = list(u.fans)
        for j, lim in enumerate(spec.limit_idx):
            if u.named >> lim & 1 and not fans[j][0]:
                skip = frozenset({q[2]}) if q[0] == "f" and q[1] == j else frozenset()
                fans[j] = (True, skip - fans[j][1])
        grown = SymSet(spec, u.named, tuple(fans)).up()
        if grown == u:
            break
        u = grown
    if u.contains(q) or not u.is_clopen():
        return None
    return u


def _schema_violation(spec: SpaceSpec) -> Violation | None:
    named = spec.named
    if len(set(named)) != len(named):
        return Violation("schema", ("duplicate named id",))
    ids = [f.id for f in spec.fans]
    if len(set(ids)) != len(ids) or set(ids) & set(named):
        return Violation("schema", ("duplicate fan id",))
    for f in spec.fans:
        for p in chain([f.limit], f.below, f.above):
            if p not in spec.index:
                return Violation("schema", (f.id, p))
    return None


def validate_space(spec: SpaceSpec) -> Violation | None:
    """Check every fan-space invariant; the first failure names the axiom and points."""
    bad = _schema_violation(spec)
    if bad is not None:
        return bad
    named = spec.named
    leq = spec.leq
    idx = spec.index
    # closedness is checked against the relation as given, before anything else
    for f in spec.fans:
        lim = idx[f.limit]
        for q in sorted(f.below, key=idx.get):
            if not leq[idx[q], lim]:
                return Violation("closedness", (q, f.limit))
        for q in sorted(f.above, key=idx.get):
            if not leq[lim, idx[q]]:
                return Violation("closedness", (f.limit, q))
    bad = validate(named, leq)
    if bad is not None:
        return bad
    n = len(named)
    for f in spec.fans:
        for q in f.below:
            for r in range(n):
                if leq[r, idx[q]] and named[r] not in f.below:
                    return Violation("transitivity", (named[r], f"{f.id}_n"))
        for q in f.above:
            for r in range(n):
                if leq[idx[q], r] and named[r] not in f.above:
                    return Violation("transitivity", (f"{f.id}_n", named[r]))
        both = f.below & f.above
        if both:
            return Violation("antisymmetry", (f"{f.id}_n", min(both, key=idx.get)))
    for f in spec.fans:
        for g in spec.fans:
            if f is not g and f.above & g.below:
                return Violation("fan order", (f"{f.id}_n", f"{g.id}_n"))
    pts = _points_for_separation(spec)
    for p in pts:
        for q in pts:
            if p != q and not spec.point_le(p, q) and separating_upset(spec, p, q) is None:
                return Violation("priestley separation", (spec.point_name(p), spec.point_name(q)))
    return None


FanPart = tuple  # (cofinite: bool, indices: frozenset[int])


def _union(a: FanPart, b: FanPart) -> FanPart:
    if a[0] and b[0]:
        return (True, a[1] & b[1])
    if a[0]:
        return (True, a[1] - b[1])
    if b[0]:
        return (True, b[1] - a[1])
    return (False, a[1] | b[1])


def _neg(a: FanPart) -> FanPart:
    return (not a[0], a[1])


def _inter(a: FanPart, b: FanPart) -> FanPart:
    return _neg(_union(_neg(a), _neg(b)))


def _subset(a: FanPart, b: FanPart) -> bool:
    if a[0]:
        return b[0] and b[1] <= a[1]
    return a[1].isdisjoint(b[1]) if b[0] else a[1] <= b[1]


def _nonempty(a: FanPart) -> bool:
    return a[0] or bool(a[1])


_EMPTY: FanPart = (False, frozenset())
_ALL: FanPart = (True, frozenset())


class SymSet:
    """A subset of a fan space: named-point bitmask plus a Fin/Cofin part per fan."""

    __slots__ = ("space", "named", "fans", "_hash")

    def __init__(self, space: SpaceSpec, named: int, fans: tuple):
        self.space = space
        self.named = named
        self.fans = fans
        self._hash = None

    # identity ----------------------------------------------------------

    def _key(self):
        return self.named, self.fans

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymSet) and other.space is self.space and self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def _same(self, other: "SymSet") -> None:
        if other.space is not self.space:
            raise ValueError("symbolic sets over different spaces")

    # Boolean algebra ---------------------------------------------------

    def __invert__(self) -> "SymSet":
        return SymSet(self.space, self.space.full_named & ~self.named, tuple(_neg(a) for a in self.fans))

    def __or__(self, other: "SymSet") -> "SymSet":
        self._same(other)
        return SymSet(self.space, self.named | other.named,
                      tuple(_union(a, b) for a, b in zip(self.fans, other.fans)))

    def __and__(self, other: "SymSet") -> "SymSet":
        self._same(other)
        return SymSet(self.space, self.named & other.named,
                      tuple(_inter(a, b) for a, b in zip(self.fans, other.fans)))

    def __sub__(self, other: "SymSet") -> "SymSet":
        return self & ~other

    def __le__(self, other: "SymSet") -> bool:
        self._same(other)
        if self.named & ~other.named:
            return False
        return all(_subset(a, b) for a, b in zip(self.fans, other.fans))

    def __ge__(self, other: "SymSet") -> bool:
        return other <= self

    def is_empty(self) -> bool:
        return self.named == 0 and not any(_nonempty(a) for a in self.fans)

    def is_full(self) -> bool:
        return (~self).is_empty()

    def contains(self, pt: Point) -> bool:
        if pt[0] == "n":
            return bool(self.named >> pt[1] & 1)
        cof, idx = self.fans[pt[1]]
        return (pt[2] in idx) != cof

    def support(self) -> set[int]:
        out: set[int] = set()
        for _, idx in self.fans:
            out |= idx
        return out

    # topology ----------------------------------------------------------

    def closure(self) -> "SymSet":
        sp = self.space
        named = self.named
        for j, (cof, _) in enumerate(self.fans):
            if cof:
                named |= 1 << sp.limit_idx[j]
        return SymSet(sp, named, self.fans)

    def interior(self) -> "SymSet":
        return ~(~self).closure()

    def is_closed(self) -> bool:
        return self.closure() == self

    def is_open(self) -> bool:
        return self.interior() == self

    def is_clopen(self) -> bool:
        return self.is_closed() and self.is_open()

    # order -------------------------------------------------------------

    def down(self) -> "SymSet":
        sp = self.space
        seed = self.named
        for j, part in enumerate(self.fans):
            if _nonempty(part):
                seed |= sp.below_masks[j]
        named = 0
        for i in bits(seed):
            named |= sp.down_masks[i]
        fans = tuple(_ALL if self.named & sp.above_masks[j] else part for j, part in enumerate(self.fans))
        return SymSet(sp, named, fans)

    def up(self) -> "SymSet":
        sp = self.space
        seed = self.named
        for j, part in enumerate(self.fans):
            if _nonempty(part):
                seed |= sp.above_masks[j]
        named = 0
        for i in bits(seed):
            named |= sp.up_masks[i]
        fans = tuple(_ALL if self.named & sp.below_masks[j] else part for j, part in enumerate(self.fans))
        return SymSet(sp, named, fans)

    def is_upset(self) -> bool:
        return self.up() == self

    def is_downset(self) -> bool:
        return self.down() == self

    def cl1(self) -> "SymSet":
        return self.closure().down()

    def cl2(self) -> "SymSet":
        return self.closure().up()

    def int1(self) -> "SymSet":
        return ~(~self.interior()).down()

    def int2(self) -> "SymSet":
        return ~(~self.interior()).up()

    # io ----------------------------------------------------------------

    def to_json(self) -> dict:
        sp = self.space
        fans = {}
        for f, (cof, idx) in zip(sp.fans, self.fans):
            if cof or idx:
                fans[f.id] = {"cofin" if cof else "fin": sorted(idx)}
        return {"named": sp.named_ids(self.named), "fans": fans}

    @classmethod
    def from_json(cls, space: SpaceSpec, data: dict) -> "SymSet":
        fin = {k: v["fin"] for k, v in data.get("fans", {}).items() if "fin" in v}
        cofin = {k: v["cofin"] for k, v in data.get("fans", {}).items() if "cofin" in v}
        unknown = set(data.get("named", ())) - set(space.index) | (set(fin) | set(cofin)) - set(space.fan_index)
        if unknown:
            raise SpaceError(Violation("schema", tuple(sorted(unknown))))
        return space.symset(data.get("named", ()), fin, cofin)

    def __repr__(self) -> str:
        sp = self.space
        parts = list(sp.named_ids(self.named))
        for f, (cof, idx) in zip(sp.fans, self.fans):
            if cof:
                parts.append(f"{f.id}:cofin{sorted(idx)}")
            elif idx:
                parts.append(f"{f.id}:fin{sorted(idx)}")
        return "{" + ", ".join(parts) + "}"


def is_dense(s: SymSet, within: SymSet) -> bool:
    """``within`` is contained in the closure of ``s`` (requires ``s`` inside ``within``)."""
    if not s <= within:
        raise ValueError("is_dense: set is not a subset of the ambient set")
    return within <= s.closure()


def points_of(s: SymSet, extra: int = 1) -> Iterator[Point]:
    """Concrete points covering every membership pattern of ``s``: named points,
    each support index, and ``extra`` fresh indices per fan."""
    sp = s.space
    for i in range(len(sp.named)):
        yield ("n", i)
    top = max(s.support(), default=-1) + 1
    for j in range(len(sp.fans)):
        for k in range(top + extra):
            yield ("f", j, k)
