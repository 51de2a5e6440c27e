"""Separation axioms on finite distributive lattices, two independent ways.

``check_axiom_def`` evaluates the lattice-level definitions by exhaustive
witness search; ``dual_axiom_check`` evaluates the density criteria on the
prime-filter dual.  The two are meant to agree on every input and are run
against each other in the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from latsep.finite.duality import FiniteDual, prime_filters
from latsep.finite.lattice import FinDLat, IdealOrFilter
from latsep.poset import bits
from latsep.report import CheckReport, Verdict, verdict_of

AXIOMS = ("vsubfit", "wsubfit", "regular", "boolean", "heyting", "proheyting")


def _rb(lat: FinDLat, a: int, b: int) -> bool:
    meet, join = lat.meet_table, lat.join_table
    return any(meet[a][c] == lat.bottom and join[b][c] == lat.top for c in range(len(lat)))


def rather_below_def(lat: FinDLat, a: str, b: str) -> bool:
    """``a`` is rather below ``b``: some ``c`` has ``a^c = 0`` and ``b v c = 1``."""
    return _rb(lat, lat.idx(a), lat.idx(b))


def rather_below_table(lat: FinDLat) -> dict[tuple[str, str], bool]:
    e = lat.elements
    return {(e[a], e[b]): _rb(lat, a, b) for a in range(len(lat)) for b in range(len(lat))}


def annihilator_mask(lat: FinDLat, a: int, b: int) -> int:
    return sum(1 << x for x in range(len(lat)) if lat.leq_i(lat.meet_table[a][x], b))


def upper_bounds(lat: FinDLat, m: int) -> int:
    out = (1 << len(lat)) - 1
    for i in bits(m):
        out &= lat.carrier.up_masks[i]
    return out


def lower_bounds(lat: FinDLat, m: int) -> int:
    out = (1 << len(lat)) - 1
    for i in bits(m):
        out &= lat.carrier.down_masks[i]
    return out


def is_normal_mask(lat: FinDLat, m: int) -> bool:
    return lower_bounds(lat, upper_bounds(lat, m)) == m


def is_ideal_mask(lat: FinDLat, m: int) -> bool:
    if m == 0 or lat.carrier.down_mask(m) != m:
        return False
    return all(m >> lat.join_table[i][j] & 1 for i in bits(m) for j in bits(m))


def principal_generator(lat: FinDLat, m: int) -> int | None:
    top = lat.join_mask(m)
    return top if m >> top & 1 and lat.carrier.down_masks[top] == m else None


class Admissibility:
    """Cache of which subsets ``S`` have a join that distributes over meets."""

    def __init__(self, lat: FinDLat):
        self.lat = lat
        self._cache: dict[int, bool] = {}

    def __call__(self, s: int) -> bool:
        hit = self._cache.get(s)
        if hit is None:
            lat = self.lat
            j = lat.join_mask(s)
            hit = True
            for a in range(len(lat)):
                spread = lat.bottom
                for x in bits(s):
                    spread = lat.join_table[spread][lat.meet_table[a][x]]
                if lat.meet_table[a][j] != spread:
                    hit = False
                    break
            self._cache[s] = hit
        return hit


def is_d_ideal_mask(lat: FinDLat, m: int, admissible: Admissibility | None = None) -> bool:
    """Downset closed under joins of its admissible subsets (empty set included)."""
    if lat.carrier.down_mask(m) != m:
        return False
    admissible = admissible or Admissibility(lat)
    members = list(bits(m))
    for r in range(1 << len(members)):
        s = sum(1 << members[k] for k in range(len(members)) if r >> k & 1)
        if admissible(s) and not m >> lat.join_mask(s) & 1:
            return False
    return True


@dataclass(frozen=True)
class Annihilator:
    a: str
    b: str
    ideal: IdealOrFilter
    generator: str | None  # set iff the ideal is principal, i.e. a -> b exists
    normal: bool


def relative_annihilator(lat: FinDLat, a: str, b: str) -> Annihilator:
    """``<a, b> = {x : a ^ x <= b}`` with principality and normality flags."""
    m = annihilator_mask(lat, lat.idx(a), lat.idx(b))
    gen = principal_generator(lat, m)
    return Annihilator(
        a, b,
        IdealOrFilter("ideal", frozenset(lat.carrier.ids(m))),
        None if gen is None else lat.elements[gen],
        is_normal_mask(lat, m),
    )


def _pairs(lat: FinDLat):
    n = len(lat)
    for a in range(n):
        for b in range(n):
            yield a, b


def check_axiom_def(lat: FinDLat, axiom: str) -> CheckReport:
    """Decide ``axiom`` straight from its lattice-level definition."""
    e = lat.elements
    n = len(lat)
    meet, join = lat.meet_table, lat.join_table
    witness = None
    details: dict = {}
    if axiom == "vsubfit":
        for a, b in _pairs(lat):
            if not lat.leq_i(a, b) and not any(
                    join[a][c] == lat.top and join[b][c] != lat.top for c in range(n)):
                witness = (e[a], e[b])
                break
    elif axiom == "wsubfit":
        for a, b in _pairs(lat):
            if not lat.leq_i(a, b) and not any(
                    meet[a][c] != lat.bottom and meet[b][c] == lat.bottom for c in range(n)):
                witness = (e[a], e[b])
                break
    elif axiom == "regular":
        rb = [[_rb(lat, c, a) for a in range(n)] for c in range(n)]
        for a, b in _pairs(lat):
            if not lat.leq_i(a, b) and not any(rb[c][a] and not lat.leq_i(c, b) for c in range(n)):
                witness = (e[a], e[b])
                break
        if witness is None:
            details["rather_below"] = sorted(f"{e[c]}<<{e[a]}" for c in range(n) for a in range(n) if rb[c][a])
    elif axiom == "boolean":
        for a in range(n):
            if lat.complement(a) is None:
                witness = (e[a],)
                break
    elif axiom == "heyting":
        for a, b in _pairs(lat):
            if principal_generator(lat, annihilator_mask(lat, a, b)) is None:
                witness = (e[a], e[b])
                break
    elif axiom == "proheyting":
        for a, b in _pairs(lat):
            if not is_normal_mask(lat, annihilator_mask(lat, a, b)):
                witness = (e[a], e[b])
                break
    else:
        raise ValueError(f"unknown axiom {axiom!r}")
    report = CheckReport(axiom, verdict_of(witness is None), witness=witness, details=details)
    report.trace.append(f"definition scan over {n} elements")
    return report


def _dual_regular_witness(dual: FiniteDual) -> str | None:
    lat = dual.lattice
    for a in range(len(lat)):
        sa = dual.stone[a]
        if dual.regular_part(sa) != sa:  # dense = equal in a discrete space
            return lat.elements[a]
    return None


def dual_axiom_check(lat: FinDLat, axiom: str, dual: FiniteDual | None = None) -> CheckReport:
    """Decide ``axiom`` on the prime-filter dual, where density means equality."""
    dual = dual or prime_filters(lat)
    sp = dual.space
    full = dual.full
    witness = None
    trace: list[str] = []
    if axiom == "vsubfit":
        missing = full & ~dual.minimal()
        witness = sp.ids(missing)[:1] or None
        trace.append("min X dense in X")
    elif axiom == "wsubfit":
        missing = full & ~dual.maximal()
        witness = sp.ids(missing)[:1] or None
        trace.append("max X dense in X")
    elif axiom == "boolean":
        missing = full & ~dual.maximal()
        witness = sp.ids(missing)[:1] or None
        trace.append("max X = X")
    elif axiom == "regular":
        bad = _dual_regular_witness(dual)
        witness = None if bad is None else (bad,)
        trace.append("R(s(a)) dense in s(a) for every a")
    elif axiom == "heyting":
        ups = set(dual.upsets())
        for u in ups:
            for v in ups:
                arrow = full & ~dual.down(u & ~v)
                if arrow not in ups:
                    witness = (sp.ids(u), sp.ids(v))
        trace.append("X \\ down(U \\ V) is a clopen upset")
    elif axiom == "proheyting":
        for a, b in _pairs(lat):
            ann = full & ~dual.down(dual.stone[a] & ~dual.stone[b])
            if dual.int1(dual.cl2(ann)) != ann:
                witness = (lat.elements[a], lat.elements[b])
                break
        trace.append("X \\ down(s(a) \\ s(b)) is a DM-upset")
    else:
        raise ValueError(f"unknown axiom {axiom!r}")
    return CheckReport(axiom, verdict_of(witness is None), target="dual", witness=witness, trace=trace)


def rather_below_dual(dual: FiniteDual, a: str, b: str) -> bool:
    return dual.down(dual.s(a)) & ~dual.s(b) == 0


__all__ = [
    "AXIOMS", "Annihilator", "check_axiom_def", "dual_axiom_check", "rather_below_def",
    "rather_below_dual", "rather_below_table", "relative_annihilator", "Verdict",
]
