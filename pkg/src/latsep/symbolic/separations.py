"""Separation axioms on fan spaces.

Exact pointwise criteria are used wherever a density or equality condition on
the dual space decides the axiom.  Everything quantified over lattice
elements runs over :func:`enumerate_shapes`; a counterexample found there is
genuine, while a clean sweep is only reported as verified at that bound.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from latsep.report import CheckReport, Verdict, verdict_of
from latsep.symbolic.space import Point, SpaceSpec, SymSet, is_dense, points_of
from latsep.symbolic.views import (DEFAULT_BOUND, MAX_SHAPE_BOUND, LatticeView, ViewError,
                                   enumerate_shapes, is_bl, rel_annihilator_upset)

SUBFIT_VIEW_KINDS = ("DM", "BL", "pH", "OpUp")


def _missing_point(s: SymSet, within: SymSet) -> str | None:
    """Name of the first point of ``within`` outside ``s``."""
    gap = within - s
    for pt in points_of(gap):
        if gap.contains(pt):
            return gap.space.point_name(pt)
    return None


def _density_report(axiom: str, target: str, s: SymSet, criterion: str) -> CheckReport:
    full = s.space.full()
    witness = _missing_point(s.closure(), full)
    return CheckReport(axiom, verdict_of(witness is None), target=target, witness=witness,
                       trace=[criterion])


def check_subfit_L(space: SpaceSpec) -> CheckReport:
    return _density_report("subfit", "L", space.min_set(), "min X dense in X")


def check_wsubfit_L(space: SpaceSpec) -> CheckReport:
    return _density_report("wsubfit", "L", space.max_set(), "max X dense in X")


def check_sigma_subfit(space: SpaceSpec) -> CheckReport:
    """Subfitness of the canonical extension: ``min X = X``."""
    witness = _missing_point(space.min_set(), space.full())
    return CheckReport("subfit", verdict_of(witness is None), target="sigma", witness=witness,
                       trace=["min X = X"])


def check_I_subfit(space: SpaceSpec) -> CheckReport:
    """Pointwise: every ``x`` lies in the closure of the minimal points below it."""
    mins = space.min_set()
    trace = []
    for pc in space.point_classes():
        pt = space.representative(pc)
        below = space.point_set(pt).down() & mins
        ok = below.closure().contains(pt)
        trace.append(f"{pc}: min of down-set = {below!r}, {'in' if ok else 'not in'} its closure")
        if not ok:
            return CheckReport("subfit", Verdict.FALSE, target="I", witness=str(pc), trace=trace,
                               details={"min_down": below})
    return CheckReport("subfit", Verdict.TRUE, target="I", trace=trace)


def check_skula_cross(space: SpaceSpec, bound: int = DEFAULT_BOUND) -> CheckReport:
    """Bounded check that ``min X`` meets every nonempty ``U \\ V`` of open upsets."""
    mins = space.min_set()
    shapes = enumerate_shapes(space, bound, "OpUp")
    for u in shapes:
        for v in shapes:
            diff = u - v
            if not diff.is_empty() and (diff & mins).is_empty():
                return CheckReport("skula_density", Verdict.FALSE, target="I", bound=bound,
                                   witness=(u, v), details={"difference": diff},
                                   trace=["U \\ V misses min X"])
    return CheckReport("skula_density", Verdict.VERIFIED, target="I", bound=bound,
                       trace=[f"{len(shapes)} open upsets, all differences meet min X"])


# rather below and regular parts ---------------------------------------------

def _clopen_upset(s: SymSet) -> None:
    if not (s.is_upset() and s.is_clopen()):
        raise ViewError(f"not a clopen upset: {s!r}")


def rather_below_sym(space: SpaceSpec, a: SymSet, b: SymSet) -> bool:
    _clopen_upset(a)
    _clopen_upset(b)
    return a.down() <= b


def rather_below_bl(space: SpaceSpec, u: SymSet, v: SymSet) -> bool:
    for s in (u, v):
        if not is_bl(s):
            raise ViewError(f"not a BL-upset: {s!r}")
    return u.closure().down().interior() <= v.closure()


def _forced_neighbourhood(u: SymSet, pt: Point) -> SymSet | None:
    """Smallest clopen upset around ``pt`` inside ``u``, or ``None`` if none exists.

    Start from the up-set of the point; each fan whose limit is inside must
    contribute a cofinite part, and the one taken from ``u`` is the least
    costly choice.  Repeat until stable.
    """
    sp = u.space
    if not u.contains(pt):
        return None
    w = sp.point_set(pt).up()
    while True:
        fans = list(w.fans)
        changed = False
        for j, lim in enumerate(sp.limit_idx):
            if w.named >> lim & 1 and not fans[j][0]:
                if not u.fans[j][0]:
                    return None
                fans[j] = (True, u.fans[j][1] - fans[j][1])
                changed = True
        if not changed:
            break
        w = SymSet(sp, w.named, tuple(fans)).up()
    return w if w <= u else None


def _pointwise(u: SymSet, pred) -> SymSet:
    sp = u.space
    top = max(u.support(), default=-1) + 1
    named = 0
    for i in range(len(sp.named)):
        w = _forced_neighbourhood(u, ("n", i))
        if w is not None and pred(w):
            named |= 1 << i
    fans = []
    for j in range(len(sp.fans)):
        inside = set()
        for k in range(top + 1):
            w = _forced_neighbourhood(u, ("f", j, k))
            if w is not None and pred(w):
                inside.add(k)
        if top in inside:
            fans.append((True, frozenset(set(range(top)) - inside)))
        else:
            fans.append((False, frozenset(inside)))
    return SymSet(sp, named, tuple(fans))


def regular_part(space: SpaceSpec, u: SymSet) -> SymSet:
    """Union of the clopen upsets whose down-set fits inside ``u``."""
    _clopen_upset(u)
    return _pointwise(u, lambda w: w.down() <= u)


def regular_part_bl(space: SpaceSpec, u: SymSet) -> SymSet:
    """Union of the clopen upsets BL-rather-below ``u``."""
    _clopen_upset(u)
    return _pointwise(u, lambda w: w.down().interior() <= u)


def check_regular(space: SpaceSpec, target: str = "L", bound: int = DEFAULT_BOUND,
                  probes: Sequence[SymSet] = ()) -> CheckReport:
    """Density of the (BL-)regular part in every clopen upset at ``bound``.

    ``probes`` are extra clopen upsets tested ahead of the enumeration, so a
    known counterexample is reported as the witness when it is one.
    """
    if target not in ("L", "BL"):
        raise ViewError(f"regularity target must be L or BL, got {target!r}")
    part = regular_part if target == "L" else regular_part_bl
    seen: set[SymSet] = set()
    bad: list[SymSet] = []
    tested = 0
    for u in list(probes) + enumerate_shapes(space, bound, "L"):
        if u in seen:
            continue
        seen.add(u)
        tested += 1
        r = part(space, u)
        if not is_dense(r, u):
            bad.append(u)
    name = "R" if target == "L" else "R_BL"
    trace = [f"{name}(U) dense in U for {tested} clopen upsets"]
    if bad:
        u = bad[0]
        return CheckReport("regular", Verdict.FALSE, target=target, bound=bound, witness=u,
                           trace=trace, details={"regular_part": part(space, u), "counterexamples": bad})
    return CheckReport("regular", Verdict.VERIFIED, target=target, bound=bound, trace=trace)


def check_A_regular_BL(space: SpaceSpec, bound: int = DEFAULT_BOUND,
                       probes: Sequence[SymSet] = ()) -> CheckReport:
    """BL(X) is A-regular exactly when L(X) is regular, A being join-dense in BL(X)."""
    base = check_regular(space, "L", bound, probes)
    trace = base.trace + ["A join-dense in BL(X): A-regular iff A regular"]
    return CheckReport("A_regular", base.verdict, target="BL", bound=bound, witness=base.witness,
                       trace=trace, details=base.details)


def check_boolean(space: SpaceSpec, target: str) -> CheckReport:
    full = space.full()
    mins, maxs = space.min_set(), space.max_set()
    if target in ("L", "sigma"):
        witness = _missing_point(maxs, full)
        trace = ["max X = X"]
    elif target == "BL":
        witness = _missing_point(maxs.closure(), full)
        trace = ["max X dense in X"]
    elif target == "DM":
        witness = _missing_point(maxs.closure(), full) or _missing_point(mins.closure(), full)
        trace = ["max X and min X dense in X"]
    elif target == "I":
        witness = _missing_point(maxs, full)
        if witness is None and not space.is_finite:
            witness = f"{space.fans[0].id}_n"
        trace = ["max X = X and X finite"]
    else:
        raise ViewError(f"unknown Boolean target {target!r}")
    return CheckReport("boolean", verdict_of(witness is None), target=target, witness=witness, trace=trace)


def check_proheyting_sym(space: SpaceSpec, bound: int = DEFAULT_BOUND) -> CheckReport:
    """Every relative annihilator upset of clopen upsets at ``bound`` is a DM-upset."""
    shapes = enumerate_shapes(space, bound, "L")
    for a in shapes:
        for b in shapes:
            ann = rel_annihilator_upset(space, a, b)
            if ann.cl2().int1() != ann:
                return CheckReport("proheyting", Verdict.FALSE, target="L", bound=bound, witness=(a, b),
                                   details={"annihilator": ann}, trace=["annihilator is not a DM-upset"])
    return CheckReport("proheyting", Verdict.VERIFIED, target="L", bound=bound,
                       trace=[f"{len(shapes) ** 2} annihilators are DM-upsets"])


# subfitness of a view ---------------------------------------------------------

def _size_key(s: SymSet) -> tuple:
    cof = [idx for c, idx in s.fans if c]
    fin = [idx for c, idx in s.fans if not c]
    return (bin(s.named).count("1"), len(cof), -sum(map(len, cof)), sum(map(len, fin)))


def _largest_first(shapes: list[SymSet]) -> list[SymSet]:
    return sorted(shapes, key=_size_key, reverse=True)


def _opup_witness(u: SymSet, v: SymSet) -> SymSet | None:
    """In OpUp(X): a witness exists iff some ``p`` outside ``v`` has its down-set inside ``u``;
    then ``X \\ down(p)`` is one."""
    sp = u.space
    # fresh indices must lie past both supports, not just the union's
    extra = max(u.support() | v.support(), default=-1) + 2
    for pt in points_of(sp.empty(), extra):
        if not v.contains(pt):
            below = sp.point_set(pt).down()
            if below <= u:
                return ~below
    return None


def check_subfit_view(view: LatticeView, bound: int | None = None) -> CheckReport:
    """Search a witness ``W`` with ``U v W = X != V v W`` for every pair ``U`` not below ``V``.

    In OpUp(X) a leftover pair is settled exactly by the pointwise criterion.
    Otherwise leftover pairs are retried once at twice the bound (capped at
    the enumeration limit); for DM the equivalence with subfitness of L(X)
    then settles what remains, and for BL and pH it stays unknown.
    """
    if view.kind not in SUBFIT_VIEW_KINDS:
        raise ViewError(f"subfitness search is not supported for view {view.kind!r}")
    k = bound if bound is not None else view.bound.k
    space = view.space
    full = space.full()
    shapes = enumerate_shapes(space, k, view.kind)
    order = _largest_first(shapes)
    cover = []
    for u in shapes:
        m = 0
        for r, w in enumerate(order):
            if view.join([u, w]) == full:
                m |= 1 << r
        cover.append(m)
    witnesses: list[tuple[SymSet, SymSet, SymSet]] = []
    leftover: list[tuple[SymSet, SymSet]] = []
    pairs = 0
    for i, u in enumerate(shapes):
        for j, v in enumerate(shapes):
            if u <= v:
                continue
            pairs += 1
            cand = cover[i] & ~cover[j]
            if cand:
                witnesses.append((u, v, order[(cand & -cand).bit_length() - 1]))
            else:
                leftover.append((u, v))
    trace = [f"{pairs} pairs at bound {k}, {len(leftover)} without witness"]
    details = {"witnesses": witnesses}
    if view.kind == "OpUp":
        # exact: no need to widen the search
        for u, v in leftover:
            w = _opup_witness(u, v)
            if w is None:
                trace.append("no point outside V has its down-set inside U: no witness exists")
                return CheckReport("subfit", Verdict.FALSE, target="OpUp", bound=k, witness=(u, v),
                                   trace=trace, details=details)
            witnesses.append((u, v, w))
        if leftover:
            trace.append("remaining pairs settled by X \\ down(p) witnesses")
        return CheckReport("subfit", Verdict.VERIFIED, target="OpUp", bound=k, trace=trace, details=details)
    k2 = min(2 * k, MAX_SHAPE_BOUND)
    if leftover and k2 > k:
        wider = _largest_first(enumerate_shapes(space, k2, view.kind))
        still = []
        for u, v in leftover:
            w = next((w for w in wider if view.join([u, w]) == full and view.join([v, w]) != full), None)
            if w is None:
                still.append((u, v))
            else:
                witnesses.append((u, v, w))
        leftover = still
        trace.append(f"escalated to bound {k2}: {len(leftover)} pairs without witness")
    if not leftover:
        return CheckReport("subfit", Verdict.VERIFIED, target=view.kind, bound=k, trace=trace, details=details)
    u, v = leftover[0]
    if view.kind == "DM":
        base = check_subfit_L(space)
        trace.append(f"DM(X) subfit iff L(X) subfit; min X dense: {base.holds}")
        if base.holds is False:
            details["point"] = base.witness
            return CheckReport("subfit", Verdict.FALSE, target="DM", bound=k, witness=(u, v),
                               trace=trace, details=details)
    trace.append("no decision procedure for the remaining pairs")
    return CheckReport("subfit", Verdict.UNKNOWN, target=view.kind, bound=k, witness=(u, v),
                       trace=trace, details=details)


def consistency_violations(space: SpaceSpec, bound: int = DEFAULT_BOUND,
                           probes: Iterable[SymSet] = ()) -> list[str]:
    """Cross-checker implications that must hold on every space."""
    probes = list(probes)
    subfit = check_subfit_L(space).holds
    wsub = check_wsubfit_L(space).holds
    dm = check_subfit_view(LatticeView(space, "DM"), bound).holds
    isub = check_I_subfit(space).holds
    reg_l = check_regular(space, "L", bound, probes).holds
    reg_bl = check_regular(space, "BL", bound, probes).holds
    out = []
    if dm is not None and dm != subfit:
        out.append("DM subfit differs from L subfit")
    if dm is None:
        out.append("DM subfit undecided")
    if isub and not subfit:
        out.append("I subfit without L subfit")
    if reg_l and not subfit:
        out.append("regular without subfit")
    if check_boolean(space, "BL").holds != wsub:
        out.append("BL Boolean differs from wsubfit")
    if check_boolean(space, "DM").holds != (subfit and wsub):
        out.append("DM Boolean differs from subfit and wsubfit")
    if reg_l and not reg_bl:
        out.append("regular without BL regular")
    return out
