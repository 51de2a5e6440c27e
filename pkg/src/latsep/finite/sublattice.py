"""Preservation/reflection of subfitness and regularity along A <= B."""

from __future__ import annotations

from dataclasses import dataclass, field

from latsep.finite.axioms import _rb, check_axiom_def
from latsep.finite.lattice import SublatticePair, bounded_sublattices, FinDLat
from latsep.poset import bits


@dataclass
class SublatticeReport:
    prop: str
    join_dense: bool
    meet_dense: bool
    rb_agree: bool
    holds_sub: bool
    holds_ambient: bool
    violations: list[str] = field(default_factory=list)

    @property
    def respected(self) -> bool:
        return not self.violations


def _dense(lat: FinDLat, m: int, use_join: bool) -> bool:
    for b in range(len(lat)):
        if use_join:
            below = lat.carrier.down_masks[b] & m
            if lat.join_mask(below) != b:
                return False
        else:
            above = lat.carrier.up_masks[b] & m
            if lat.meet_mask(above) != b:
                return False
    return True


def sublattice_experiment(pair: SublatticePair, prop: str) -> SublatticeReport:
    """Measure the hypotheses and conclusions of the transfer theorems on ``pair``.

    For ``vsubfit``: meet-dense + B subfit gives A subfit; join- and
    meet-dense + A subfit gives B subfit.  For ``regular`` the same shape,
    with join-density in the first clause and agreement of the two
    rather-below relations on A assumed in both.
    """
    if prop not in ("vsubfit", "regular"):
        raise ValueError(f"unsupported property {prop!r}")
    big = pair.ambient
    small = pair.lattice
    m = big.carrier.mask(pair.sub)
    jd, md = _dense(big, m, True), _dense(big, m, False)
    idx = [big.idx(e) for e in small.elements]
    rb_agree = all(
        _rb(small, i, j) == _rb(big, idx[i], idx[j])
        for i in range(len(small)) for j in range(len(small))
    )
    a_holds = check_axiom_def(small, prop).holds
    b_holds = check_axiom_def(big, prop).holds
    report = SublatticeReport(prop, jd, md, rb_agree, a_holds, b_holds)
    if prop == "vsubfit":
        if md and b_holds and not a_holds:
            report.violations.append("meet-dense and B subfit but A not subfit")
        if jd and md and a_holds and not b_holds:
            report.violations.append("dense and A subfit but B not subfit")
    else:
        if rb_agree and jd and b_holds and not a_holds:
            report.violations.append("join-dense, rb agree, B regular but A not regular")
        if rb_agree and jd and md and a_holds and not b_holds:
            report.violations.append("dense, rb agree, A regular but B not regular")
    return report


def all_sublattice_pairs(lat: FinDLat) -> list[SublatticePair]:
    return [SublatticePair(lat, s) for s in bounded_sublattices(lat)]


__all__ = ["SublatticeReport", "sublattice_experiment", "all_sublattice_pairs", "bits"]
