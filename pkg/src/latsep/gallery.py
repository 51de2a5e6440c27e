"""Built-in instances: four small fan spaces, two further spaces and some finite lattices.

Each entry lists the checks whose outcome is known in advance, with a short
anchor saying where that expectation comes from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from latsep.finite.lattice import FinDLat
from latsep.poset import FinPoset
from latsep.symbolic.space import Fan, SpaceSpec, SymSet


@dataclass(frozen=True)
class Expectation:
    holds: bool
    anchor: str


@dataclass(frozen=True)
class GalleryEntry:
    id: str
    summary: str
    space: SpaceSpec | None = None
    lattice: FinDLat | None = None
    expected: dict[str, Expectation] = field(default_factory=dict)
    probes: dict[str, tuple[SymSet, ...]] = field(default_factory=dict)

    @property
    def is_finite(self) -> bool:
        return self.lattice is not None


def fig1() -> SpaceSpec:
    """Fan ``x`` converging to ``xinf``, isolated ``y``, and ``xinf < y``."""
    return SpaceSpec.build(["xinf", "y"], [("xinf", "y")], [Fan("x", "xinf")])


def fig2() -> SpaceSpec:
    """Fans ``x`` and ``y`` with limits ``xinf < yinf``."""
    return SpaceSpec.build(["xinf", "yinf"], [("xinf", "yinf")],
                           [Fan("x", "xinf"), Fan("y", "yinf")])


def fig3() -> SpaceSpec:
    """Fan ``x`` converging to ``xinf``, every member above ``xinf``."""
    return SpaceSpec.build(["xinf"], [], [Fan("x", "xinf", below=frozenset({"xinf"}))])


def fig4() -> SpaceSpec:
    """Fans ``x`` and ``y`` with limits ``xinf``, ``yinf``; ``xinf < yinf`` and ``z < yinf``."""
    return SpaceSpec.build(["xinf", "yinf", "z"], [("xinf", "yinf"), ("z", "yinf")],
                           [Fan("x", "xinf"), Fan("y", "yinf")])


def cofinite_n() -> SpaceSpec:
    """Order dual of :func:`fig3`: every member below ``xinf``."""
    return SpaceSpec.build(["xinf"], [], [Fan("x", "xinf", above=frozenset({"xinf"}))])


def antichain_space(k: int) -> SpaceSpec:
    return SpaceSpec.build([f"p{i}" for i in range(k)], [])


def fig4_witness(space: SpaceSpec) -> SymSet:
    """The clopen upset ``{y_1, y_2, ...} + {yinf, z}``."""
    return space.symset(["yinf", "z"], cofin={"y": {0}})


def _e(holds: bool, anchor: str) -> Expectation:
    return Expectation(holds, anchor)


def _space_entries() -> list[GalleryEntry]:
    s4 = fig4()
    return [
        GalleryEntry("fig1", "BL(X) subfit but L(X) not", space=fig1(), expected={
            "subfit_L": _e(False, "y is not in the closure of min X"),
            "subfit_BL": _e(True, "three-case witness argument for BL(X)"),
            "subfit_DM": _e(False, "DM subfit iff L subfit"),
            "wsubfit_L": _e(True, "max X = fan + {y}, dense"),
            "I_subfit": _e(False, "I subfit implies subfit"),
            "skula_cross": _e(False, "agrees with the pointwise I-subfit criterion"),
            "sigma_subfit": _e(False, "canonical extension subfit only if Boolean"),
            "boolean_I": _e(False, "fans present: X infinite"),
        }),
        GalleryEntry("fig2", "L(X) subfit but OpUp(X) not", space=fig2(), expected={
            "subfit_L": _e(True, "min X = x-fan + {xinf} + y-fan is dense"),
            "I_subfit": _e(False, "min of down(yinf) is {xinf}"),
            "skula_cross": _e(False, "agrees with the pointwise I-subfit criterion"),
            "subfit_OpUp": _e(False, "I A is not subfit"),
            "subfit_DM": _e(True, "DM subfit iff L subfit"),
            "proheyting": _e(True, "subfit implies proHeyting"),
            "sigma_subfit": _e(False, "canonical extension subfit only if Boolean"),
        }),
        GalleryEntry("fig3", "finite subsets of N plus N", space=fig3(), expected={
            "subfit_L": _e(False, "not subfit, hence not regular"),
            "regular_L": _e(False, "not regular since not subfit"),
            "boolean_BL": _e(True, "BL A is the powerset of N"),
            "boolean_L": _e(False, "xinf is not maximal"),
            "wsubfit_L": _e(True, "max X = fan, dense"),
            "A_regular_BL": _e(False, "A not regular"),
            "regular_BL": _e(True, "Boolean BL A is regular"),
        }),
        GalleryEntry("fig4", "L(X) subfit, BL(X) regular, L(X) not regular", space=s4, expected={
            "subfit_L": _e(True, "only yinf is non-minimal and it is a limit point"),
            "regular_L": _e(False, "R(U) = {y_1, y_2, ...} is not dense in U"),
            "regular_BL": _e(True, "R_BL(V) dense in V for every clopen upset V"),
            "A_regular_BL": _e(False, "BL A is not A-regular"),
            "subfit_DM": _e(True, "DM subfit iff L subfit"),
            "sigma_subfit": _e(False, "canonical extension subfit only if Boolean"),
        }, probes={"regular_L": (fig4_witness(s4),), "A_regular_BL": (fig4_witness(s4),)}),
        GalleryEntry("cofinite_N", "empty set and the cofinite subsets of N", space=cofinite_n(), expected={
            "subfit_L": _e(True, "subfit non-Boolean example"),
            "sigma_subfit": _e(False, "canonical extension of a non-Boolean lattice is not subfit"),
            "I_subfit": _e(True, "every point lies in the closure of the minimal points below it"),
            "boolean_L": _e(False, "non-Boolean"),
        }),
        GalleryEntry("antichain3", "three-point discrete antichain", space=antichain_space(3), expected={
            "subfit_L": _e(True, "Boolean"),
            "wsubfit_L": _e(True, "max X = X"),
            "I_subfit": _e(True, "x is in cl{x}"),
            "skula_cross": _e(True, "min X = X"),
            "regular_L": _e(True, "Boolean"),
            "A_regular_BL": _e(True, "Boolean"),
            "boolean_I": _e(True, "finite and Boolean"),
            "proheyting": _e(True, "Boolean implies Heyting"),
            "sigma_subfit": _e(True, "Boolean"),
        }),
    ]


def _finite_entries() -> list[GalleryEntry]:
    n_poset = FinPoset.from_pairs(["a", "b", "c", "d"], [("a", "c"), ("b", "c"), ("b", "d")])
    v_poset = FinPoset.from_pairs(["a", "b", "c"], [("a", "c"), ("b", "c")])
    all_true = {ax: _e(True, "Boolean lattices satisfy every axiom")
                for ax in ("vsubfit", "wsubfit", "regular", "boolean", "heyting", "proheyting")}
    return [
        GalleryEntry("chain3", "three-element chain", lattice=FinDLat.chain(3), expected={
            "vsubfit": _e(False, "no c separates a from 0"),
            "wsubfit": _e(False, "dual is a 2-chain"),
            "boolean": _e(False, "a has no complement"),
            "proheyting": _e(True, "finite lattices are Heyting"),
        }),
        GalleryEntry("chain4", "four-element chain", lattice=FinDLat.chain(4), expected={
            "vsubfit": _e(False, "chains beyond 2 are not subfit"),
            "regular": _e(False, "regular implies subfit"),
            "heyting": _e(True, "finite lattices are Heyting"),
        }),
        GalleryEntry("bool2", "Boolean lattice 2^2", lattice=FinDLat.boolean(2), expected=all_true),
        GalleryEntry("bool3", "Boolean lattice 2^3", lattice=FinDLat.boolean(3), expected=all_true),
        GalleryEntry("downsets_N", "downsets of the N-shaped poset", lattice=FinDLat.of_downsets(n_poset), expected={
            "vsubfit": _e(False, "finite: subfit iff Boolean"),
            "boolean": _e(False, "dual order is nontrivial"),
            "proheyting": _e(True, "finite lattices are Heyting"),
        }),
        GalleryEntry("downsets_V", "downsets of the V-shaped poset", lattice=FinDLat.of_downsets(v_poset), expected={
            "wsubfit": _e(False, "finite: wsubfit iff Boolean"),
            "regular": _e(False, "finite: regular iff Boolean"),
        }),
    ]


@lru_cache(maxsize=1)
def gallery() -> tuple[GalleryEntry, ...]:
    return tuple(_space_entries() + _finite_entries())


def get(entry_id: str) -> GalleryEntry:
    for e in gallery():
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)
