"""Acceptance criteria 1-9; each prints one PASS/FAIL line."""

import numpy as np

from latsep.finite import (KINDS, FinDLat, check_axiom_def, dual_axiom_check, enumerate_dlats, prime_filters,
                           rather_below_def, sublattice_experiment)
from latsep.finite.completions import collapses
from latsep.finite.sublattice import all_sublattice_pairs
from latsep.gallery import cofinite_n, fig1, fig2, fig3, fig4, fig4_witness, gallery
from latsep.matrix import verify_matrix
from latsep.report import Verdict
from latsep.symbolic.separations import (check_A_regular_BL, check_boolean, check_I_subfit, check_regular,
                                         check_sigma_subfit, check_skula_cross, check_subfit_L,
                                         check_subfit_view, consistency_violations, regular_part)
from latsep.symbolic.truncation import Truncation
from latsep.symbolic.views import LatticeView

from acceptance_log import criterion
from strategies import random_symset


def test_criterion_1_fig1():
    with criterion(1, "fig1: L not subfit, BL subfit with the expected witnesses", 5):
        sp = fig1()
        rep = check_subfit_L(sp)
        assert rep.verdict is Verdict.FALSE and rep.witness == "y"
        bl = check_subfit_view(LatticeView(sp, "BL"), 2)
        assert bl.verdict is Verdict.VERIFIED and bl.verdict_label() == "verified-at-bound(2)"
        found = {(u, v): w for u, v, w in bl.details["witnesses"]}
        for n in range(2):
            member = sp.symset(fin={"x": {n}})
            assert found[(member, sp.empty())] == ~member
        assert found[(sp.symset(["y"]), sp.empty())] == sp.symset(cofin={"x": set()})


def test_criterion_2_fig2():
    with criterion(2, "fig2: L subfit, not I-subfit at yinf, Skula search agrees", 5):
        sp = fig2()
        assert check_subfit_L(sp).verdict is Verdict.TRUE
        rep = check_I_subfit(sp)
        assert rep.verdict is Verdict.FALSE and rep.witness == "yinf"
        assert rep.details["min_down"] == sp.symset(["xinf"])
        skula = check_skula_cross(sp, 2)
        assert skula.verdict is Verdict.FALSE
        u, v = skula.witness
        diff = u - v
        assert not diff.is_empty() and (diff & sp.min_set()).is_empty()


def test_criterion_3_fig3():
    with criterion(3, "fig3: not subfit, BL Boolean, L not Boolean", 5):
        sp = fig3()
        assert check_subfit_L(sp).verdict is Verdict.FALSE
        assert check_boolean(sp, "BL").verdict is Verdict.TRUE
        assert check_boolean(sp, "L").verdict is Verdict.FALSE


def test_criterion_4_fig4():
    with criterion(4, "fig4: subfit, R(U) is the y-tail, L not regular, BL regular", 10):
        sp = fig4()
        u = fig4_witness(sp)
        tail = sp.symset(cofin={"y": {0}})
        assert check_subfit_L(sp).verdict is Verdict.TRUE
        assert regular_part(sp, u) == tail
        reg = check_regular(sp, "L", 2, probes=(u,))
        assert reg.verdict is Verdict.FALSE and reg.witness == u
        assert reg.details["regular_part"] == tail
        assert check_regular(sp, "BL", 2).verdict is Verdict.VERIFIED
        assert check_A_regular_BL(sp, 2, probes=(u,)).verdict is Verdict.FALSE


def test_criterion_5_cofinite():
    with criterion(5, "cofinite_N: subfit, canonical extension not subfit", 2):
        sp = cofinite_n()
        assert check_subfit_L(sp).verdict is Verdict.TRUE
        sigma = check_sigma_subfit(sp)
        assert sigma.verdict is Verdict.FALSE and not sp.min_set() == sp.full()


def test_criterion_6_finite_oracles():
    with criterion(6, "finite oracles on every distributive lattice up to size 8", 180):
        lattices = [FinDLat.chain(1)] + list(enumerate_dlats(8))
        assert len(lattices) == 1 + 1 + 1 + 2 + 3 + 5 + 8 + 15
        for lat in lattices:
            dual = prime_filters(lat)
            for ax in ("vsubfit", "wsubfit", "regular", "boolean"):
                assert check_axiom_def(lat, ax).holds == dual_axiom_check(lat, ax, dual).holds, (lat.elements, ax)
            for a in lat.elements:
                for b in lat.elements:
                    expect = dual.down(dual.s(a)) & ~dual.s(b) == 0
                    assert rather_below_def(lat, a, b) == expect, (lat.elements, a, b)
            for kind in KINDS:
                assert collapses(lat, kind), (lat.elements, kind)
        pairs = 0
        for lat in lattices:
            if len(lat) > 6:
                continue
            for pair in all_sublattice_pairs(lat):
                for prop in ("vsubfit", "regular"):
                    pairs += 1
                    rep = sublattice_experiment(pair, prop)
                    assert rep.respected, (lat.elements, prop, rep.violations)
        assert pairs > 0


def test_criterion_7_consistency():
    with criterion(7, "cross-checker invariants on the gallery, matrix up to size 6", 120):
        for entry in gallery():
            if entry.is_finite:
                continue
            probes = entry.probes.get("regular_L", ())
            assert consistency_violations(entry.space, 2, probes) == [], entry.id
        report = verify_matrix(6)
        assert report.ok, report.disagreements


def test_criterion_8_truncation_oracle():
    ops = ("closure", "interior", "down", "up", "cl1", "int1")
    with criterion(8, "symbolic operators match the truncation oracle (500 sets per space)", 60):
        rng = np.random.default_rng(20260101)
        for entry in gallery():
            if entry.is_finite:
                continue
            sp = entry.space
            oracle = Truncation(sp)
            for _ in range(500):
                s = random_symset(sp, rng)
                v = oracle.encode(s)
                for op in ops:
                    got = oracle.encode(getattr(s, op)())
                    want = getattr(oracle, op)(v)
                    assert np.array_equal(got, want), (entry.id, op, s)


def test_criterion_9_property_suites():
    import test_poset
    import test_separations
    import test_space
    import test_views

    props = [
        test_poset.test_closure_operator_laws, test_poset.test_min_points_order_dense, test_space.test_kuratowski_laws, test_space.test_order_operators,
        test_space.test_boolean_algebra_laws, test_space.test_fan_index_exchangeability,
        test_views.test_nucleus_laws, test_views.test_inclusion_chain, test_views.test_pseudocomplement_laws,
        test_views.test_annihilators_are_bl,
        test_separations.test_regular_part_inclusions, test_separations.test_rather_below_implies_bl,
    ]
    with criterion(9, "property suites under a fixed seed", 60):
        for prop in props:
            prop()
        # clopen fixpoint law over the enumerated clopens
        for make in (fig1, fig2, fig3, fig4, cofinite_n):
            sp = make()
            for s in LatticeView(sp, "L").shapes(2):
                assert s.closure() == s == s.interior()
