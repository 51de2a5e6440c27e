import pytest
from hypothesis import given, settings, strategies as st

from latsep.gallery import antichain_space, cofinite_n, fig1, fig2, fig3, fig4
from latsep.symbolic.views import (LatticeView, ShapeBound, ViewError, bl_join, bl_pseudocomplement, clopens,
                                   enumerate_shapes, is_bl, ph_generators, rel_annihilator_upset)

from strategies import fan_spaces

small_spaces = fan_spaces(max_named=4, max_fans=2)


def test_fan_tail_is_bl_not_dm():
    sp = fig1()
    w = sp.symset(cofin={"x": set()})
    assert LatticeView(sp, "BL").contains(w)
    assert LatticeView(sp, "pH").contains(w)
    assert not LatticeView(sp, "DM").contains(w)
    assert not LatticeView(sp, "L").contains(w)
    assert LatticeView(sp, "OpUp").contains(w)


def test_membership_examples():
    sp = fig1()
    assert LatticeView(sp, "L").contains(sp.symset(["y"]))
    assert not LatticeView(sp, "Up").contains(sp.symset(["xinf"]))
    # x_0 alone is open but the named point xinf is not
    assert LatticeView(sp, "OpUp").contains(sp.symset(fin={"x": {0}}))
    assert not LatticeView(sp, "OpUp").contains(sp.symset(["xinf", "y"]))


def test_bl_join_example():
    sp = fig1()
    view = LatticeView(sp, "BL")
    j = bl_join(view, [sp.symset(["y"]), sp.symset(cofin={"x": set()})])
    assert j == sp.symset(["xinf", "y"], cofin={"x": set()})
    assert view.join([sp.symset(["y"]), sp.symset(cofin={"x": set()})]) == j
    with pytest.raises(ViewError):
        bl_join(view, [sp.symset(["xinf"])])


def test_pseudocomplement_example():
    sp = fig3()
    view = LatticeView(sp, "BL")
    u = sp.symset(fin={"x": {0}})
    neg = bl_pseudocomplement(view, u)
    assert neg == sp.symset(cofin={"x": {0}})
    assert bl_pseudocomplement(view, neg) == u


def test_rel_annihilator_examples():
    sp = fig1()
    y = sp.symset(["y"])
    assert rel_annihilator_upset(sp, sp.full(), y) == y
    x0 = sp.symset(fin={"x": {0}})
    assert rel_annihilator_upset(sp, x0, sp.empty()) == sp.symset(["xinf", "y"], cofin={"x": {0}})
    with pytest.raises(ViewError):
        rel_annihilator_upset(sp, sp.symset(["xinf"]), y)


def test_ph_generator_examples():
    sp = fig1()
    assert ph_generators(sp, sp.symset(["y"])) == sp.symset(cofin={"x": set()})
    assert ph_generators(sp, sp.empty()) == sp.full()
    with pytest.raises(ViewError):
        ph_generators(sp, sp.symset(cofin={"x": set()}))


def test_shape_counts():
    sp = antichain_space(2)
    assert len(enumerate_shapes(sp, 2, "L")) == 4
    assert len(enumerate_shapes(sp, 2, "Up")) == 4
    f1 = fig1()
    # clopens with supports below 1: 4 named patterns, fan part determined by xinf, 2 supports
    assert len(list(clopens(f1, 1))) == 8
    with pytest.raises(ViewError):
        enumerate_shapes(f1, 5, "L")
    with pytest.raises(ViewError):
        ShapeBound(0)
    with pytest.raises(ViewError):
        LatticeView(f1, "nope")


@pytest.mark.parametrize("make", [fig1, fig2, fig3, fig4])
@pytest.mark.parametrize("kind", ["L", "DM", "BL", "OpUp", "pH"])
def test_shapes_unique_and_members(make, kind):
    sp = make()
    shapes = enumerate_shapes(sp, 1, kind)
    assert len(set(shapes)) == len(shapes)
    view = LatticeView(sp, kind, ShapeBound(1))
    assert all(view.contains(s) for s in shapes)


@settings(max_examples=25)
@given(small_spaces)
def test_inclusion_chain(sp):
    k = 1
    sets = {kind: set(enumerate_shapes(sp, k, kind)) for kind in ("L", "DM", "BL", "pH", "OpUp", "Up")}
    assert sets["L"] <= sets["DM"] <= sets["BL"] <= sets["OpUp"] <= sets["Up"]
    assert sets["L"] <= sets["pH"] <= sets["BL"]


@settings(max_examples=25)
@given(st.data())
def test_nucleus_laws(data):
    """int1 cl is a nucleus on open upsets with fixed points exactly BL."""
    sp = data.draw(small_spaces)
    opens = enumerate_shapes(sp, 1, "OpUp")
    u, v = data.draw(st.sampled_from(opens)), data.draw(st.sampled_from(opens))
    j = lambda s: s.closure().int1()
    assert u <= j(u) and j(j(u)) == j(u)
    assert j(u & v) == j(u) & j(v)
    assert is_bl(j(u))


@settings(max_examples=25)
@given(st.data())
def test_pseudocomplement_laws(data):
    sp = data.draw(small_spaces)
    view = LatticeView(sp, "BL")
    bls = enumerate_shapes(sp, 1, "BL")
    u, v = data.draw(st.sampled_from(bls)), data.draw(st.sampled_from(bls))
    neg = lambda s: bl_pseudocomplement(view, s)
    assert is_bl(neg(u)) and (u & neg(u)).is_empty()
    assert neg(neg(neg(u))) == neg(u)
    assert u <= neg(neg(u))
    # largest disjoint member
    if (u & v).is_empty():
        assert v <= neg(u)


@settings(max_examples=25)
@given(st.data())
def test_annihilators_are_bl(data):
    sp = data.draw(small_spaces)
    ls = enumerate_shapes(sp, 1, "L")
    a, b = data.draw(st.sampled_from(ls)), data.draw(st.sampled_from(ls))
    ann = rel_annihilator_upset(sp, a, b)
    assert is_bl(ann) and (a & ann) <= b
    assert LatticeView(sp, "pH", ShapeBound(1)).contains(rel_annihilator_upset(sp, a, sp.empty()))


@settings(max_examples=25)
@given(st.data())
def test_view_joins_are_least_upper_bounds(data):
    sp = data.draw(small_spaces)
    kind = data.draw(st.sampled_from(["L", "DM", "BL"]))
    view = LatticeView(sp, kind, ShapeBound(1))
    shapes = enumerate_shapes(sp, 1, kind)
    u, v = data.draw(st.sampled_from(shapes)), data.draw(st.sampled_from(shapes))
    j = view.join([u, v])
    assert view.contains(j) and u <= j and v <= j
    assert all(j <= w for w in shapes if u <= w and v <= w)
    assert view.contains(view.meet([u, v]))


GALLERY_SPACES = [fig1, fig2, fig3, fig4, cofinite_n]


@pytest.mark.parametrize("make", GALLERY_SPACES + [lambda: antichain_space(3)])
def test_bounds_are_members_of_every_view(make):
    sp = make()
    for kind in ("L", "DM", "BL", "OpUp", "Up", "pH"):
        view = LatticeView(sp, kind)
        assert view.contains(sp.empty()) and view.contains(sp.full())
        assert view.top == sp.full() and view.bottom.is_empty()


def test_bl_join_trivial_cases():
    sp = fig1()
    view = LatticeView(sp, "BL")
    x0, x1 = sp.symset(fin={"x": {0}}), sp.symset(fin={"x": {1}})
    assert bl_join(view, [x0, x1]) == sp.symset(fin={"x": {0, 1}})
    for u in enumerate_shapes(sp, 2, "BL"):
        assert bl_join(view, [u]) == u
    # the fan tail and {y} join to the whole space
    assert bl_join(view, [sp.symset(["y"]), sp.symset(cofin={"x": set()})]).is_full()


def test_pseudocomplement_trivial_cases():
    for make in GALLERY_SPACES:
        sp = make()
        view = LatticeView(sp, "BL")
        assert bl_pseudocomplement(view, sp.empty()).is_full()
        assert bl_pseudocomplement(view, sp.full()).is_empty()
    sp = fig1()
    assert bl_pseudocomplement(LatticeView(sp, "BL"), sp.symset(["y"])) == sp.symset(cofin={"x": set()})
    s3 = fig3()
    assert bl_pseudocomplement(LatticeView(s3, "BL"), s3.symset(fin={"x": {4}})) == s3.symset(cofin={"x": {4}})


def test_rel_annihilator_trivial_cases():
    for make in GALLERY_SPACES:
        sp = make()
        for a in enumerate_shapes(sp, 1, "L"):
            assert rel_annihilator_upset(sp, a, sp.full()).is_full()
            assert rel_annihilator_upset(sp, sp.full(), a) == ~(~a).down()


def test_rel_annihilator_fig4_against_oracle():
    import numpy as np

    from latsep.symbolic.truncation import Truncation

    sp = fig4()
    a = sp.symset(["yinf", "z"], cofin={"y": {0}})
    ann = rel_annihilator_upset(sp, a, sp.empty())
    t = Truncation(sp)
    assert np.array_equal(t.encode(ann), ~t.down(t.encode(a)))
    # xinf is below yinf, so it leaves along with the whole of a
    assert ann == sp.symset(cofin={"x": set()}, fin={"y": {0}})


def test_fig1_shapes_at_bound_one():
    sp = fig1()
    shapes = enumerate_shapes(sp, 1, "L")
    for s in (sp.empty(), sp.full(), sp.symset(["y"]), sp.symset(["xinf", "y"], cofin={"x": set()}),
              sp.symset(fin={"x": {0}}), sp.symset(["xinf", "y"], cofin={"x": {0}})):
        assert s in shapes
    assert enumerate_shapes(sp, 1, "L") == shapes
    twos = enumerate_shapes(sp, 2, "BL")
    assert len(set(twos)) == len(twos)


@pytest.mark.parametrize("make", GALLERY_SPACES)
def test_fixpoint_containment_on_gallery(make):
    sp = make()
    views = {k: LatticeView(sp, k) for k in ("DM", "BL", "OpUp")}
    for u in enumerate_shapes(sp, 2, "Up"):
        if views["DM"].contains(u):
            assert views["BL"].contains(u)
        if views["BL"].contains(u):
            assert views["OpUp"].contains(u)


@pytest.mark.parametrize("make", GALLERY_SPACES)
def test_bl_members_are_intersections_of_annihilators(make):
    """Each BL-member at bound 1 is the meet of the annihilators above it, taken at bound 2."""
    sp = make()
    ls = enumerate_shapes(sp, 2, "L")
    anns = set(rel_annihilator_upset(sp, a, b) for a in ls for b in ls)
    for u in enumerate_shapes(sp, 1, "BL"):
        meet = sp.full()
        for ann in anns:
            if u <= ann:
                meet = meet & ann
        assert meet == u, u
