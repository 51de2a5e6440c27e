"""Hypothesis strategies shared by the property tests."""

import numpy as np
from hypothesis import strategies as st

from latsep.poset import FinPoset
from latsep.symbolic.space import Fan, SpaceSpec, SymSet


@st.composite
def posets(draw, max_size=10):
    """Random posets: a random DAG on a fixed linear order, closed transitively."""
    n = draw(st.integers(0, max_size))
    pairs = []
    for j in range(n):
        for i in range(j):
            if draw(st.booleans()) and draw(st.booleans()):
                pairs.append((f"e{i}", f"e{j}"))
    return FinPoset.from_pairs([f"e{i}" for i in range(n)], pairs)


@st.composite
def fan_spaces(draw, max_named=6, max_fans=3):
    """Random valid fan spaces.

    Named points get a random order; each fan picks a limit and then a
    down-closed ``below`` inside the limit's down-set or an up-closed
    ``above`` inside its up-set (never both, so fans never chain).
    """
    n = draw(st.integers(1, max_named))
    poset = draw(posets(max_size=n).filter(lambda p: len(p) == n))
    names = list(poset.elements)
    fans = []
    for j in range(draw(st.integers(0, max_fans))):
        lim = draw(st.integers(0, n - 1))
        side = draw(st.sampled_from(["none", "below", "above"]))
        below = above = frozenset()
        if side == "below":
            cands = [i for i in range(n) if poset.leq[i, lim]]
            seed = draw(st.sampled_from(cands))
            below = frozenset(names[i] for i in range(n) if poset.leq[i, seed])
        elif side == "above":
            cands = [i for i in range(n) if poset.leq[lim, i]]
            seed = draw(st.sampled_from(cands))
            above = frozenset(names[i] for i in range(n) if poset.leq[seed, i])
        fans.append(Fan(f"f{j}", names[lim], below, above))
    # a named point above one fan and below another would order fan members
    if any(f is not g and f.above & g.below for f in fans for g in fans):
        fans = [Fan(h.id, h.limit, h.below) for h in fans]
    pairs = [(a, b) for a in names for b in names if poset.le(a, b)]
    return SpaceSpec.build(names, pairs, fans)


def symsets(space, max_index=6):
    part = st.tuples(st.booleans(), st.frozensets(st.integers(0, max_index - 1), max_size=max_index))
    return st.builds(
        lambda named, fans: SymSet(space, named, tuple(fans)),
        st.integers(0, space.full_named),
        st.lists(part, min_size=len(space.fans), max_size=len(space.fans)),
    )


def random_symset(space, rng, max_index=6):
    fans = tuple((bool(rng.random() < 0.5), frozenset(int(i) for i in range(max_index) if rng.random() < 0.4))
                 for _ in space.fans)
    return SymSet(space, int(rng.integers(0, space.full_named + 1)), fans)


def rng(seed=0):
    return np.random.default_rng(seed)
