"""Symbolic sets on a space with one convergent sequence.

The space has a fan x_0, x_1, ... converging to xinf, and one more point y
sitting above xinf.  Sets are finite or cofinite on the fan, so the usual
topological and order operators can be computed exactly.
"""

import numpy as np

from latsep.gallery import fig1
from latsep.render import space_to_dot
from latsep.symbolic.truncation import Truncation

sp = fig1()
tail = sp.symset(cofin={"x": set()})
print("the whole fan:          ", tail)
print("its closure adds xinf:  ", tail.closure())
print("{xinf} has empty interior:", sp.symset(["xinf"]).interior())
print("down-set of {y}:        ", sp.symset(["y"]).down())
print("minimal points:         ", sp.min_set())
print("closure of the minimals:", sp.min_set().closure(), "(y is missing)")

# A brute-force check: cut each fan at 12 members and redo the operators by hand.
oracle = Truncation(sp)
rng = np.random.default_rng(7)
agree = 0
for _ in range(200):
    s = sp.symset(["y"] if rng.random() < 0.5 else [],
                  **{("cofin" if rng.random() < 0.5 else "fin"): {"x": set(rng.choice(6, 2).tolist())}})
    agree += all(np.array_equal(oracle.encode(getattr(s, op)()), getattr(oracle, op)(oracle.encode(s)))
                 for op in ("closure", "interior", "down", "up", "cl1", "int1"))
print(f"\ntruncation oracle agrees on {agree}/200 random sets")

print("\nDOT rendering (first four fan members):\n")
print(space_to_dot(sp))
