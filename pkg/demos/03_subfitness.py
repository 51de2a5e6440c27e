"""Subfitness on two spaces where the lattice views disagree.

On the first space the clopen upsets fail to be subfit while the BL-upsets
pass, with a concrete separating set for every pair.  On the second the
clopen upsets are subfit yet the open upsets are not.
"""

from latsep.gallery import fig1, fig2
from latsep.symbolic.separations import check_I_subfit, check_subfit_L, check_subfit_view
from latsep.symbolic.views import LatticeView

one = fig1()
rep = check_subfit_L(one)
print("space one, clopen upsets subfit:", rep.verdict_label(), "- point outside the closure of min X:", rep.witness)

bl = check_subfit_view(LatticeView(one, "BL"), 2)
print("space one, BL-upsets subfit:    ", bl.verdict_label())
print("a few of the separating sets W with U v W = X but V v W != X:")
for u, v, w in bl.details["witnesses"][:6]:
    print(f"   U={u!r:<28} V={v!r:<20} W={w!r}")

two = fig2()
print("\nspace two, clopen upsets subfit:", check_subfit_L(two).verdict_label())
i_rep = check_I_subfit(two)
print("space two, ideal completion subfit:", i_rep.verdict_label(), "at", i_rep.witness,
      "- minimal points below it:", i_rep.details["min_down"])
op = check_subfit_view(LatticeView(two, "OpUp"), 2)
u, v = op.witness
print("open upsets: no witness separates", u, "from", v)
