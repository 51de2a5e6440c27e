"""Regular parts on a space with two fans and an extra point z below yinf.

The clopen upset U = {yinf, z} plus the tail y_1, y_2, ... has regular part
equal to the tail alone, which is not dense in U: the lattice is subfit but
not regular.  With BL-rather-below instead, the regular part fills U.
"""

from latsep.gallery import fig4, fig4_witness
from latsep.symbolic.separations import (check_regular, check_subfit_L, regular_part,
                                         regular_part_bl)

sp = fig4()
u = fig4_witness(sp)
print("U          =", u)
print("R(U)       =", regular_part(sp, u))
print("R_BL(U)    =", regular_part_bl(sp, u))
print("closure of R(U) =", regular_part(sp, u).closure(), "- z is never reached")

print("\nsubfit:    ", check_subfit_L(sp).verdict_label())
rep = check_regular(sp, "L", 2)
print("regular:   ", rep.verdict_label(), f"({len(rep.details['counterexamples'])} clopen upsets fail at bound 2)")
print("BL-regular:", check_regular(sp, "BL", 2).verdict_label())
