"""Exact engine for finite bounded distributive lattices."""

from latsep.finite.axioms import (AXIOMS, check_axiom_def, dual_axiom_check, rather_below_def,
                                  rather_below_dual, relative_annihilator)
from latsep.finite.completions import KINDS, completion
from latsep.finite.duality import FiniteDual, prime_filters
from latsep.finite.enumeration import enumerate_dlats
from latsep.finite.lattice import (FinDLat, IdealOrFilter, LatticeError, SublatticePair,
                                   bounded_sublattices, is_isomorphic, validate_dlat)
from latsep.finite.sublattice import sublattice_experiment

__all__ = [
    "AXIOMS", "KINDS", "FinDLat", "FiniteDual", "IdealOrFilter", "LatticeError", "SublatticePair",
    "bounded_sublattices", "check_axiom_def", "completion", "dual_axiom_check", "enumerate_dlats",
    "is_isomorphic", "prime_filters", "rather_below_def", "rather_below_dual",
    "relative_annihilator", "sublattice_experiment", "validate_dlat",
]
