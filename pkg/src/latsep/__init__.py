"""Completions and separation axioms of distributive lattices, finite and symbolic."""

from latsep.poset import FinPoset, PosetError, Violation, validate
from latsep.report import CheckReport, Verdict

__version__ = "0.1.0"

__all__ = ["CheckReport", "FinPoset", "PosetError", "Verdict", "Violation", "validate"]
