"""Named checks and the scenario runner behind the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable

from latsep.finite.axioms import AXIOMS, check_axiom_def, dual_axiom_check
from latsep.finite.lattice import FinDLat
from latsep.gallery import GalleryEntry
from latsep.report import CheckReport, Verdict
from latsep.symbolic import separations as sep
from latsep.symbolic.space import SpaceSpec
from latsep.symbolic.views import DEFAULT_BOUND, LatticeView

EXIT_TRUE, EXIT_FALSE, EXIT_UNKNOWN, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3, 4

SpaceCheck = Callable[[SpaceSpec, int, tuple], CheckReport]


def _view(kind: str) -> SpaceCheck:
    return lambda sp, k, probes: sep.check_subfit_view(LatticeView(sp, kind), k)


def _boolean(target: str) -> SpaceCheck:
    return lambda sp, k, probes: sep.check_boolean(sp, target)


SPACE_CHECKS: dict[str, SpaceCheck] = {
    "subfit_L": lambda sp, k, probes: sep.check_subfit_L(sp),
    "wsubfit_L": lambda sp, k, probes: sep.check_wsubfit_L(sp),
    "I_subfit": lambda sp, k, probes: sep.check_I_subfit(sp),
    "skula_cross": lambda sp, k, probes: sep.check_skula_cross(sp, k),
    "sigma_subfit": lambda sp, k, probes: sep.check_sigma_subfit(sp),
    "subfit_DM": _view("DM"),
    "subfit_BL": _view("BL"),
    "subfit_pH": _view("pH"),
    "subfit_OpUp": _view("OpUp"),
    "regular_L": lambda sp, k, probes: sep.check_regular(sp, "L", k, probes),
    "regular_BL": lambda sp, k, probes: sep.check_regular(sp, "BL", k, probes),
    "A_regular_BL": lambda sp, k, probes: sep.check_A_regular_BL(sp, k, probes),
    "boolean_L": _boolean("L"),
    "boolean_DM": _boolean("DM"),
    "boolean_BL": _boolean("BL"),
    "boolean_I": _boolean("I"),
    "boolean_sigma": _boolean("sigma"),
    "proheyting": lambda sp, k, probes: sep.check_proheyting_sym(sp, k),
}

FINITE_CHECKS: dict[str, Callable[[FinDLat], CheckReport]] = {}
for _ax in AXIOMS:
    FINITE_CHECKS[_ax] = lambda lat, ax=_ax: check_axiom_def(lat, ax)
for _ax in AXIOMS:
    FINITE_CHECKS[f"dual_{_ax}"] = lambda lat, ax=_ax: dual_axiom_check(lat, ax)


class RunError(ValueError):
    pass


def default_bound() -> int:
    raw = os.environ.get("LATSEP_BOUND")
    if raw is None:
        return DEFAULT_BOUND
    try:
        return int(raw)
    except ValueError:
        raise RunError(f"LATSEP_BOUND must be an integer, got {raw!r}") from None


@dataclass
class RunResult:
    target: str
    reports: list[CheckReport]
    names: list[str]
    expected: dict = field(default_factory=dict)

    def mismatches(self) -> list[str]:
        """Expected checks whose verdict differs; an unknown verdict counts as differing."""
        out = []
        for name, rep in zip(self.names, self.reports):
            exp = self.expected.get(name)
            if exp is not None and rep.holds != exp.holds:
                out.append(name)
        return out

    def exit_code(self) -> int:
        if self.mismatches():
            return EXIT_MISMATCH
        if any(r.verdict is Verdict.UNKNOWN for r in self.reports):
            return EXIT_UNKNOWN
        if any(r.verdict is Verdict.FALSE for r in self.reports):
            return EXIT_FALSE
        return EXIT_TRUE

    def to_json(self) -> dict:
        rows = []
        for name, rep in zip(self.names, self.reports):
            row = {"check": name, **rep.to_json()}
            exp = self.expected.get(name)
            if exp is not None:
                row["expected"] = exp.holds
                row["anchor"] = exp.anchor
            rows.append(row)
        return {"target": self.target, "results": rows, "exit_code": self.exit_code()}


def available_checks(subject: SpaceSpec | FinDLat) -> list[str]:
    return list(SPACE_CHECKS if isinstance(subject, SpaceSpec) else FINITE_CHECKS)


def run_checks(subject: SpaceSpec | FinDLat, checks: list[str] | str, bound: int | None = None,
               entry: GalleryEntry | None = None, target: str = "input") -> RunResult:
    """Run the named checks (or ``"all"``) and pair them with any expectations."""
    table = SPACE_CHECKS if isinstance(subject, SpaceSpec) else FINITE_CHECKS
    names = list(table) if checks == "all" or checks == ["all"] else list(checks)
    unknown = [c for c in names if c not in table]
    if unknown:
        raise RunError(f"unknown check(s) {', '.join(unknown)}; available: {', '.join(table)}")
    k = bound if bound is not None else default_bound()
    reports = []
    for name in names:
        if isinstance(subject, SpaceSpec):
            probes = entry.probes.get(name, ()) if entry else ()
            reports.append(SPACE_CHECKS[name](subject, k, probes))
        else:
            reports.append(FINITE_CHECKS[name](subject))
    return RunResult(entry.id if entry else target, reports, names, dict(entry.expected) if entry else {})
