"""Summary-table traceability matrix over finite distributive lattices.

Each row pairs a lattice-side condition, a dual-space condition and a
completion-side condition; on every enumerated lattice the three must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from latsep.finite.axioms import _rb, check_axiom_def
from latsep.finite.completions import Completion, completion
from latsep.finite.duality import FiniteDual, prime_filters
from latsep.finite.enumeration import enumerate_dlats
from latsep.finite.lattice import FinDLat

MAX_MATRIX_SIZE = 8


class Ctx:
    """Per-lattice cache of the dual and the completions."""

    def __init__(self, lat: FinDLat):
        self.lat = lat
        self.dual: FiniteDual = prime_filters(lat)
        self._comp: dict[str, Completion] = {}
        self._ph_dual: FiniteDual | None = None

    def comp(self, kind: str) -> Completion:
        if kind not in self._comp:
            self._comp[kind] = completion(self.lat, kind)
        return self._comp[kind]

    def holds(self, axiom: str, kind: str | None = None) -> bool:
        lat = self.lat if kind is None else self.comp(kind).lattice
        return bool(check_axiom_def(lat, axiom).holds)

    @property
    def ph_dual(self) -> FiniteDual:
        if self._ph_dual is None:
            self._ph_dual = prime_filters(self.comp("ph").lattice)
        return self._ph_dual


def _min_all(d: FiniteDual) -> bool:
    return d.minimal() == d.full


def _max_all(d: FiniteDual) -> bool:
    return d.maximal() == d.full


def _reg_parts_full(d: FiniteDual) -> bool:
    # discrete dual: R_BL(U) = R(U), and density is equality
    return all(d.regular_part(u) == u for u in d.upsets())


def _i_subfit_pointwise(d: FiniteDual) -> bool:
    sp = d.space
    mins = d.minimal()
    return all((sp.down_masks[i] & mins) >> i & 1 for i in range(len(sp)))


def a_regular(ctx: Ctx, kind: str) -> bool:
    """Every element of the completion is the join of images of A rather below it."""
    comp = ctx.comp(kind)
    big = comp.lattice
    images = {big.idx(v) for v in comp.embedding.values()}
    for b in range(len(big)):
        below = sum(1 << a for a in images if _rb(big, a, b))
        if big.join_mask(below) != b:
            return False
    return True


Evaluator = Callable[[Ctx], bool]


@dataclass(frozen=True)
class Row:
    table: str
    name: str
    lattice: Evaluator
    dual: Evaluator
    completion: Evaluator


ROWS: tuple[Row, ...] = (
    Row("subfit", "BL-subfit",
        lambda c: c.holds("vsubfit", "ph"), lambda c: _min_all(c.ph_dual), lambda c: c.holds("vsubfit", "bl")),
    Row("subfit", "subfit",
        lambda c: c.holds("vsubfit"), lambda c: _min_all(c.dual), lambda c: c.holds("vsubfit", "dm")),
    Row("subfit", "I-subfit",
        lambda c: c.holds("vsubfit", "ideal"), lambda c: _i_subfit_pointwise(c.dual),
        lambda c: c.holds("vsubfit", "ideal")),
    Row("subfit", "Boolean",
        lambda c: c.holds("boolean"), lambda c: _min_all(c.dual), lambda c: c.holds("vsubfit", "canonical")),
    Row("regular", "BL-regular",
        lambda c: c.holds("regular", "ph"), lambda c: _reg_parts_full(c.dual), lambda c: c.holds("regular", "bl")),
    Row("regular", "DM-regular",
        lambda c: c.holds("regular", "dm"), lambda c: _min_all(c.dual) and _reg_parts_full(c.dual),
        lambda c: c.holds("regular", "dm")),
    Row("regular", "regular",
        lambda c: c.holds("regular"), lambda c: _reg_parts_full(c.dual), lambda c: a_regular(c, "bl")),
    Row("regular", "Boolean",
        lambda c: c.holds("boolean"), lambda c: _reg_parts_full(c.dual),
        lambda c: c.holds("regular", "ideal") and c.holds("regular", "canonical")),
    Row("boolean", "BL-Boolean",
        lambda c: c.holds("boolean", "ph"), lambda c: _max_all(c.dual), lambda c: c.holds("boolean", "bl")),
    Row("boolean", "DM-Boolean",
        lambda c: c.holds("boolean", "dm"), lambda c: _max_all(c.dual) and _min_all(c.dual),
        lambda c: c.holds("boolean", "dm")),
    Row("boolean", "Boolean",
        lambda c: c.holds("boolean"), lambda c: _max_all(c.dual), lambda c: c.holds("boolean", "canonical")),
    Row("boolean", "I-Boolean",
        lambda c: c.holds("boolean", "ideal"), lambda c: _max_all(c.dual),  # X is finite here
        lambda c: c.holds("boolean", "ideal")),
)


@dataclass
class MatrixReport:
    max_size: int
    lattices: int = 0
    counts: dict[str, list[int]] = field(default_factory=dict)  # row -> [evaluated, true]
    disagreements: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "max_size": self.max_size,
            "lattices": self.lattices,
            "rows": [{"row": k, "evaluated": v[0], "holding": v[1]} for k, v in self.counts.items()],
            "disagreements": self.disagreements,
        }


def evaluate_row(lat: FinDLat, row: Row, ctx: Ctx | None = None) -> tuple[bool, bool, bool]:
    ctx = ctx or Ctx(lat)
    return row.lattice(ctx), row.dual(ctx), row.completion(ctx)


def verify_matrix(max_size: int) -> MatrixReport:
    """Evaluate every row on every distributive lattice with at most ``max_size`` elements."""
    if max_size > MAX_MATRIX_SIZE:
        raise ValueError(f"max_size {max_size} exceeds {MAX_MATRIX_SIZE}")
    report = MatrixReport(max_size)
    for row in ROWS:
        report.counts[f"{row.table}:{row.name}"] = [0, 0]
    for lat in enumerate_dlats(max_size):
        report.lattices += 1
        ctx = Ctx(lat)
        for row in ROWS:
            vals = evaluate_row(lat, row, ctx)
            key = f"{row.table}:{row.name}"
            report.counts[key][0] += 1
            report.counts[key][1] += vals[0]
            if len(set(vals)) > 1:
                report.disagreements.append({"row": key, "lattice": list(lat.elements),
                                             "values": list(vals)})
    return report
