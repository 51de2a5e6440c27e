"""Markdown and DOT emitters for run results and ordered structures."""

from __future__ import annotations

import json

from latsep.finite.lattice import FinDLat
from latsep.runner import RunResult
from latsep.symbolic.space import SpaceSpec

FAN_SAMPLE = 4


def _cell(value) -> str:
    if value is None:
        return ""
    text = json.dumps(value, sort_keys=True) if not isinstance(value, str) else value
    return text.replace("|", "\\|")


def to_markdown(result: RunResult) -> str:
    data = result.to_json()
    lines = [f"# {data['target']}", "", "| check | verdict | expected | witness | anchor |",
             "|---|---|---|---|---|"]
    for row in data["results"]:
        expected = "" if "expected" not in row else str(row["expected"]).lower()
        lines.append(f"| {row['check']} | {row['verdict']} | {expected} | "
                     f"{_cell(row['witness'])} | {_cell(row.get('anchor'))} |")
    lines += ["", f"exit code: {data['exit_code']}"]
    return "\n".join(lines) + "\n"


def _q(name: str) -> str:
    return json.dumps(name)


def space_to_dot(space: SpaceSpec, sample: int = FAN_SAMPLE) -> str:
    """Named points, the first ``sample`` members of each fan, and order edges (lower -> upper)."""
    out = ["digraph space {", "  rankdir=BT;", "  node [shape=point, xlabel=\"\\N\"];"]
    for p in space.named:
        out.append(f"  {_q(p)} [shape=circle, width=0.15, label=\"\", xlabel={_q(p)}];")
    n = len(space.named)
    for i in range(n):
        for j in range(n):
            if i == j or not space.leq[i, j]:
                continue
            if any(space.leq[i, k] and space.leq[k, j] and k not in (i, j) for k in range(n)):
                continue
            out.append(f"  {_q(space.named[i])} -> {_q(space.named[j])};")
    for f in space.fans:
        members = [f"{f.id}_{k}" for k in range(sample)]
        for m in members:
            out.append(f"  {_q(m)};")
        dots = f"{f.id}_..."
        out.append(f"  {_q(dots)} [shape=plaintext, label=\"...\", xlabel=\"\"];")
        out.append(f"  {_q(dots)} -> {_q(f.limit)} [style=dotted, arrowhead=none, label=\"limit\"];")
        below = [q for q in f.below if not any(space.leq[space.index[q], space.index[r]] and q != r
                                               for r in f.below)]
        above = [q for q in f.above if not any(space.leq[space.index[r], space.index[q]] and q != r
                                               for r in f.above)]
        for m in members:
            for q in sorted(below):
                out.append(f"  {_q(q)} -> {_q(m)};")
            for q in sorted(above):
                out.append(f"  {_q(m)} -> {_q(q)};")
    out.append("}")
    return "\n".join(out) + "\n"


def lattice_to_dot(lat: FinDLat) -> str:
    out = ["digraph lattice {", "  rankdir=BT;"]
    for e in lat.elements:
        out.append(f"  {_q(e)};")
    for a, b in lat.carrier.covers():
        out.append(f"  {_q(a)} -> {_q(b)};")
    out.append("}")
    return "\n".join(out) + "\n"
