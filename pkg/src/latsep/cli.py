"""``latsep`` command line.

Exit codes: 0 all verdicts true or verified, 1 some verdict false, 2 some
verdict unknown, 3 input error, 4 a verdict contradicts a gallery expectation.
"""

from __future__ import annotations

import argparse
import json
import sys

from latsep import gallery as gal
from latsep.finite.lattice import FinDLat, LatticeError
from latsep.matrix import verify_matrix
from latsep.poset import PosetError
from latsep.render import lattice_to_dot, space_to_dot, to_markdown
from latsep.runner import EXIT_FALSE, EXIT_INPUT, EXIT_TRUE, RunError, available_checks, run_checks
from latsep.symbolic.space import SpaceError, SpaceSpec
from latsep.symbolic.views import ViewError


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latsep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)
    sub.add_parser("list", help="list gallery entries")
    d = sub.add_parser("describe", help="show one gallery entry")
    d.add_argument("id")
    r = sub.add_parser("run", help="run checks on a gallery entry or a JSON file")
    r.add_argument("id", nargs="?")
    r.add_argument("--file", help="JSON lattice {elements, leq} or space {named, named_leq, fans}")
    r.add_argument("--checks", default="all", help="comma-separated check names, or 'all'")
    r.add_argument("--bound", type=int, default=None, help="shape bound k (default: $LATSEP_BOUND or 2)")
    r.add_argument("--format", choices=("json", "md", "dot"), default="json")
    m = sub.add_parser("verify-matrix", help="check the summary tables on all small lattices")
    m.add_argument("--max-size", type=int, default=6)
    return p


def _load_file(path: str) -> SpaceSpec | FinDLat:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise RunError("input must be a JSON object")
    if "named" in data:
        return SpaceSpec.from_json(data)
    if "elements" in data:
        return FinDLat.from_json(data)
    raise RunError("input is neither a lattice nor a space")


def _cmd_list() -> int:
    for e in gal.gallery():
        kind = "lattice" if e.is_finite else "space"
        print(f"{e.id}\t{kind}\t{e.summary}")
    return EXIT_TRUE


def _cmd_describe(entry_id: str) -> int:
    e = gal.get(entry_id)
    subject = e.lattice if e.is_finite else e.space
    out = {
        "id": e.id,
        "summary": e.summary,
        "kind": "lattice" if e.is_finite else "space",
        "definition": subject.to_json(),
        "expected": {k: {"holds": v.holds, "anchor": v.anchor} for k, v in e.expected.items()},
        "checks": available_checks(subject),
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_TRUE


def _cmd_run(args) -> int:
    if bool(args.id) == bool(args.file):
        raise RunError("give exactly one of an entry id or --file")
    entry = None
    if args.file:
        subject = _load_file(args.file)
    else:
        entry = gal.get(args.id)
        subject = entry.lattice if entry.is_finite else entry.space
    if args.format == "dot":
        print(lattice_to_dot(subject) if isinstance(subject, FinDLat) else space_to_dot(subject), end="")
        return EXIT_TRUE
    checks = "all" if args.checks == "all" else [c for c in args.checks.split(",") if c]
    result = run_checks(subject, checks, args.bound, entry, target=args.file or "input")
    if args.format == "md":
        print(to_markdown(result), end="")
    else:
        print(json.dumps(result.to_json(), indent=2, sort_keys=True))
    return result.exit_code()


def _cmd_matrix(max_size: int) -> int:
    report = verify_matrix(max_size)
    print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    return EXIT_TRUE if report.ok else EXIT_FALSE


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.cmd == "list":
            return _cmd_list()
        if args.cmd == "describe":
            return _cmd_describe(args.id)
        if args.cmd == "run":
            return _cmd_run(args)
        return _cmd_matrix(args.max_size)
    except KeyError as exc:
        print(f"latsep: unknown entry {exc}", file=sys.stderr)
    except (RunError, SpaceError, LatticeError, PosetError, ViewError, ValueError, OSError) as exc:
        print(f"latsep: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
