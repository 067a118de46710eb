"""Command-line front end.

Exit codes: 0 success, 1 validation error, 2 usage error, 3 negative
answer (no chain, not V-continuous), 4 a sweep found failures or was
truncated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .chains import chain_components, find_chain, u_chain_components
from .coverings import Covering, minimal_basis_covering, nerve, validate_covering
from .errors import CapExceeded, FintopError, UnknownTheorem
from .maps import PointMap, is_v_continuous, is_v_continuous_naive, validate_map
from .space import FiniteSpace, connected_components, quasicomponents, validate_topology
from .sweep import CATALOG, DEFAULT_BUDGET_S, DOUBLY_QUANTIFIED, sweep
from .theorems import theorem_id

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_NEGATIVE, EXIT_SWEEP = 0, 1, 2, 3, 4


class InputError(FintopError):
    """Malformed input file (bad JSON, missing field, wrong type)."""


class Workspace:
    """Registry of spaces, coverings and maps loaded from JSON files.

    Objects are named by file stem.  A covering's ``space`` and a map's
    ``domain``/``codomain`` may be inline objects or paths relative to the
    referring file.
    """

    def __init__(self):
        self.objects: dict[str, Any] = {}
        self._by_path: dict[Path, Any] = {}

    def load(self, path: str | Path):
        path = Path(path).resolve()
        if path in self._by_path:
            return self._by_path[path]
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as e:
            raise InputError(f"{path.name}: line {e.lineno} column {e.colno}: {e.msg}") from None
        except OSError as e:
            raise InputError(f"{path}: {e.strerror}") from None
        obj = self.build(data, path.parent, path.name)
        self._by_path[path] = obj
        self.objects[path.stem] = obj
        return obj

    def _resolve(self, ref, base: Path, context: str):
        if isinstance(ref, str):
            return self.load(base / ref)
        if isinstance(ref, dict):
            return self.build(ref, base, context)
        raise InputError(f"{context}: expected an object or a file path")

    def build(self, data, base: Path, context: str):
        if not isinstance(data, dict):
            raise InputError(f"{context}: top level must be a JSON object")
        if "points" in data:
            return self._space(data, context)
        if "members" in data:
            space = self._resolve(data.get("space"), base, context + ".space")
            if not isinstance(space, FiniteSpace):
                raise InputError(f"{context}.space: not a space")
            members = data["members"]
            if not isinstance(members, list) or not all(isinstance(m, list) for m in members):
                raise InputError(f"{context}.members: expected a list of label lists")
            return validate_covering(space, members)
        if "table" in data:
            dom = self._resolve(data.get("domain"), base, context + ".domain")
            cod = self._resolve(data.get("codomain"), base, context + ".codomain")
            if not isinstance(data["table"], dict):
                raise InputError(f"{context}.table: expected an object")
            return validate_map(dom, cod, data["table"])
        raise InputError(f"{context}: cannot tell whether this is a space, covering or map")

    @staticmethod
    def _space(data, context) -> FiniteSpace:
        points, opens = data.get("points"), data.get("opens")
        if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
            raise InputError(f"{context}.points: expected a list of strings")
        if not isinstance(opens, list) or not all(isinstance(o, list) for o in opens):
            raise InputError(f"{context}.opens: expected a list of label lists")
        return validate_topology(points, opens)


def _kind(obj) -> str:
    if isinstance(obj, FiniteSpace):
        return "space"
    if isinstance(obj, Covering):
        return "covering"
    return "map"


def _emit(args, obj):
    indent = 2 if args.pretty else None
    print(json.dumps(obj, indent=indent, ensure_ascii=False))


def _error_json(e: Exception) -> dict:
    return {"error": type(e).__name__, "message": str(e)}


def cmd_validate(args) -> int:
    ws = Workspace()
    results, code = [], EXIT_OK
    for f in args.files:
        try:
            obj = ws.load(f)
            results.append({"file": f, "kind": _kind(obj), "valid": True})
        except FintopError as e:
            results.append({"file": f, "valid": False, **_error_json(e)})
            code = EXIT_INVALID
    _emit(args, results)
    return code


def _covering_arg(ws: Workspace, ref: str, space: FiniteSpace | None = None) -> Covering:
    if ref == "basis":
        if space is None:
            raise InputError("--covering basis needs --space")
        return minimal_basis_covering(space)
    cov = ws.load(ref)
    if not isinstance(cov, Covering):
        raise InputError(f"{ref}: not a covering")
    return cov


def _load_kind(ws, ref, cls, what):
    obj = ws.load(ref)
    if not isinstance(obj, cls):
        raise InputError(f"{ref}: not a {what}")
    return obj


KINDS = {
    "connected": connected_components,
    "quasi": quasicomponents,
    "chain": chain_components,
}


def cmd_components(args) -> int:
    ws = Workspace()
    space = _load_kind(ws, args.space, FiniteSpace, "space")
    if args.kind == "u-chain":
        if not args.covering:
            print("components --kind u-chain requires --covering", file=sys.stderr)
            return EXIT_USAGE
        cov = _covering_arg(ws, args.covering, space)
        if cov.space != space:
            raise InputError("covering does not belong to --space")
        part = u_chain_components(cov)
    else:
        part = KINDS[args.kind](space)
    _emit(args, {"kind": part.kind, "blocks": part.to_json()})
    return EXIT_OK


def cmd_chain(args) -> int:
    ws = Workspace()
    space = _load_kind(ws, args.space, FiniteSpace, "space") if args.space else None
    cov = _covering_arg(ws, args.covering, space)
    ch = find_chain(cov, args.x, args.y)
    if ch is None:
        _emit(args, "none")
        return EXIT_NEGATIVE
    _emit(args, ch.to_json())
    return EXIT_OK


def cmd_vcont(args) -> int:
    ws = Workspace()
    f = _load_kind(ws, args.map, PointMap, "map")
    cov = _covering_arg(ws, args.covering, f.codomain)
    test = is_v_continuous_naive if args.naive else is_v_continuous
    res = test(f, cov)
    out: dict[str, Any] = {"v_continuous": res.holds, "method": "naive" if args.naive else "minimal-neighbourhood"}
    if res:
        out["witness"] = res.witness.to_json()
    else:
        out["offending_point"] = res.offending_point
    _emit(args, out)
    return EXIT_OK if res else EXIT_NEGATIVE


def cmd_nerve(args) -> int:
    ws = Workspace()
    space = _load_kind(ws, args.space, FiniteSpace, "space") if args.space else None
    cov = _covering_arg(ws, args.covering, space)
    g = nerve(cov)
    names = [",".join(cov.space.labels(m)) for m in cov.members]
    if args.dot:
        print(g.to_dot(names))
    else:
        _emit(args, {"vertices": [cov.space.labels(m) for m in cov.members], "edges": sorted(list(e) for e in g.edges)})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.theorem == "all":
        ids = list(CATALOG)
    else:
        ids = [theorem_id(args.theorem)]
    reports = []
    for tid in ids:
        n = args.max_points
        if args.theorem == "all" and tid in DOUBLY_QUANTIFIED:
            n = min(n, 3)
        reports.append(sweep(tid, n, budget_s=args.budget))
    payload = [r.to_json() for r in reports]
    _emit(args, payload[0] if len(payload) == 1 and args.theorem != "all" else payload)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_SWEEP


def build_parser() -> argparse.ArgumentParser:
    # Output flags are accepted before or after the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="compact JSON output (default)")
    fmt.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="indented JSON output")
    p = argparse.ArgumentParser(
        prog="fintop", description="Finite spaces, coverings and chains.", parents=[common]
    )
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, help, func):
        s = sub.add_parser(name, help=help, parents=[common])
        s.set_defaults(func=func)
        return s

    s = command("validate", "validate space, covering and map files", cmd_validate)
    s.add_argument("files", nargs="+")

    s = command("components", "print a component partition", cmd_components)
    s.add_argument("--space", required=True)
    s.add_argument("--kind", choices=["connected", "quasi", "chain", "u-chain"], required=True)
    s.add_argument("--covering", help="covering file, or 'basis' for the minimal-basis covering")

    s = command("chain", "find a shortest chain joining two points", cmd_chain)
    s.add_argument("--covering", required=True)
    s.add_argument("--space", help="needed with --covering basis")
    s.add_argument("x")
    s.add_argument("y")

    s = command("vcont", "decide continuity up to a covering", cmd_vcont)
    s.add_argument("--map", required=True)
    s.add_argument("--covering", required=True)
    s.add_argument("--naive", action="store_true", help="scan every neighbourhood instead")

    s = command("nerve", "print the nerve graph of a covering", cmd_nerve)
    s.add_argument("--covering", required=True)
    s.add_argument("--space")
    s.add_argument("--dot", action="store_true")

    s = command("verify", "sweep a claim (or 'all') over small spaces", cmd_verify)
    s.add_argument("theorem")
    s.add_argument("--max-points", type=int, default=3)
    s.add_argument("--budget", type=float, default=DEFAULT_BUDGET_S, help="seconds per claim")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.pretty = getattr(args, "pretty", False)
    try:
        return args.func(args)
    except (UnknownTheorem, CapExceeded) as e:
        print(f"fintop: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FintopError as e:
        _emit(args, _error_json(e))
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
