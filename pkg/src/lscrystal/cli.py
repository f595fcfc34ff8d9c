"""Command-line surface.

Exit codes are part of the interface: 0 success, 1 failed check or
invalid path, 2 bad parameters, 3 malformed input on stdin, 4 the two
operator engines disagree.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import GCM, dominance_class
from .explicit import (
    ExplicitPath,
    e_explicit,
    f_explicit,
    from_ls_path,
    to_ls_path,
    validate_explicit,
)
from .oracle import (
    SearchBounds,
    check_classification,
    check_connectedness,
    check_crystal_axioms,
    check_operator_equivalence,
    check_straight_through_lambda,
    check_structure,
    combine,
)
from .paths import LSPath, e_generic, f_generic, straight_path, weight
from .weyl import (
    orbit_weight,
    positive_roots_recurrence,
    positive_roots_weyl,
    pq_table,
    window_elements,
)

OK, CHECK_FAILED, BAD_PARAMS, MALFORMED_INPUT, ENGINES_DISAGREE = 0, 1, 2, 3, 4

GATED_CHECKS = ("classification", "connectedness", "straight", "axioms", "equivalence")


def _gcm_or_none(a: int, b: int) -> GCM | None:
    try:
        return GCM(a, b)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return None


def cmd_sequences(args) -> int:
    gcm = _gcm_or_none(args.a, args.b)
    if gcm is None:
        return BAD_PARAMS
    if args.n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return BAD_PARAMS
    table = pq_table(gcm, args.n)
    if args.json:
        print(json.dumps({"p": [str(v) for v in table.p], "q": [str(v) for v in table.q]}))
    else:
        print("p: " + " ".join(str(v) for v in table.p))
        print("q: " + " ".join(str(v) for v in table.q))
    return OK


def cmd_orbit(args) -> int:
    gcm = _gcm_or_none(args.a, args.b)
    if gcm is None:
        return BAD_PARAMS
    if args.m_max < 0:
        print("error: --m-max must be nonnegative", file=sys.stderr)
        return BAD_PARAMS
    rows = []
    for w in window_elements(args.m_max):
        wt = orbit_weight(w, gcm).weight
        rows.append((str(w), str(wt), dominance_class(wt)))
    if args.json:
        print(json.dumps([{"element": e, "weight": w, "class": c} for e, w, c in rows]))
    else:
        for e, w, c in rows:
            print(f"{e}: {w}, {c}")
    return OK


def cmd_positive_roots(args) -> int:
    gcm = _gcm_or_none(args.a, args.b)
    if gcm is None:
        return BAD_PARAMS
    if args.n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return BAD_PARAMS
    rec = positive_roots_recurrence(gcm, args.n)
    weyl = {r.coords for r in positive_roots_weyl(gcm, (args.n + 1) // 2)}
    stray = [coords for coords in rec if coords not in weyl]
    if stray:
        print(f"error: recurrence root {stray[0]} missing from the reflection orbit", file=sys.stderr)
        return CHECK_FAILED
    if args.json:
        print(json.dumps([list(coords) for coords in rec]))
    else:
        for c, d in rec:
            print(f"({c}, {d})")
    return OK


def _read_path_json() -> tuple[dict | None, int]:
    raw = sys.stdin.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as err:
        print(f"error: stdin is not JSON: {err}", file=sys.stderr)
        return None, MALFORMED_INPUT
    if not isinstance(data, dict) or not ({"form", "dirs"} & set(data)):
        print('error: expected an object with "form" or "dirs"', file=sys.stderr)
        return None, MALFORMED_INPUT
    return data, OK


def _parse_path(data: dict) -> tuple[LSPath | None, bool]:
    """Returns (path, came_as_explicit); raises ValueError on bad fields."""
    if "form" in data:
        return to_ls_path(ExplicitPath.from_json(data)), True
    return LSPath.from_json(data), False


_OPS_GENERIC = {"f1": (f_generic, 1), "f2": (f_generic, 2), "e1": (e_generic, 1), "e2": (e_generic, 2)}
_OPS_EXPLICIT = {"f1": (f_explicit, 1), "f2": (f_explicit, 2), "e1": (e_explicit, 1), "e2": (e_explicit, 2)}


def cmd_apply(args) -> int:
    gcm = _gcm_or_none(args.a, args.b)
    if gcm is None:
        return BAD_PARAMS
    if args.mode in ("explicit", "both") and gcm.boundary:
        print("error: the closed-form operators need a, b >= 2", file=sys.stderr)
        return BAD_PARAMS
    data, code = _read_path_json()
    if data is None:
        return code
    try:
        pi, as_explicit = _parse_path(data)
    except (ValueError, KeyError, TypeError) as err:
        print(f"error: bad path: {err}", file=sys.stderr)
        return MALFORMED_INPUT

    def emit(result: LSPath | None) -> None:
        if result is None:
            print("null")
        elif as_explicit:
            print(json.dumps(from_ls_path(result).to_json()))
        else:
            print(json.dumps(result.to_json()))

    if args.mode == "generic":
        op, i = _OPS_GENERIC[args.op]
        emit(op(pi, i, gcm))
        return OK

    try:
        ep = from_ls_path(pi)
        ep = validate_explicit(ep.form, ep.m, ep.s, ep.sigmas, gcm)
    except ValueError as err:
        print(f"error: not a normal form: {err}", file=sys.stderr)
        return MALFORMED_INPUT
    op_x, i = _OPS_EXPLICIT[args.op]
    closed = op_x(ep, i, gcm)
    if args.mode == "explicit":
        emit(None if closed is None else to_ls_path(closed))
        return OK

    op_g, i = _OPS_GENERIC[args.op]
    engine = op_g(pi, i, gcm)
    closed_pi = None if closed is None else to_ls_path(closed)
    if closed_pi != engine:
        print(
            json.dumps(
                {
                    "explicit": None if closed is None else closed.to_json(),
                    "generic": None if engine is None else engine.to_json(),
                }
            )
        )
        return ENGINES_DISAGREE
    emit(engine)
    return OK


def cmd_validate(args) -> int:
    gcm = _gcm_or_none(args.a, args.b)
    if gcm is None:
        return BAD_PARAMS
    if gcm.boundary:
        print("error: normal-form validation needs a, b >= 2", file=sys.stderr)
        return BAD_PARAMS
    data, code = _read_path_json()
    if data is None:
        return code
    try:
        if "form" in data:
            ep = ExplicitPath.from_json(data)
        else:
            ep = from_ls_path(LSPath.from_json(data))
        ep = validate_explicit(ep.form, ep.m, ep.s, ep.sigmas, gcm)
    except (KeyError, TypeError) as err:
        print(f"error: bad fields: {err}", file=sys.stderr)
        return MALFORMED_INPUT
    except ValueError as err:
        print(f"invalid: {err}", file=sys.stderr)
        return CHECK_FAILED
    print(json.dumps(ep.to_json()))
    return OK


def cmd_graph(args) -> int:
    gcm = _gcm_or_none(args.a, args.b)
    if gcm is None:
        return BAD_PARAMS
    if gcm.boundary:
        print("error: normal-form node labels need a, b >= 2", file=sys.stderr)
        return BAD_PARAMS
    if args.depth < 0:
        print("error: --depth must be nonnegative", file=sys.stderr)
        return BAD_PARAMS
    start = straight_path()
    order = [start]
    index = {start: 0}
    edges: list[tuple[int, int, str]] = []
    seen_edges: set[tuple[int, int, str]] = set()
    frontier = [start]
    for _ in range(args.depth):
        nxt = []
        for pi in frontier:
            for name, (op, i) in _OPS_GENERIC.items():
                img = op(pi, i, gcm)
                if img is None:
                    continue
                if img not in index:
                    index[img] = len(order)
                    order.append(img)
                    nxt.append(img)
                if name.startswith("f"):
                    edge = (index[pi], index[img], name)
                else:
                    edge = (index[img], index[pi], f"f{i}")
                if edge not in seen_edges:
                    seen_edges.add(edge)
                    edges.append(edge)
        frontier = nxt
    labels = [f"{from_ls_path(pi)} | {weight(pi, gcm)}" for pi in order]
    if args.format == "dot":
        lines = ["digraph crystal {"]
        for k, label in enumerate(labels):
            lines.append(f'  n{k} [label="{label}"];')
        for src, dst, name in edges:
            lines.append(f'  n{src} -> n{dst} [label="{name}"];')
        lines.append("}")
        print("\n".join(lines))
    else:
        doc = {
            "nodes": [
                {"id": f"n{k}", "label": labels[k], "path": from_ls_path(order[k]).to_json()}
                for k in range(len(order))
            ],
            "edges": [{"from": f"n{src}", "to": f"n{dst}", "label": name} for src, dst, name in edges],
        }
        print(json.dumps(doc))
    return OK


def cmd_verify(args) -> int:
    gcm = _gcm_or_none(args.a, args.b)
    if gcm is None:
        return BAD_PARAMS
    if args.m_max < 0 or args.s_max < 1:
        print("error: need --m-max >= 0 and --s-max >= 1", file=sys.stderr)
        return BAD_PARAMS
    if gcm.boundary and args.check in GATED_CHECKS:
        print(f"error: check '{args.check}' needs a, b >= 2", file=sys.stderr)
        return BAD_PARAMS
    bounds = SearchBounds(args.m_max, args.s_max)
    reports = []
    selected = args.check
    if selected in ("all", "classification") and not gcm.boundary:
        reports.append(check_classification(gcm, bounds))
    if selected in ("all", "connectedness") and not gcm.boundary:
        reports.append(check_connectedness(gcm, bounds))
    if selected in ("all", "straight") and not gcm.boundary:
        reports.append(check_straight_through_lambda(gcm, bounds))
    if selected in ("all", "axioms") and not gcm.boundary:
        reports.append(check_crystal_axioms(gcm, bounds))
    if selected in ("all", "equivalence") and not gcm.boundary:
        reports.append(check_operator_equivalence(gcm, args.m_max, args.s_max))
    if selected in ("all", "structure"):
        reports.append(check_structure(gcm, bounds))
    report = combine(*reports)
    for line in report.to_json_lines():
        print(line)
    return OK if report.all_passed else CHECK_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lscrystal",
        description="Exact crystal computations for rank-2 hyperbolic Cartan matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--a", type=int, required=True, help="off-diagonal entry -a(1,2)")
        p.add_argument("--b", type=int, required=True, help="off-diagonal entry -a(2,1)")

    p = sub.add_parser("sequences", help="print the p and q recurrence tables")
    common(p)
    p.add_argument("--n", type=int, default=10, help="largest index to print")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sequences)

    p = sub.add_parser("orbit", help="orbit weights in the window, top down")
    common(p)
    p.add_argument("--m-max", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("positive-roots", help="positive real roots by coefficient recurrence")
    common(p)
    p.add_argument("--n", type=int, default=10, help="roots per series")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_positive_roots)

    p = sub.add_parser("apply", help="apply a root operator to a path read from stdin")
    common(p)
    p.add_argument("--op", choices=sorted(_OPS_GENERIC), required=True)
    p.add_argument("--mode", choices=("generic", "explicit", "both"), default="both")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("validate", help="check a path from stdin against the normal forms")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("graph", help="crystal graph by breadth-first search from the straight path")
    common(p)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run brute-force verification checks")
    common(p)
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--s-max", type=int, default=3)
    p.add_argument(
        "check",
        choices=("all",) + GATED_CHECKS + ("structure",),
        help="which check family to run",
    )
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code) if err.code else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
