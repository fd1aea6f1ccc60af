"""Command-line interface.

Exit codes: 0 every check passed, 1 a property failed (the payload carries a
witness), 2 bad input.  JSON goes to stdout, summaries to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import affine, core
from .action import (
    conjugation_action,
    from_ordinary,
    homomorphism_to_h2_holds,
    induced_action,
    is_binary_action,
    is_ordinary_action,
    left_translation,
    trivial_action,
)
from .errors import BingspaceError
from .groups import group_by_name, h2_group, small_groups, structure_fingerprint
from .invariants import (
    check_theorem8,
    enumerate_invariant_subsets,
    explore,
    g_xx_set,
    is_distributive,
    is_invariant,
    orbit,
)
from .serialize import action_from_json, action_to_json, dumps


class InputError(Exception):
    pass


def _load_action(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return action_from_json(data, validate=False)


def cmd_enumerate(args):
    fast = core.enumerate_h2_array(args.n) if args.mode == "fast" or args.cross_check else None
    brute = core.brute_invertible_array(args.n) if args.mode == "brute" or args.cross_check else None
    tables = fast if args.mode == "fast" else brute
    payload = {"n": args.n, "mode": args.mode, "count": int(tables.shape[0])}
    code = 0
    if args.cross_check:
        a = {t.tobytes() for t in fast}
        b = {t.tobytes() for t in brute}
        payload["equal"] = a == b
        if a != b:
            code = 1
            only = sorted(a ^ b)[:1]
            payload["witness"] = np.frombuffer(only[0], dtype=np.int64).reshape(args.n, args.n).tolist()
    if args.list:
        payload["tables"] = tables.tolist()
    _say(args, f"|H2| on {args.n} points: {payload['count']}")
    return code, payload


def cmd_cayley(args):
    G = h2_group(args.n)
    fp = structure_fingerprint(G)
    _say(args, f"H2({args.n}) fingerprint: {fp.to_json()}")
    if args.format == "csv":
        lines = [",".join(str(v) for v in row) for row in G.mul.tolist()]
        return 0, "\n".join(lines)
    payload = {"n": args.n, "order": G.order, "identity": G.identity, "fingerprint": fp.to_json(),
               "table": G.mul.tolist()}
    return 0, payload


def cmd_gen(args):
    G = group_by_name(args.group)
    if args.kind == "conj":
        A = conjugation_action(G)
    elif args.kind == "regular":
        A = from_ordinary(left_translation(G))
    else:
        A = trivial_action(G, args.n)
    _say(args, f"generated {args.kind} action of {args.group} on {A.n} points")
    return 0, action_to_json(A)


def cmd_check_action(args):
    A = _load_action(args.file)
    axioms = is_binary_action(A)
    hom = homomorphism_to_h2_holds(A)
    induced = {}
    for t in range(A.n):
        v = is_ordinary_action(induced_action(A, t))
        induced[str(t)] = {"ok": v.ok, "witness": v.witness}
    ok = axioms.ok and hom.ok and all(v["ok"] for v in induced.values())
    payload = {
        "binary_action": {"ok": axioms.ok, "witness": axioms.witness},
        "homomorphism_to_h2": {"ok": hom.ok, "witness": hom.witness},
        "induced_actions": induced,
        "ok": ok,
    }
    _say(args, "action axioms hold" if ok else f"violation: {axioms.witness or hom.witness}")
    return (0 if ok else 1), payload


def cmd_orbit(args):
    A = _load_action(args.file)
    if not 0 <= args.x < A.n:
        raise InputError(f"point {args.x} outside carrier of size {A.n}")
    orb = orbit(A, args.x)
    gxx = g_xx_set(A, args.x)
    dist = is_distributive(A)
    gxx_inv = is_invariant(A, gxx)
    payload = {
        "x": args.x,
        "orbit": list(orb.members),
        "g_xx": list(gxx.members),
        "g_xx_invariant": gxx_inv,
        "distributive": dist.ok,
        "distributivity_witness": dist.witness,
    }
    code = 0
    if dist.ok:
        payload["theorem8_holds"] = gxx_inv
        if not gxx_inv:
            code = 1
            payload["witness"] = {"x": args.x, "g_xx": list(gxx.members)}
    _say(args, f"orbit of {args.x}: {list(orb.members)}")
    return code, payload


def cmd_invariants(args):
    A = _load_action(args.file)
    subsets = list(enumerate_invariant_subsets(A))
    masks = {S.mask for S in subsets}
    code, payload = 0, {"n": A.n, "invariant_subsets": [list(S.members) for S in subsets]}
    for i, S in enumerate(subsets):
        for T in subsets[i + 1:]:
            if (S.mask & T.mask) not in masks:
                code = 1
                payload["witness"] = {"a": list(S.members), "b": list(T.members)}
                break
        if code:
            break
    payload["intersections_invariant"] = code == 0
    if args.explore:
        payload["exploration"] = explore(A)
    _say(args, f"{len(subsets)} invariant subsets")
    return code, payload


def cmd_distributive(args):
    A = _load_action(args.file)
    dist = is_distributive(A)
    payload = {"distributive": dist.ok, "witness": dist.witness}
    if not dist.ok:
        _say(args, f"not distributive: {dist.witness}")
        return 1, payload
    report = check_theorem8(A)
    payload["theorem8"] = report.to_json()
    _say(args, "distributive; G(x,x) invariant at every x" if report.ok else "theorem 8 violated")
    return (0 if report.ok else 1), payload


def cmd_sweep(args):
    results = {}
    for name, G in small_groups(args.max_order).items():
        results[name] = explore(conjugation_action(G))
    _say(args, f"explored conjugation actions of {len(results)} groups")
    return 0, {"max_order": args.max_order, "groups": results}


def _vector(text, d):
    try:
        v = np.array([float(s) for s in text.split(",")])
    except ValueError:
        raise InputError(f"bad vector {text!r}") from None
    if v.size != d:
        raise InputError(f"vector {text!r} does not have dimension {d}")
    return v


def cmd_numeric(args):
    d = args.dim
    if d < 1 or args.samples < 0 or not args.tol >= 0:
        raise InputError("need --dim >= 1, --samples >= 0 and --tol >= 0")
    if args.check == "axioms":
        report = affine.check_action_axioms(args.samples, d, args.seed, args.tol)
        payload = report.to_json()
    elif args.check == "equivariance":
        a = _vector(args.a, d) if args.a else np.random.default_rng([args.seed, 1]).uniform(-1, 1, d)
        report = affine.check_translation_equivariance(a, args.samples, args.seed, args.tol)
        payload = report.to_json()
        payload["a"] = a.tolist()
    else:
        x = _vector(args.x, d) if args.x else np.zeros(d)
        y = _vector(args.y, d) if args.y else np.eye(d)[0]
        payload = affine.demo_union_not_invariant(x, y, args.tol)
        code = 0 if payload["found"] else 1
        if code:
            payload["witness"] = {"reason": "no candidate matrix moved the pair off {x, y}"}
        _say(args, f"{len(payload['witnesses'])} witnesses")
        return code, payload
    _say(args, f"{args.check}: max residual {payload['max_residual']:.3e} (tol {args.tol:g})")
    return (0 if report.ok else 1), payload


def build_parser():
    parser = argparse.ArgumentParser(prog="bingspace", description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="no summaries on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate invertible operation tables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["fast", "brute"], default="fast")
    p.add_argument("--list", action="store_true")
    p.add_argument("--cross-check", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("cayley", help="Cayley table of H2 and its fingerprint")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("gen", help="write a fixture action as JSON")
    p.add_argument("kind", choices=["conj", "regular", "trivial"])
    p.add_argument("--group", required=True, help="e.g. Z4, S3, D4, Q8, K4, Z2xZ4")
    p.add_argument("--n", type=int, default=1, help="carrier size for the trivial action")
    p.set_defaults(func=cmd_gen)

    for name, func, text in [
        ("check-action", cmd_check_action, "verify the binary action axioms"),
        ("invariants", cmd_invariants, "enumerate invariant subsets"),
        ("distributive", cmd_distributive, "check distributivity and invariance of G(x,x)"),
        ("orbit", cmd_orbit, "orbit and G(x,x) of a point"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        if name == "orbit":
            p.add_argument("--x", type=int, required=True)
        if name == "invariants":
            p.add_argument("--explore", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("sweep", help="explore conjugation actions of all groups up to an order")
    p.add_argument("--max-order", type=int, default=8)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("numeric", help="checks of the affine GL(d,R) action")
    p.add_argument("check", choices=["axioms", "equivariance", "union-demo"])
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=affine.DEFAULT_SEED)
    p.add_argument("--tol", type=float, default=affine.DEFAULT_TOL)
    p.add_argument("--a", help="base point for equivariance, comma separated")
    p.add_argument("--x", help="first point for union-demo")
    p.add_argument("--y", help="second point for union-demo")
    p.set_defaults(func=cmd_numeric)
    return parser


def _say(args, message):
    if not args.quiet:
        print(message, file=sys.stderr)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload = args.func(args)
    except (InputError, BingspaceError, IndexError) as exc:
        print(dumps({"error": str(exc)}))
        if not args.quiet:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    print(payload if isinstance(payload, str) else dumps(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
