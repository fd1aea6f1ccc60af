"""JSON forms of tables, families, groups, actions and subsets.

Every ``*_from_json`` raises ``ValidationError`` on malformed input.
"""
from __future__ import annotations

import json

import numpy as np

from .action import BinaryActionTable, is_binary_action
from .core import BinOpTable, PermFamily
from .errors import BingspaceError, ValidationError
from .groups import FiniteGroup, group_axioms_hold
from .invariants import Subset


def _field(data, key):
    if not isinstance(data, dict):
        raise ValidationError(f"expected a JSON object, got {type(data).__name__}")
    try:
        return data[key]
    except KeyError:
        raise ValidationError(f"missing field {key!r}") from None


def _checked_n(data, actual):
    n = _field(data, "n")
    if n != actual:
        raise ValidationError(f"declared n={n} does not match data of size {actual}")


def binop_to_json(f: BinOpTable) -> dict:
    return {"n": f.n, "table": f.tolist()}


def binop_from_json(data) -> BinOpTable:
    try:
        f = BinOpTable(_field(data, "table"))
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad table: {exc}") from None
    _checked_n(data, f.n)
    return f


def family_to_json(fam: PermFamily) -> dict:
    return {"n": fam.n, "perms": [p.image.tolist() for p in fam.perms]}


def family_from_json(data) -> PermFamily:
    try:
        fam = PermFamily(_field(data, "perms"))
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad permutation family: {exc}") from None
    _checked_n(data, fam.n)
    return fam


def group_to_json(G: FiniteGroup) -> dict:
    return {"order": G.order, "mul": G.mul.tolist(), "identity": G.identity}


def group_from_json(data) -> FiniteGroup:
    try:
        G = FiniteGroup(_field(data, "mul"), identity=_field(data, "identity"))
    except BingspaceError:
        raise
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad Cayley table: {exc}") from None
    if _field(data, "order") != G.order:
        raise ValidationError(f"declared order {data['order']} does not match table size {G.order}")
    if not group_axioms_hold(G):
        raise ValidationError("Cayley table violates the group axioms")
    if "inv" in data and list(data["inv"]) != G.inv.tolist():
        raise ValidationError("stored inverses disagree with the Cayley table")
    return G


def action_to_json(A: BinaryActionTable) -> dict:
    return {
        "group": group_to_json(A.group),
        "n": A.n,
        "act": {str(g): binop_to_json(A.table(g)) for g in range(A.group.order)},
    }


def action_from_json(data, validate=True) -> BinaryActionTable:
    """Load an action; with ``validate`` the axioms are checked and the first
    violating ``(g, h, t, x)`` is attached to the raised error."""
    G = group_from_json(_field(data, "group"))
    acts = _field(data, "act")
    if not isinstance(acts, dict):
        raise ValidationError("'act' must map group-element keys to tables")
    expected = {str(g) for g in range(G.order)}
    if set(acts) != expected:
        raise ValidationError(f"'act' keys must be exactly 0..{G.order - 1}")
    tables = [binop_from_json(acts[str(g)]) for g in range(G.order)]
    n = _field(data, "n")
    if any(f.n != n for f in tables):
        raise ValidationError(f"every table must be {n} x {n}")
    A = BinaryActionTable(G, np.stack([f.table for f in tables]))
    if validate:
        verdict = is_binary_action(A)
        if not verdict:
            raise ValidationError("binary action axioms fail", verdict.witness)
    return A


def subset_to_json(S: Subset) -> dict:
    return {"n": S.n, "members": list(S.members)}


def subset_from_json(data) -> Subset:
    members = _field(data, "members")
    if list(members) != sorted(set(members)):
        raise ValidationError("members must be sorted and distinct")
    return Subset.of(_field(data, "n"), members)


def dumps(payload) -> str:
    """Canonical serialization used for every CLI payload."""
    return json.dumps(payload, sort_keys=True, indent=2)
