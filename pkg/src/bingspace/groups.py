"""Finite groups stored as full Cayley tables."""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

import numpy as np

from .core import check_carrier, h2_cayley_table, h2_index, identity_binop
from .errors import CapacityError, ValidationError

SYMMETRIC_MAX_K = 5


class FiniteGroup:
    """A group on ``range(order)`` given by ``mul[g, h] == g*h``.

    Construction only checks shapes and ranges; ``group_axioms_hold`` does the
    exhaustive validation.  ``inv[g]`` is -1 where no right inverse exists.
    """

    __slots__ = ("_mul", "_identity", "_inv")

    def __init__(self, mul, identity=None):
        arr = np.array(mul, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValidationError(f"Cayley table must be a non-empty square array, got shape {arr.shape}")
        m = arr.shape[0]
        if arr.min() < 0 or arr.max() >= m:
            raise ValidationError(f"Cayley table entries must lie in [0, {m})")
        if identity is None:
            identity = _find_identity(arr)
        if not 0 <= identity < m:
            raise ValidationError(f"identity index {identity} out of range")
        hits = arr == identity
        inv = np.where(hits.any(axis=1), hits.argmax(axis=1), -1)
        arr.flags.writeable = False
        inv.flags.writeable = False
        self._mul = arr
        self._identity = int(identity)
        self._inv = inv

    @property
    def order(self) -> int:
        return self._mul.shape[0]

    @property
    def mul(self) -> np.ndarray:
        return self._mul

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def inv(self) -> np.ndarray:
        return self._inv

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self._identity == other._identity and np.array_equal(self._mul, other._mul)

    def __hash__(self):
        return hash((self._identity, self._mul.tobytes()))

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, identity={self.identity})"


def _find_identity(mul):
    m = mul.shape[0]
    ar = np.arange(m)
    for e in range(m):
        if np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar):
            return e
    raise ValidationError("Cayley table has no two-sided identity")


def group_axioms_hold(G: FiniteGroup) -> bool:
    mul, e = G.mul, G.identity
    ar = np.arange(G.order)
    if not (np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar)):
        return False
    inv = G.inv
    if np.any(inv < 0) or np.any(mul[inv, ar] != e) or np.any(mul[ar, inv] != e):
        return False
    # (ab)c == a(bc) for all triples
    left = mul[mul[:, :, None], ar[None, None, :]]
    right = mul[ar[:, None, None], mul[None, :, :]]
    return bool(np.array_equal(left, right))


def is_abelian(G: FiniteGroup) -> bool:
    return bool(np.array_equal(G.mul, G.mul.T))


def group_element_orders(G: FiniteGroup) -> np.ndarray:
    mul, e = G.mul, G.identity
    orders = np.zeros(G.order, dtype=np.int64)
    for g in range(G.order):
        power, k = g, 1
        while power != e:
            power = mul[g, power]
            k += 1
            if k > G.order:
                raise ValidationError(f"element {g} has no finite order; table is not a group")
        orders[g] = k
    return orders


@dataclass(frozen=True)
class Fingerprint:
    order: int
    abelian: bool
    element_orders: tuple[int, ...]

    def to_json(self):
        return {"order": self.order, "abelian": self.abelian, "element_orders": list(self.element_orders)}


def structure_fingerprint(G: FiniteGroup) -> Fingerprint:
    return Fingerprint(G.order, is_abelian(G), tuple(sorted(group_element_orders(G).tolist())))


def relabel(G: FiniteGroup, sigma) -> FiniteGroup:
    """Isomorphic copy of G in which element ``g`` is renamed ``sigma[g]``."""
    sigma = np.asarray(sigma, dtype=np.int64)
    mul = np.empty_like(G.mul)
    mul[np.ix_(sigma, sigma)] = sigma[G.mul]
    return FiniteGroup(mul, identity=int(sigma[G.identity]))


def group_from_elements(elements, product) -> FiniteGroup:
    """Tabulate a closed list of hashable elements under ``product``."""
    index = {el: i for i, el in enumerate(elements)}
    m = len(elements)
    mul = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            try:
                mul[i, j] = index[product(a, b)]
            except KeyError:
                raise ValidationError("element list is not closed under the product") from None
    return FiniteGroup(mul)


def _compose_perm(p, q):
    return tuple(p[i] for i in q)


def cyclic_group(m) -> FiniteGroup:
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValidationError(f"cyclic group order must be a positive integer, got {m!r}")
    ar = np.arange(m)
    return FiniteGroup((ar[:, None] + ar[None, :]) % m, identity=0)


def symmetric_group(k) -> FiniteGroup:
    """All permutations of ``range(k)`` in lexicographic order; product is composition."""
    k = check_carrier(k)
    if k > SYMMETRIC_MAX_K:
        raise CapacityError(f"symmetric_group({k}) has order {math.factorial(k)} > 120")
    return group_from_elements(list(itertools.permutations(range(k))), _compose_perm)


def dihedral_group(k) -> FiniteGroup:
    """Symmetries of a regular k-gon, order 2k; element ``i + k*j`` is r^i s^j."""
    k = check_carrier(k)
    rot = tuple((i + 1) % k for i in range(k))
    ref = tuple((-i) % k for i in range(k))
    ident = tuple(range(k))

    def power(p, e):
        out = ident
        for _ in range(e):
            out = _compose_perm(p, out)
        return out

    elements = [_compose_perm(power(rot, i), power(ref, j)) for j in range(2) for i in range(k)]
    if len(set(elements)) != len(elements):
        # k <= 2: the polygon picture degenerates, fall back to Z_k x Z_2
        return direct_product(cyclic_group(k), cyclic_group(2))
    return group_from_elements(elements, _compose_perm)


def _quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quaternion_group() -> FiniteGroup:
    units = []
    for axis in range(4):
        for sign in (1, -1):
            v = [0, 0, 0, 0]
            v[axis] = sign
            units.append(tuple(v))
    return group_from_elements(units, _quat_mul)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with pair (g, h) stored at index ``g * |H| + h``."""
    a, b = G.order, H.order
    mul = (G.mul[:, None, :, None] * b + H.mul[None, :, None, :]).reshape(a * b, a * b)
    return FiniteGroup(mul, identity=G.identity * b + H.identity)


def klein_four_group() -> FiniteGroup:
    return direct_product(cyclic_group(2), cyclic_group(2))


def h2_group(n) -> FiniteGroup:
    """H2 on n points under the * product, elements in ``enumerate_h2`` order."""
    identity = int(h2_index(identity_binop(n).table))
    return FiniteGroup(h2_cayley_table(n), identity=identity)


_NAME = re.compile(r"^(Z|C|S|D)(\d+)$|^(Q8|K4|V4)$")


def group_by_name(name: str) -> FiniteGroup:
    """Parse names like ``Z4``, ``S3``, ``D4``, ``Q8``, ``K4`` and products ``Z2xZ4``."""
    parts = re.split(r"[xX×]", name.strip())
    if len(parts) > 1:
        out = group_by_name(parts[0])
        for p in parts[1:]:
            out = direct_product(out, group_by_name(p))
        return out
    match = _NAME.match(parts[0].upper())
    if not match:
        raise ValidationError(f"unknown group name {name!r}")
    if match.group(3):
        return quaternion_group() if match.group(3) == "Q8" else klein_four_group()
    kind, k = match.group(1), int(match.group(2))
    if kind in "ZC":
        return cyclic_group(k)
    if kind == "S":
        return symmetric_group(k)
    return dihedral_group(k)


def small_groups(max_order=8) -> dict[str, FiniteGroup]:
    """One representative per isomorphism type of order <= 8 (orders up to 8 only)."""
    if max_order > 8:
        raise CapacityError("only groups of order <= 8 are catalogued")
    catalogue = {
        "Z1": cyclic_group(1), "Z2": cyclic_group(2), "Z3": cyclic_group(3),
        "Z4": cyclic_group(4), "K4": klein_four_group(), "Z5": cyclic_group(5),
        "Z6": cyclic_group(6), "S3": symmetric_group(3), "Z7": cyclic_group(7),
        "Z8": cyclic_group(8), "Z2xZ4": group_by_name("Z2xZ4"),
        "Z2xZ2xZ2": group_by_name("Z2xZ2xZ2"), "D4": dihedral_group(4),
        "Q8": quaternion_group(),
    }
    return {k: G for k, G in catalogue.items() if G.order <= max_order}
