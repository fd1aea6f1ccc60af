"""Binary G-spaces on finite carriers.

A binary action of G on X is a map ``alpha(g, t, x)`` with
``alpha(gh, t, x) == alpha(g, t, alpha(h, t, x))`` and ``alpha(e, t, x) == x``.
It is stored extensionally as an ``(m, n, n)`` array, one operation table per
group element.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import kernels
from .core import BinOpTable
from .errors import CapacityError, DimensionError, ValidationError
from .groups import FiniteGroup

HOMSET_MAX = 10**6


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check; truthy iff it passed."""

    ok: bool
    witness: Optional[dict] = None

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


def _int_array(data, ndim, what):
    arr = np.array(data, dtype=np.int64)
    if arr.ndim != ndim:
        raise ValidationError(f"{what} must be {ndim}-dimensional, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


class BinaryActionTable:
    """``act[g, t, x] == alpha(g, t, x)``; axioms are not checked here."""

    __slots__ = ("group", "act")

    def __init__(self, group: FiniteGroup, act):
        act = _int_array(act, 3, "binary action table")
        m, n, n2 = act.shape
        if m != group.order or n != n2 or n < 1:
            raise DimensionError(f"action shape {act.shape} does not fit a group of order {group.order}")
        if act.min() < 0 or act.max() >= n:
            raise ValidationError(f"action entries must lie in [0, {n})")
        self.group = group
        self.act = act

    @property
    def n(self) -> int:
        return self.act.shape[1]

    def table(self, g) -> BinOpTable:
        """The operation ``alpha_g``."""
        return BinOpTable._trusted(self.act[g])

    @property
    def tables(self) -> list[BinOpTable]:
        return [self.table(g) for g in range(self.group.order)]

    def __eq__(self, other):
        if not isinstance(other, BinaryActionTable):
            return NotImplemented
        return self.group == other.group and np.array_equal(self.act, other.act)

    def __hash__(self):
        return hash((self.group, self.act.tobytes()))

    def __repr__(self):
        return f"BinaryActionTable(order={self.group.order}, n={self.n})"


class OrdinaryActionTable:
    """``act[g, x] == g . x``."""

    __slots__ = ("group", "act")

    def __init__(self, group: FiniteGroup, act):
        act = _int_array(act, 2, "action table")
        m, n = act.shape
        if m != group.order or n < 1:
            raise DimensionError(f"action shape {act.shape} does not fit a group of order {group.order}")
        if act.min() < 0 or act.max() >= n:
            raise ValidationError(f"action entries must lie in [0, {n})")
        self.group = group
        self.act = act

    @property
    def n(self) -> int:
        return self.act.shape[1]

    def __eq__(self, other):
        if not isinstance(other, OrdinaryActionTable):
            return NotImplemented
        return self.group == other.group and np.array_equal(self.act, other.act)

    def __hash__(self):
        return hash((self.group, self.act.tobytes()))

    def __repr__(self):
        return f"OrdinaryActionTable(order={self.group.order}, n={self.n})"


class FiniteMap:
    """A map ``range(len(image)) -> range(codomain)``."""

    __slots__ = ("image", "codomain")

    def __init__(self, image, codomain=None):
        image = _int_array(image, 1, "map image")
        if image.size < 1:
            raise ValidationError("a map needs a non-empty domain")
        if codomain is None:
            codomain = int(image.max()) + 1
        if image.min() < 0 or image.max() >= codomain:
            raise ValidationError(f"map values must lie in [0, {codomain})")
        self.image = image
        self.codomain = int(codomain)

    @classmethod
    def identity(cls, n) -> FiniteMap:
        return cls(np.arange(n), n)

    @property
    def domain(self) -> int:
        return self.image.size

    def __call__(self, x) -> int:
        return int(self.image[x])

    def after(self, other: FiniteMap) -> FiniteMap:
        """Composite ``self o other``."""
        if other.codomain != self.domain:
            raise DimensionError("maps are not composable")
        return FiniteMap(self.image[other.image], self.codomain)

    def is_bijective(self) -> bool:
        return self.domain == self.codomain and np.unique(self.image).size == self.domain

    def inverse(self) -> FiniteMap:
        if not self.is_bijective():
            raise ValidationError("only bijections have inverses")
        return FiniteMap(np.argsort(self.image), self.domain)

    def __eq__(self, other):
        if not isinstance(other, FiniteMap):
            return NotImplemented
        return self.codomain == other.codomain and np.array_equal(self.image, other.image)

    def __hash__(self):
        return hash((self.codomain, self.image.tobytes()))

    def __repr__(self):
        return f"FiniteMap({self.image.tolist()}, codomain={self.codomain})"


def _decode_action_witness(w):
    kind = int(w[0])
    if kind < 0:
        return None
    g, h, t, x = (int(v) for v in w[1:])
    return {"axiom": "identity" if kind == 0 else "composition",
            "g": g, "h": None if kind == 0 else h, "t": t, "x": x}


def is_binary_action(cand: BinaryActionTable) -> Verdict:
    """Exhaustive scan of both axioms over all ``(g, h, t, x)``."""
    w = kernels.action_witness(cand.act, cand.group.mul, cand.group.identity, True)
    witness = _decode_action_witness(w)
    return PASS if witness is None else Verdict(False, witness)


def homomorphism_to_h2_holds(A: BinaryActionTable) -> Verdict:
    """``g -> alpha_g`` lands in H2 and ``alpha_{gh} == alpha_g * alpha_h``."""
    bij = kernels.rows_bijective(A.act)
    if not bij.all():
        g = int(np.argmin(bij))
        row = int(np.argmax([np.unique(r).size < A.n for r in A.act[g]]))
        return Verdict(False, {"property": "invertible", "g": g, "t": row})
    w = kernels.action_witness(A.act, A.group.mul, A.group.identity, False)
    witness = _decode_action_witness(w)
    return PASS if witness is None else Verdict(False, witness)


def is_ordinary_action(theta: OrdinaryActionTable) -> Verdict:
    G, act = theta.group, theta.act
    bad = np.flatnonzero(act[G.identity] != np.arange(theta.n))
    if bad.size:
        return Verdict(False, {"axiom": "identity", "g": G.identity, "h": None, "x": int(bad[0])})
    # act[gh][x] == act[g][act[h][x]]
    lhs = act[G.mul]
    rhs = act[np.arange(G.order)[:, None, None], act[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        g, h, x = (int(v) for v in bad[0])
        return Verdict(False, {"axiom": "composition", "g": g, "h": h, "x": x})
    return PASS


def conjugation_action(G: FiniteGroup) -> BinaryActionTable:
    """G acting on itself by ``alpha(g, h1, h2) = h1 g h1^-1 h2``."""
    mul, inv = G.mul, G.inv
    ar = np.arange(G.order)
    conj = mul[mul[ar[:, None], ar[None, :]], inv[:, None]]  # conj[h1, g] = h1 g h1^-1
    return BinaryActionTable(G, mul[conj.T[:, :, None], ar[None, None, :]])


def trivial_action(G: FiniteGroup, n) -> BinaryActionTable:
    """Every group element acts as ``e(t, x) = x``."""
    return BinaryActionTable(G, np.broadcast_to(np.arange(n), (G.order, n, n)))


def left_translation(G: FiniteGroup) -> OrdinaryActionTable:
    return OrdinaryActionTable(G, G.mul)


def induced_action(A: BinaryActionTable, t) -> OrdinaryActionTable:
    """Freeze the first carrier argument: ``alpha_t(g, x) = alpha(g, t, x)``."""
    if not 0 <= t < A.n:
        raise IndexError(f"point {t} outside carrier of size {A.n}")
    return OrdinaryActionTable(A.group, A.act[:, t, :])


def from_ordinary(theta: OrdinaryActionTable) -> BinaryActionTable:
    """Binary action ``g(x, x') = g . x'`` that ignores its first argument."""
    verdict = is_ordinary_action(theta)
    if not verdict:
        raise ValidationError("not an ordinary action", verdict.witness)
    m, n = theta.act.shape
    return BinaryActionTable(theta.group, np.broadcast_to(theta.act[:, None, :], (m, n, n)))


def _check_compatible(f: FiniteMap, A, B):
    if A.group != B.group:
        raise DimensionError("actions are over different groups")
    if f.domain != A.n or f.codomain != B.n:
        raise DimensionError(f"map {f.domain}->{f.codomain} does not fit carriers {A.n}->{B.n}")


def is_biequivariant(f: FiniteMap, A: BinaryActionTable, B: BinaryActionTable) -> bool:
    """``f(alpha(g, t, x)) == beta(g, f(t), f(x))`` for all ``(g, t, x)``."""
    _check_compatible(f, A, B)
    img = f.image
    return bool(np.array_equal(img[A.act], B.act[:, img[:, None], img[None, :]]))


def is_equivariant(f: FiniteMap, theta: OrdinaryActionTable, psi: OrdinaryActionTable) -> bool:
    _check_compatible(f, theta, psi)
    return bool(np.array_equal(f.image[theta.act], psi.act[:, f.image]))


def enumerate_biequivariant_maps(A: BinaryActionTable, B: BinaryActionTable) -> Iterator[FiniteMap]:
    """Every bi-equivariant map A -> B, images in lexicographic order."""
    if A.group != B.group:
        raise DimensionError("actions are over different groups")
    nA, nB, m = A.n, B.n, A.group.order
    total = nB ** nA
    if total > HOMSET_MAX:
        raise CapacityError(f"{total} candidate maps exceeds {HOMSET_MAX}")
    chunk = max(1, 2**22 // (m * nA * nA))
    g_idx = np.arange(m)[None, :, None, None]
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        F = (codes[:, None] // nB ** np.arange(nA - 1, -1, -1)) % nB
        lhs = F[:, A.act]
        rhs = B.act[g_idx, F[:, None, :, None], F[:, None, None, :]]
        ok = np.all(lhs == rhs, axis=(1, 2, 3))
        for row in F[ok]:
            yield FiniteMap(row, nB)


def product_gspace(A: BinaryActionTable) -> OrdinaryActionTable:
    """G acting on pairs by ``g . (x, x') = (x, g(x, x'))``; pair index is ``x*n + x'``."""
    n = A.n
    act = (np.arange(n) * n)[None, :, None] + A.act
    return OrdinaryActionTable(A.group, act.reshape(A.group.order, n * n))


def lift_map(f: FiniteMap) -> FiniteMap:
    """``(x, x') -> (f(x), f(x'))`` on row-major pair indices."""
    img, k = f.image, f.codomain
    return FiniteMap((img[:, None] * k + img[None, :]).ravel(), k * k)


def conjugation_map(G: FiniteGroup, h) -> FiniteMap:
    """``y -> h^-1 y h``."""
    return FiniteMap(G.mul[G.mul[G.inv[h]], h], G.order)


def conjugation_intertwiner(G: FiniteGroup, h) -> FiniteMap:
    """``y -> h y h^-1``; carries the induced action at e onto the one at h."""
    return FiniteMap(G.mul[G.mul[h], G.inv[h]], G.order)
