"""Invariant subsets and orbits of finite binary G-spaces.

For ``S`` a subset of the carrier, ``G S = {g(a, a') : g in G, a, a' in S}``;
``S`` is invariant when ``G S == S``.  Intersections of invariant sets are
invariant, so on a finite carrier the intersection of all invariant sets
containing ``x`` is the least one.  ``orbit`` reaches it as the least fixpoint
of ``S -> S | G S`` seeded with ``{x}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .action import BinaryActionTable, Verdict, PASS
from .errors import CapacityError, DistributivityError, ValidationError

SUBSET_ENUM_MAX_N = 20
CLOSURE_MAX_N = 4096


@dataclass(frozen=True)
class Subset:
    """A subset of ``range(n)`` stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValidationError(f"mask {self.mask:#x} has bits outside range({self.n})")

    @classmethod
    def of(cls, n, members: Iterable[int]) -> Subset:
        mask = 0
        for v in members:
            v = int(v)
            if not 0 <= v < n:
                raise ValidationError(f"member {v} outside range({n})")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n) -> Subset:
        return cls(n, (1 << n) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.mask >> i & 1)

    @property
    def indices(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    def __contains__(self, x):
        return 0 <= x < self.n and bool(self.mask >> x & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def __iter__(self):
        return iter(self.members)

    def __and__(self, other: Subset) -> Subset:
        return Subset(self.n, self.mask & other.mask)

    def __or__(self, other: Subset) -> Subset:
        return Subset(self.n, self.mask | other.mask)

    def __le__(self, other: Subset) -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self):
        return f"Subset(n={self.n}, members={list(self.members)})"


def _same_n(A, S):
    if S.n != A.n:
        raise ValidationError(f"subset of a {S.n}-point set used with a {A.n}-point action")


def _subset_from_values(n, values) -> Subset:
    return Subset.of(n, np.unique(values).tolist())


def _check_point(A, x):
    if not 0 <= x < A.n:
        raise IndexError(f"point {x} outside carrier of size {A.n}")


def apply_g(A: BinaryActionTable, g, S: Subset) -> Subset:
    """``g S = {g(a, a') : a, a' in S}``."""
    _same_n(A, S)
    if not 0 <= g < A.group.order:
        raise IndexError(f"group element {g} out of range")
    idx = S.indices
    return _subset_from_values(A.n, A.act[g][np.ix_(idx, idx)])


def apply_set(A: BinaryActionTable, K: Iterable[int], S: Subset) -> Subset:
    """``K S``, the union of ``g S`` over ``g in K``."""
    _same_n(A, S)
    K = np.asarray(list(K), dtype=np.int64)
    idx = S.indices
    if K.size == 0 or idx.size == 0:
        return Subset(A.n)
    return _subset_from_values(A.n, A.act[np.ix_(K, idx, idx)])


def is_invariant(A: BinaryActionTable, S: Subset) -> bool:
    return apply_set(A, range(A.group.order), S) == S


def orbit(A: BinaryActionTable, x) -> Subset:
    """Least invariant set containing ``x``.

    Each round only evaluates pairs with at least one coordinate added in the
    previous round, so there are at most n rounds of O(|G| n^2) work.
    """
    _check_point(A, x)
    if A.n > CLOSURE_MAX_N:
        raise CapacityError(f"closure is capped at n <= {CLOSURE_MAX_N}")
    inside = np.zeros(A.n, dtype=bool)
    inside[x] = True
    new = np.array([x], dtype=np.int64)
    while new.size:
        old = np.flatnonzero(inside)
        vals = np.concatenate([
            A.act[:, old[:, None], new[None, :]].ravel(),
            A.act[:, new[:, None], old[None, :]].ravel(),
        ])
        cand = np.unique(vals)
        new = cand[~inside[cand]]
        inside[new] = True
    return Subset.of(A.n, np.flatnonzero(inside))


def g_xx_set(A: BinaryActionTable, x) -> Subset:
    """``G(x, x) = {g(x, x) : g in G}``."""
    _check_point(A, x)
    return _subset_from_values(A.n, A.act[:, x, x])


def g_xy_set(A: BinaryActionTable, x, y) -> Subset:
    """``G(x, y) = {g(x, y) : g in G}``."""
    _check_point(A, x)
    _check_point(A, y)
    return _subset_from_values(A.n, A.act[:, x, y])


def is_distributive(A: BinaryActionTable) -> Verdict:
    """Exhaustive check of ``g(h(x,x'), h(x,x'')) == h(x, g(x',x''))``."""
    w = kernels.distributive_witness(A.act)
    if w[0] < 0:
        return PASS
    g, h, x, x1, x2 = (int(v) for v in w)
    return Verdict(False, {"g": g, "h": h, "x": x, "x1": x1, "x2": x2})


@dataclass
class Theorem8Report:
    points_checked: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self):
        return {"points_checked": self.points_checked, "violations": self.violations, "ok": self.ok}


def check_theorem8(A: BinaryActionTable) -> Theorem8Report:
    """In a distributive binary G-space every ``G(x, x)`` is invariant; check each x."""
    verdict = is_distributive(A)
    if not verdict:
        raise DistributivityError(f"action is not distributive: {verdict.witness}")
    report = Theorem8Report(points_checked=A.n)
    for x in range(A.n):
        gxx = g_xx_set(A, x)
        image = apply_set(A, range(A.group.order), gxx)
        if image != gxx:
            report.violations.append({"x": x, "g_xx": list(gxx.members), "image": list(image.members)})
    return report


def pair_masks(A: BinaryActionTable) -> np.ndarray:
    """``out[a, b]`` is the bitmask of ``{g(a, b) : g in G}`` (n <= 62)."""
    return np.bitwise_or.reduce(np.left_shift(np.int64(1), A.act), axis=0)


def enumerate_invariant_subsets(A: BinaryActionTable) -> Iterator[Subset]:
    """All invariant subsets in increasing bitmask order."""
    if A.n > SUBSET_ENUM_MAX_N:
        raise CapacityError(f"subset enumeration is capped at n <= {SUBSET_ENUM_MAX_N}")
    img = kernels.invariant_images(pair_masks(A))
    for mask in np.flatnonzero(img == np.arange(img.size)):
        yield Subset(A.n, int(mask))


def explore(A: BinaryActionTable) -> dict:
    """Gather data on unions of invariant sets and invariance of G(x, x) and G(x, x').

    Nothing here asserts an answer; the dict only records what was observed.
    """
    out = {"n": A.n, "group_order": A.group.order, "distributive": bool(is_distributive(A))}
    if A.n <= SUBSET_ENUM_MAX_N:
        inv = list(enumerate_invariant_subsets(A))
        masks = {S.mask for S in inv}
        counterexample = None
        for i, S in enumerate(inv):
            for T in inv[i + 1:]:
                if (S.mask | T.mask) not in masks:
                    counterexample = [list(S.members), list(T.members)]
                    break
            if counterexample:
                break
        out["invariant_subsets"] = len(inv)
        out["unions_invariant"] = counterexample is None
        out["union_counterexample"] = counterexample
    gxx_invariant = {}
    gxy = []
    for x in range(A.n):
        gxx = g_xx_set(A, x)
        gxx_invariant[str(x)] = is_invariant(A, gxx)
        for y in range(A.n):
            if y not in gxx:
                S = g_xy_set(A, x, y)
                gxy.append({"x": x, "x_prime": y, "members": list(S.members), "invariant": is_invariant(A, S)})
    out["g_xx_invariant"] = gxx_invariant
    out["g_xy_outside_g_xx"] = gxy
    return out
