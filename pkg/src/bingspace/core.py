"""Binary operations on a finite carrier ``{0, ..., n-1}``.

A binary operation is stored as an ``n x n`` table whose entry ``(t, x)`` is
``f(t, x)``.  The product is ``(f * g)(t, x) = f(t, g(t, x))``; it makes the
tables a monoid whose identity is ``e(t, x) = x``.  Its unit group is the set of
tables in which every row is a permutation.
"""
from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from ._caps import carrier_cap, require_at_most
from .errors import CapacityError, DimensionError, NotInvertibleError, ValidationError

H2_MAX_N = 4
BRUTE_MAX_N = 3


def check_carrier(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValidationError(f"carrier size must be a positive integer, got {n!r}")
    return int(n)


def _frozen(arr):
    arr.flags.writeable = False
    return arr


class BinOpTable:
    """An immutable n x n operation table; ``table[t, x] == f(t, x)``."""

    __slots__ = ("_table",)

    def __init__(self, table):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValidationError(f"table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise ValidationError(f"table entries must lie in [0, {n})")
        self._table = _frozen(arr)

    @classmethod
    def _trusted(cls, arr) -> BinOpTable:
        obj = cls.__new__(cls)
        obj._table = _frozen(np.ascontiguousarray(arr, dtype=np.int64))
        return obj

    @property
    def n(self) -> int:
        return self._table.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._table

    def __call__(self, t, x) -> int:
        return int(self._table[t, x])

    def __mul__(self, other):
        if not isinstance(other, BinOpTable):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, BinOpTable):
            return NotImplemented
        return self._table.shape == other._table.shape and bool(np.array_equal(self._table, other._table))

    def __hash__(self):
        return hash((self.n, self._table.tobytes()))

    def __repr__(self):
        return f"BinOpTable({self._table.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self._table.tolist()


class Permutation:
    """A bijection of ``range(n)`` given by its image list."""

    __slots__ = ("_image",)

    def __init__(self, image):
        arr = np.array(image, dtype=np.int64)
        if arr.ndim != 1 or arr.size < 1:
            raise ValidationError("permutation image must be a non-empty 1-D sequence")
        if not np.array_equal(np.sort(arr), np.arange(arr.size)):
            raise ValidationError(f"{arr.tolist()} is not a permutation of range({arr.size})")
        self._image = _frozen(arr)

    @classmethod
    def identity(cls, n) -> Permutation:
        return cls(range(check_carrier(n)))

    @property
    def n(self) -> int:
        return self._image.size

    @property
    def image(self) -> np.ndarray:
        return self._image

    def __call__(self, x) -> int:
        return int(self._image[x])

    def __mul__(self, other):
        """Composition ``(self * other)(x) == self(other(x))``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.n != self.n:
            raise DimensionError("permutations act on different carriers")
        return Permutation(self._image[other._image])

    def inverse(self) -> Permutation:
        return Permutation(np.argsort(self._image))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return bool(np.array_equal(self._image, other._image))

    def __hash__(self):
        return hash(self._image.tobytes())

    def __repr__(self):
        return f"Permutation({self._image.tolist()})"


class PermFamily:
    """A point-indexed family ``t -> perms[t]`` of permutations of one carrier."""

    __slots__ = ("_perms",)

    def __init__(self, perms: Sequence):
        perms = tuple(p if isinstance(p, Permutation) else Permutation(p) for p in perms)
        if not perms:
            raise ValidationError("a permutation family needs at least one member")
        n = len(perms)
        if any(p.n != n for p in perms):
            raise ValidationError(f"every member of a family on {n} points must permute {n} points")
        self._perms = perms

    @property
    def n(self) -> int:
        return len(self._perms)

    @property
    def perms(self) -> tuple[Permutation, ...]:
        return self._perms

    def __getitem__(self, t) -> Permutation:
        return self._perms[t]

    def __mul__(self, other):
        """Pointwise composition ``(F * G)[t] == F[t] * G[t]``."""
        if not isinstance(other, PermFamily):
            return NotImplemented
        if other.n != self.n:
            raise DimensionError("families live on different carriers")
        return PermFamily([p * q for p, q in zip(self._perms, other._perms)])

    def __eq__(self, other):
        if not isinstance(other, PermFamily):
            return NotImplemented
        return self._perms == other._perms

    def __hash__(self):
        return hash(self._perms)

    def __repr__(self):
        return f"PermFamily({[p.image.tolist() for p in self._perms]})"


def _same_carrier(f, g):
    if f.n != g.n:
        raise DimensionError(f"carrier mismatch: {f.n} vs {g.n}")


def identity_binop(n) -> BinOpTable:
    n = check_carrier(n)
    return BinOpTable._trusted(np.tile(np.arange(n, dtype=np.int64), (n, 1)))


def compose(f: BinOpTable, g: BinOpTable) -> BinOpTable:
    """``(f * g)(t, x) = f(t, g(t, x))``."""
    _same_carrier(f, g)
    return BinOpTable._trusted(np.take_along_axis(f.table, g.table, axis=1))


def slice_at(f: BinOpTable, t) -> tuple[int, ...]:
    """The unary map ``x -> f(t, x)`` as an image tuple."""
    if not 0 <= t < f.n:
        raise IndexError(f"point {t} outside carrier of size {f.n}")
    return tuple(f.table[t].tolist())


def is_invertible(f: BinOpTable) -> bool:
    return bool(kernels.rows_bijective(f.table[None])[0])


def _require_invertible(f):
    if not is_invertible(f):
        raise NotInvertibleError(f"operation {f.tolist()} has a non-bijective row")


def invert(f: BinOpTable) -> BinOpTable:
    """Row-wise inverse: ``f^{-1}(t, x) = f_t^{-1}(x)``."""
    _require_invertible(f)
    return BinOpTable._trusted(np.argsort(f.table, axis=1))


def perm_family_to_binop(fam: PermFamily) -> BinOpTable:
    return BinOpTable._trusted(np.stack([p.image for p in fam.perms]))


def binop_to_perm_family(f: BinOpTable) -> PermFamily:
    _require_invertible(f)
    return PermFamily([Permutation(row) for row in f.table])


def embed_homeomorphism(sigma: Permutation) -> BinOpTable:
    """The operation ``(t, x) -> sigma(x)`` that ignores its first argument."""
    return BinOpTable._trusted(np.tile(sigma.image, (sigma.n, 1)))


def element_order(f: BinOpTable) -> int:
    _require_invertible(f)
    e = identity_binop(f.n)
    power, k = f, 1
    while power != e:
        power = compose(f, power)
        k += 1
    return k


def permutations_array(n) -> np.ndarray:
    """All permutations of ``range(n)`` in lexicographic image order, shape (n!, n)."""
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def enumerate_h2_array(n) -> np.ndarray:
    """Stack of every invertible table, shape ((n!)^n, n, n), in canonical order."""
    n = check_carrier(n)
    require_at_most(n, carrier_cap(H2_MAX_N), "enumerate_h2")
    return kernels.row_product_tables(permutations_array(n), n)


def enumerate_h2(n) -> Iterator[BinOpTable]:
    """Yield each invertible table once, row 0's permutation varying slowest."""
    for arr in enumerate_h2_array(n):
        yield BinOpTable._trusted(arr)


def all_tables_array(n) -> np.ndarray:
    n = check_carrier(n)
    require_at_most(n, carrier_cap(BRUTE_MAX_N), "brute enumeration")
    return kernels.all_tables(n)


def brute_invertible_array(n) -> np.ndarray:
    tables = all_tables_array(n)
    return tables[kernels.rows_bijective(tables)]


def brute_enumerate_invertible(n) -> Iterator[BinOpTable]:
    """Scan all n^(n^2) tables and keep those with bijective rows."""
    for arr in brute_invertible_array(n):
        yield BinOpTable._trusted(arr)


def exhaustive_inverse_search(tables: np.ndarray, n) -> tuple[np.ndarray, np.ndarray]:
    """For each table count the two-sided inverses among all n^(n^2) tables.

    Independent of the row-bijectivity test: it only uses the product law.
    Returns ``(counts, first_index)``; indices refer to ``all_tables_array(n)``.
    """
    pool = all_tables_array(n)
    tables = np.ascontiguousarray(np.asarray(tables, dtype=np.int64).reshape(-1, n, n))
    return kernels.inverse_search(tables, pool)


def h2_index(tables: np.ndarray) -> np.ndarray:
    """Position of invertible tables (shape (..., n, n)) in ``enumerate_h2`` order."""
    tables = np.asarray(tables, dtype=np.int64)
    n = tables.shape[-1]
    perms = permutations_array(n)
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    rank_of_code = np.full(n ** n, -1, dtype=np.int64)
    rank_of_code[perms @ weights] = np.arange(perms.shape[0])
    ranks = rank_of_code[tables @ weights]
    if np.any(ranks < 0):
        raise NotInvertibleError("h2_index needs tables with bijective rows")
    p = math.factorial(n)
    row_weights = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return ranks @ row_weights


def h2_cayley_table(n) -> np.ndarray:
    """Cayley table of H2 on n points: entry (i, j) indexes table_i * table_j."""
    n = check_carrier(n)
    if math.factorial(n) ** n > 1024:
        raise CapacityError(f"Cayley table of H2 on {n} points has more than 1024 rows")
    elems = enumerate_h2_array(n)
    N = elems.shape[0]
    left = np.repeat(elems, N, axis=0)
    right = np.tile(elems, (N, 1, 1))
    prods = kernels.compose_batch(left, right)
    return h2_index(prods).reshape(N, N)
