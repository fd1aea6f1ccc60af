"""The affine binary action of GL(d, R) on R^d: ``A(x, y) = (E - A) x + A y``.

Identities are checked numerically in the max norm against an explicit
tolerance.  All sampling is seeded.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DimensionError, ValidationError

DET_FLOOR = 1e-6
SAMPLE_DET_FLOOR = 1e-3
DEFAULT_TOL = 1e-9
DEFAULT_SEED = 42


def as_gl_matrix(A) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValidationError("matrix has non-finite entries")
    if abs(np.linalg.det(A)) < DET_FLOOR:
        raise ValidationError(f"|det| < {DET_FLOOR}: matrix is not safely invertible")
    return A


def as_vector(x, d=None) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.ndim != 1:
        raise DimensionError(f"expected a vector, got shape {x.shape}")
    if d is not None and x.size != d:
        raise DimensionError(f"expected dimension {d}, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise ValidationError("vector has non-finite entries")
    return x


def _act(A, x, y):
    return (np.eye(A.shape[0]) - A) @ x + A @ y


def affine_act(A, x, y) -> np.ndarray:
    A = as_gl_matrix(A)
    d = A.shape[0]
    return _act(A, as_vector(x, d), as_vector(y, d))


def induced_action_at(a) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """The ordinary action ``(A, y) -> A(a, y)`` obtained by freezing ``a``."""
    a = as_vector(a)

    def evaluate(A, y):
        return affine_act(A, a, y)

    evaluate.base_point = a
    return evaluate


@dataclass
class NumericReport:
    checks: int
    seed: int
    tol: float
    max_residual: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, index, name, residual):
        self.max_residual = max(self.max_residual, float(residual))
        if not residual <= self.tol:
            self.failures.append({"sample": index, "check": name, "residual": float(residual)})

    def to_json(self):
        return {"checks": self.checks, "failures": self.failures, "max_residual": self.max_residual,
                "seed": self.seed, "tol": self.tol}


def random_gl(rng, d) -> np.ndarray:
    """Entries uniform in [-1, 1], resampled until |det| >= 1e-3."""
    while True:
        A = rng.uniform(-1.0, 1.0, size=(d, d))
        if abs(np.linalg.det(A)) >= SAMPLE_DET_FLOOR:
            return A


def _residual(u, v):
    return float(np.max(np.abs(u - v)))


def _check_tol(tol):
    if not tol >= 0:
        raise ValidationError("tolerance must be non-negative")


def check_action_axioms(samples=1000, d=2, seed=DEFAULT_SEED, tol=DEFAULT_TOL) -> NumericReport:
    """Composition ``A(x, B(x, y)) == AB(x, y)`` and identity ``E(x, y) == y`` on random data."""
    _check_tol(tol)
    rng = np.random.default_rng(seed)
    E = np.eye(d)
    report = NumericReport(checks=2 * samples, seed=seed, tol=tol)
    for i in range(samples):
        A, B = random_gl(rng, d), random_gl(rng, d)
        x, y = rng.uniform(-1.0, 1.0, size=(2, d))
        report.record(i, "composition", _residual(_act(A, x, _act(B, x, y)), _act(A @ B, x, y)))
        report.record(i, "identity", _residual(_act(E, x, y), y))
    return report


def check_singleton_invariance(samples=1000, d=2, seed=DEFAULT_SEED, tol=1e-12) -> NumericReport:
    """``A(x, x) == x`` for random A and x."""
    _check_tol(tol)
    rng = np.random.default_rng(seed)
    report = NumericReport(checks=samples, seed=seed, tol=tol)
    for i in range(samples):
        A = random_gl(rng, d)
        x = rng.uniform(-1.0, 1.0, size=d)
        report.record(i, "singleton", _residual(_act(A, x, x), x))
    return report


def check_induced_axioms(a, samples=1000, seed=DEFAULT_SEED, tol=DEFAULT_TOL) -> NumericReport:
    """The frozen action at ``a`` satisfies ``a(AB, y) == a(A, a(B, y))``."""
    _check_tol(tol)
    a = as_vector(a)
    d = a.size
    rng = np.random.default_rng(seed)
    report = NumericReport(checks=samples, seed=seed, tol=tol)
    for i in range(samples):
        A, B = random_gl(rng, d), random_gl(rng, d)
        y = rng.uniform(-1.0, 1.0, size=d)
        report.record(i, "induced", _residual(_act(A @ B, a, y), _act(A, a, _act(B, a, y))))
    return report


def check_translation_equivariance(a, samples=1000, seed=DEFAULT_SEED, tol=DEFAULT_TOL) -> NumericReport:
    """``y -> y - a`` carries the action frozen at ``a`` onto the one frozen at 0."""
    _check_tol(tol)
    a = as_vector(a)
    d = a.size
    zero = np.zeros(d)
    rng = np.random.default_rng(seed)
    report = NumericReport(checks=samples, seed=seed, tol=tol)
    for i in range(samples):
        A = random_gl(rng, d)
        y = rng.uniform(-1.0, 1.0, size=d)
        report.record(i, "equivariance", _residual(_act(A, a, y) - a, _act(A, zero, y - a)))
    return report


def demo_union_not_invariant(x, y, tol=DEFAULT_TOL) -> dict:
    """Witness matrices A with ``A(x, y)`` outside ``{x, y}``.

    Scalings ``cE`` move y along the line through x and y; for d >= 2 a
    quarter-turn in the plane of the first two axes also leaves that line.
    """
    x = as_vector(x)
    y = as_vector(y, x.size)
    if _residual(x, y) <= tol:
        raise ValidationError("x and y coincide; a singleton is invariant")
    d = x.size
    candidates = [c * np.eye(d) for c in (2.0, -1.0, 0.5)]
    if d >= 2:
        R = np.eye(d)
        R[:2, :2] = [[0.0, -1.0], [1.0, 0.0]]
        candidates.append(R)
    witnesses = []
    for A in candidates:
        p = affine_act(A, x, y)
        if min(_residual(p, x), _residual(p, y)) > tol:
            witnesses.append({"matrix": A.tolist(), "point": p.tolist()})
    return {"x": x.tolist(), "y": y.tolist(), "witnesses": witnesses, "found": bool(witnesses)}
