"""Backend selection for the hot kernels.

numba is used when importable unless ``BINGSPACE_DISABLE_NUMBA`` is set to a
non-empty value other than ``0``; otherwise the pure-numpy path runs.
"""
import importlib
import os

_NAMES = (
    "compose_batch",
    "rows_bijective",
    "row_product_tables",
    "all_tables",
    "inverse_search",
    "action_witness",
    "distributive_witness",
    "invariant_images",
)


def _numba_wanted():
    flag = os.environ.get("BINGSPACE_DISABLE_NUMBA", "")
    return flag in ("", "0")


def get_backend(name):
    """Return the kernel module for ``"numba"`` or ``"numpy"``."""
    if name == "numba":
        return importlib.import_module("bingspace._kernels_numba")
    if name == "numpy":
        return importlib.import_module("bingspace._kernels_numpy")
    raise ValueError(f"unknown backend {name!r}")


def available_backends():
    names = ["numpy"]
    try:
        get_backend("numba")
    except ImportError:
        pass
    else:
        names.insert(0, "numba")
    return names


BACKEND = "numpy"
if _numba_wanted():
    try:
        _impl = get_backend("numba")
        BACKEND = "numba"
    except ImportError:
        _impl = get_backend("numpy")
else:
    _impl = get_backend("numpy")

compose_batch = _impl.compose_batch
rows_bijective = _impl.rows_bijective
row_product_tables = _impl.row_product_tables
all_tables = _impl.all_tables
inverse_search = _impl.inverse_search
action_witness = _impl.action_witness
distributive_witness = _impl.distributive_witness
invariant_images = _impl.invariant_images

__all__ = ["BACKEND", "get_backend", "available_backends", *_NAMES]
