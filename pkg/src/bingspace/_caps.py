import os

from .errors import CapacityError


def carrier_cap(default):
    """Effective carrier-size cap. ``BINOP_MAX_N`` may lower it, never raise it."""
    raw = os.environ.get("BINOP_MAX_N")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return min(default, value)


def require_at_most(n, cap, what):
    if n > cap:
        raise CapacityError(f"{what}: n={n} exceeds the cap n<={cap}")
