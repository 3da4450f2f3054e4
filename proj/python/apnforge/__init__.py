"""APN function construction and invariant analysis (native core)."""

from ._core import (  # noqa: F401
    Field,
    InvariantProfile,
    TruthTable,
    differential_uniformity,
    f1,
    f2,
    find_good_alphas,
    gold,
    invariant_profile,
    is_apn,
    known_family,
)

__all__ = [
    "Field",
    "InvariantProfile",
    "TruthTable",
    "differential_uniformity",
    "f1",
    "f2",
    "find_good_alphas",
    "gold",
    "invariant_profile",
    "is_apn",
    "known_family",
]
