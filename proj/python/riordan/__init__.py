"""Exact Riordan-array toolkit (thin wrapper over the C++ core)."""

from ._riordan import (  # noqa: F401
    build,
    closed_form,
    family_hankel,
    family_moments,
    hankel,
    moments,
    production,
    recurrence,
    verify_fixtures,
    RiordanError,
)

__all__ = [
    "build",
    "closed_form",
    "family_hankel",
    "family_moments",
    "hankel",
    "moments",
    "production",
    "recurrence",
    "verify_fixtures",
    "RiordanError",
]
