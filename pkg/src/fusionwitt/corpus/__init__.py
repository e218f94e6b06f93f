"""Bundled example fusion rings (.fr) and metric groups (.mg)."""

from __future__ import annotations

from importlib import resources


def path(name: str) -> str:
    """Filesystem path of a bundled corpus file, e.g. path('ising.fr')."""
    candidate = resources.files(__package__) / name
    if not candidate.is_file():
        raise FileNotFoundError(f"no corpus file named {name!r}")
    return str(candidate)


def names(suffix: str = "") -> list[str]:
    """Sorted bundled file names, optionally filtered by suffix."""
    out = [
        entry.name
        for entry in resources.files(__package__).iterdir()
        if entry.is_file() and entry.name.endswith(suffix) and not entry.name.endswith(".py")
    ]
    return sorted(out)
