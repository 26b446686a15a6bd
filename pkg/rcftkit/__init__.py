"""rcftkit: modular data, modular invariants and extensions of rational CFTs.

The package exports the version and the command runner. ``run`` is resolved
lazily so importing the domain layer does not pull in the command line.
"""

from __future__ import annotations

from rcftkit.version import __version__

__all__ = ["__version__", "run"]


def __getattr__(name: str):
    if name == "run":
        from rcftkit.main import run

        return run
    raise AttributeError(name)
