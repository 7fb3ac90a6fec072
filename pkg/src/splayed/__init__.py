"""Splayedness of divisor germs and CSM template identities, in exact arithmetic."""

__version__ = "0.1.0"

from .groebner import INFINITE, Ideal, Submodule, syzygies  # noqa: E402
from .parse import parse  # noqa: E402
from .poly import Poly  # noqa: E402

__all__ = ["INFINITE", "Ideal", "Poly", "Submodule", "parse", "syzygies"]
