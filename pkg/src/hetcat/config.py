"""Size caps guarding the exhaustive loops.

Every enumeration in the engine is total; a cap overrun is an error,
never silent sampling.  Caps are configuration carried by value, not
global state: pass a custom ``Caps`` to any operation that enumerates.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import SizeCapExceeded


@dataclass(frozen=True)
class Caps:
    max_elements: int = 4096      # poset elements / category objects
    max_universe: int = 6         # powerset universe size
    max_generators: int = 3       # free-group generator set
    max_group_order: int = 12
    max_word_length: int = 6      # free-group exploration depth
    max_dim: int = 2              # per-component vector-space dimension
    max_components: int = 3
    max_total_dim: int = 2        # largest space in a vector-brain organism category
    primes: tuple[int, ...] = (2, 3)

    def guard(self, name: str, value: int, limit: int) -> None:
        if value > limit:
            raise SizeCapExceeded(f"{name}={value} exceeds cap {limit}")


DEFAULT_CAPS = Caps()

# Environment overrides; command-line flags take precedence over these.
_ENV_FIELDS = {
    "HETCAT_CAP_OBJECTS": "max_elements",
    "HETCAT_CAP_UNIVERSE": "max_universe",
    "HETCAT_CAP_DEPTH": "max_word_length",
}


def caps_from_env(base: Caps = DEFAULT_CAPS) -> Caps:
    overrides = {}
    for var, field in _ENV_FIELDS.items():
        raw = os.environ.get(var)
        if raw is not None:
            try:
                overrides[field] = int(raw)
            except ValueError:
                raise SizeCapExceeded(f"{var} must be an integer, got {raw!r}")
    return replace(base, **overrides) if overrides else base
