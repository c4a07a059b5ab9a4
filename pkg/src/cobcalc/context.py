"""One configuration object per truncation cap.

Every module reads the cap (and the expensive cached artifacts: the
universal formal group law, the Chern engine, generator families) from a
Context.  Contexts are immutable after construction and the caches are
value-level, so concurrent reads are safe.
"""

from __future__ import annotations

import os
from functools import cached_property, lru_cache

from .errors import ConfigError
from .chern import ChernEngine
from .fgl import FormalGroupLaw, universal_fgl
from .ring import GradedRing, mu_ring

DEFAULT_CAP = 8
MAX_CAP = 12


def default_cap() -> int:
    env = os.environ.get("FGL_MAX_DEGREE")
    if env:
        return int(env)
    return DEFAULT_CAP


class Context:
    def __init__(self, cap: int | None = None):
        if cap is None:
            cap = default_cap()
        if not 1 <= cap <= MAX_CAP:
            raise ConfigError(f"cap must be between 1 and {MAX_CAP}, got {cap}")
        self.cap = cap

    @cached_property
    def ring(self) -> GradedRing:
        return mu_ring(self.cap)

    @cached_property
    def fgl(self) -> FormalGroupLaw:
        return universal_fgl(self.cap)

    def alpha(self, i: int, j: int):
        return self.fgl.alpha(i, j)

    @cached_property
    def chern(self) -> ChernEngine:
        return ChernEngine(self.ring, v_class=self.alpha(1, 2))

    def __repr__(self):
        return f"Context(cap={self.cap})"


@lru_cache(maxsize=4)
def get_context(cap: int) -> Context:
    """Shared per-cap context; the service and CLI go through this."""
    return Context(cap)
