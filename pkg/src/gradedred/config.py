"""Run configuration shared by the series, verification and CLI layers."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import InputError
from .reduction import DEFAULT_K_MAX, DEFAULT_N_CAP, DEFAULT_TRIALS


@dataclass(frozen=True)
class RunConfig:
    seed: int = 20240601
    trials: int = DEFAULT_TRIALS
    n_max: int = 10
    n_cap: int = DEFAULT_N_CAP
    k_max: int = DEFAULT_K_MAX
    window: int = 3
    degree_window: tuple[int, int] | None = None

    def __post_init__(self):
        for name in ("trials", "n_max", "n_cap", "k_max", "window"):
            if getattr(self, name) < 1:
                raise InputError(f"{name} must be positive")
        if self.seed < 0:
            raise InputError("seed must be non-negative")
        if self.window < 2:
            raise InputError("window must be at least 2")

    def rng_for(self, *key: int) -> np.random.Generator:
        """Independent substream for a sub-computation keyed by integers."""
        return np.random.default_rng(np.random.SeedSequence([self.seed, *key]))

    def to_json(self) -> dict:
        return asdict(self)
