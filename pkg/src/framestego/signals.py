"""Reference cover signals."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError

__all__ = ["ChirpSpec", "gen_chirp", "REFERENCE_CHIRP"]


@dataclass(frozen=True)
class ChirpSpec:
    """Linear chirp sweeping ``f0 -> f1`` cycles per record over ``N`` samples."""

    N: int = 200
    f0: float = 2.0
    f1: float = 40.0
    amplitude: float = 1.0

    def __post_init__(self):
        if isinstance(self.N, bool) or int(self.N) != self.N or self.N < 1:
            raise ConfigError(f"N must be a positive integer, got {self.N!r}")
        if not 0 <= self.f0 < self.f1 < self.N / 2:
            raise ConfigError(
                f"need 0 <= f0 < f1 < N/2 = {self.N / 2:g}, got f0={self.f0!r}, f1={self.f1!r}"
            )
        if not np.isfinite(self.amplitude) or self.amplitude <= 0:
            raise ConfigError(f"amplitude must be positive, got {self.amplitude!r}")


REFERENCE_CHIRP = ChirpSpec()


def gen_chirp(spec: ChirpSpec = REFERENCE_CHIRP) -> np.ndarray:
    """Sample ``A sin(2 pi (f0 u + (f1 - f0) u^2 / 2))`` at ``u = j / N``."""
    u = np.arange(spec.N) / spec.N
    phase = spec.f0 * u + (spec.f1 - spec.f0) * u**2 / 2
    return spec.amplitude * np.sin(2 * np.pi * phase)
