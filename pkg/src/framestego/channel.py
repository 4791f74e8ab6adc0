"""Additive Gaussian channel, noise-level bookkeeping and digit-accuracy metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DimensionError, StegoError

__all__ = [
    "ChannelSpec",
    "AccuracyReport",
    "apply_awgn",
    "sigma_for_snr",
    "alpha_for_variance_ratio",
    "variance_ratio",
    "digit_accuracy",
    "MAX_DIGITS",
]

MAX_DIGITS = 15

# Denominator conventions for the variance ratio rho = sigma2 / (...):
#   "power": ||c'||^2 / M (mean-square hidden coefficient)
#   "norm":  ||c'|| / M   (norm over dimension, taken literally)
RHO_READINGS = ("power", "norm")


@dataclass(frozen=True)
class ChannelSpec:
    sigma2: float
    noise_seed: int = 0

    def __post_init__(self):
        if not np.isfinite(self.sigma2) or self.sigma2 < 0:
            raise ConfigError(f"sigma2 must be finite and >= 0, got {self.sigma2!r}")
        if not 0 <= self.noise_seed < 2**64:
            raise ConfigError(f"noise_seed must be a 64-bit unsigned integer, got {self.noise_seed!r}")


def apply_awgn(c, ch: ChannelSpec) -> np.ndarray:
    """Add circular complex Gaussian noise of total variance ``ch.sigma2`` per component.

    Real parts are drawn first, then imaginary parts, each as a full vector
    of ``N(0, sigma2 / 2)`` deviates from ``Generator(PCG64(noise_seed))``.
    A zero variance returns an unchanged copy.
    """
    c = np.asarray(c, dtype=np.complex128)
    if ch.sigma2 == 0:
        return c.copy()
    rng = np.random.Generator(np.random.PCG64(int(ch.noise_seed)))
    scale = np.sqrt(ch.sigma2 / 2)
    re = rng.standard_normal(c.shape)
    im = rng.standard_normal(c.shape)
    return c + scale * (re + 1j * im)


def sigma_for_snr(c, snr_db) -> float:
    """Noise variance giving ``snr_db`` against the mean power of ``c``."""
    c = np.asarray(c)
    power = float(np.vdot(c, c).real) / c.size
    if power == 0:
        raise StegoError("signal coefficients are zero; SNR undefined")
    return power / 10 ** (snr_db / 10)


def variance_ratio(sigma2, c_hidden, reading="power") -> float:
    """Ratio of noise variance to the hidden-coefficient level."""
    c_hidden = np.asarray(c_hidden)
    norm = float(np.linalg.norm(c_hidden))
    if reading == "power":
        denom = norm**2 / c_hidden.size
    elif reading == "norm":
        denom = norm / c_hidden.size
    else:
        raise ConfigError(f"unknown rho reading {reading!r}; expected one of {RHO_READINGS}")
    return sigma2 / denom


def alpha_for_variance_ratio(sigma2, rho, h, cfg, reading="power") -> float:
    """Embedding scale that yields the variance ratio ``rho``.

    Uses ``||c'|| = alpha ||h||`` (orthonormal basis and mixer). With the
    default ``"power"`` reading ``alpha = sqrt(sigma2 M / (rho ||h||^2))``;
    with ``"norm"`` it is ``sigma2 M / (rho ||h||)``.
    """
    M = cfg.M
    if not rho > 0:
        raise ConfigError(f"rho must be > 0, got {rho!r}")
    if not sigma2 > 0:
        raise ConfigError(f"sigma2 must be > 0, got {sigma2!r}")
    hn = float(np.linalg.norm(np.asarray(h, dtype=np.float64)))
    if hn == 0:
        raise StegoError("hidden code is zero; variance ratio undefined")
    if reading == "power":
        return float(np.sqrt(sigma2 * M / (rho * hn**2)))
    if reading == "norm":
        return float(sigma2 * M / (rho * hn))
    raise ConfigError(f"unknown rho reading {reading!r}; expected one of {RHO_READINGS}")


@dataclass(frozen=True)
class AccuracyReport:
    per_component_abs_err: np.ndarray
    matching_digits: np.ndarray
    valid: np.ndarray  # False where the true component is zero
    min_matching_digits: int

    @property
    def max_abs_err(self) -> float:
        return float(np.max(self.per_component_abs_err))


def digit_accuracy(h_true, h_est) -> AccuracyReport:
    """Matched significant digits per component.

    ``floor(-log10(|h_est - h_true| / |h_true|))`` clamped to ``[0, 15]``.
    Components with ``h_true == 0`` are flagged invalid, get 0 digits and
    are left out of the minimum.
    """
    h_true = np.asarray(h_true, dtype=np.float64)
    h_est = np.asarray(h_est, dtype=np.float64)
    if h_true.shape != h_est.shape or h_true.ndim != 1:
        raise DimensionError(f"code shapes differ: {h_true.shape} vs {h_est.shape}")
    err = np.abs(h_est - h_true)
    valid = h_true != 0
    digits = np.zeros(h_true.shape, dtype=np.int64)
    with np.errstate(divide="ignore"):
        rel = err[valid] / np.abs(h_true[valid])
        d = np.floor(-np.log10(rel))
    digits[valid] = np.clip(d, 0, MAX_DIGITS).astype(np.int64)
    lowest = int(digits[valid].min()) if valid.any() else MAX_DIGITS
    return AccuracyReport(err, digits, valid, lowest)
