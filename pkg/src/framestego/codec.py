"""Hidden-code embedding into the frame null space and its recovery."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, ConfigError, DimensionError, StegoError
from .frame import FrameConfig, NullBasis, analysis, null_basis, range_project, synthesis

__all__ = [
    "SecretParameters",
    "make_mixer",
    "embed",
    "encode",
    "decode",
    "infer_code_length",
]


@dataclass(frozen=True)
class SecretParameters:
    """Everything the receiver shares with the sender out of band."""

    cfg: FrameConfig
    seed: int
    K: int
    alpha: float

    def __post_init__(self):
        if isinstance(self.K, bool) or int(self.K) != self.K or self.K < 1:
            raise ConfigError(f"K must be a positive integer, got {self.K!r}")
        if self.K > self.cfg.capacity:
            raise CapacityError(
                f"K={self.K} exceeds null-space capacity M-N={self.cfg.capacity}"
            )
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not np.isfinite(self.alpha) or self.alpha <= 0:
            raise ConfigError(f"alpha must be positive and finite, got {self.alpha!r}")

    def basis(self) -> NullBasis:
        return null_basis(self.cfg).take(self.K)

    def mixer(self) -> np.ndarray:
        return make_mixer(self.seed, self.K)


def make_mixer(seed, K) -> np.ndarray:
    """Seeded ``K x K`` real orthogonal mixing matrix.

    Standard normal deviates are drawn row-major from
    ``numpy.random.Generator(PCG64(seed))`` (ziggurat transform) and
    orthonormalized by QR, with signs fixed so that every diagonal entry of
    the triangular factor is positive. The same ``(seed, K)`` always gives
    the same matrix.
    """
    if isinstance(K, bool) or int(K) != K or K < 1:
        raise ConfigError(f"mixer size K must be >= 1, got {K!r}")
    rng = np.random.Generator(np.random.PCG64(int(seed)))
    g = rng.standard_normal((int(K), int(K)))
    q, r = np.linalg.qr(g)
    signs = np.where(np.diag(r) < 0, -1.0, 1.0)
    return q * signs


def embed(h, U: NullBasis, B, alpha) -> np.ndarray:
    """Hidden code coefficients ``alpha * U @ (B @ h)``."""
    h = np.asarray(h, dtype=np.float64)
    B = np.asarray(B)
    if h.ndim != 1 or B.shape != (h.size, h.size) or U.K != h.size:
        raise DimensionError(
            f"code length {h.size}, mixer {B.shape} and basis K={U.K} disagree"
        )
    return alpha * (U.columns @ (B @ h))


def encode(x, h, sp: SecretParameters) -> np.ndarray:
    """Transmitted coefficients: signal coefficients plus the embedded code."""
    h = np.asarray(h, dtype=np.float64)
    if h.shape != (sp.K,):
        raise DimensionError(f"code must have length K={sp.K}, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise StegoError("hidden code must be finite")
    c = analysis(x, sp.cfg)
    return c + embed(h, sp.basis(), sp.mixer(), sp.alpha)


@dataclass
class DecodeResult:
    signal: np.ndarray
    code: np.ndarray
    diagnostics: dict = field(default_factory=dict)

    def __iter__(self):
        return iter((self.signal, self.code, self.diagnostics))


def decode(c_rx, sp: SecretParameters) -> DecodeResult:
    """Recover the cover signal and the hidden code.

    The result unpacks as ``signal, code, diagnostics``. Diagnostics:

    ``imag_code``
        max |Im(U* d)|, zero without channel noise.
    ``null_residual``
        ||d - U U* d||, energy in the null space outside the chosen columns.
    ``imag_signal``
        max |Im| of the synthesized time samples.
    """
    c_rx = np.asarray(c_rx)
    if c_rx.ndim != 1 or c_rx.size != sp.cfg.M:
        raise DimensionError(f"received vector must have length M={sp.cfg.M}, got {c_rx.shape}")
    x_hat, imag_signal = synthesis(c_rx, sp.cfg, full_output=True)
    d = c_rx - range_project(c_rx, sp.cfg)
    U = sp.basis().columns
    y = U.conj().T @ d
    h_hat = sp.mixer().T @ y.real / sp.alpha
    diagnostics = {
        "imag_code": float(np.max(np.abs(y.imag))),
        "null_residual": float(np.linalg.norm(d - U @ y)),
        "imag_signal": imag_signal,
    }
    return DecodeResult(x_hat, h_hat, diagnostics)


def infer_code_length(d, U_full: NullBasis, eps_rel=1e-6) -> int:
    """Count significant components of ``U_full* d``.

    Heuristic: additive noise makes every component significant, so a
    known ``K`` should be preferred whenever it is available.
    """
    if not 0 < eps_rel < 1:
        raise ConfigError(f"eps_rel must lie in (0, 1), got {eps_rel!r}")
    y = np.abs(U_full.columns.conj().T @ np.asarray(d))
    peak = y.max(initial=0.0)
    if peak < 1e-300:
        raise StegoError("no embedded energy")
    return int(np.count_nonzero(y > eps_rel * peak))
