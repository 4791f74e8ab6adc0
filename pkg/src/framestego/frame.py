"""Oversampled DFT frame: analysis/synthesis maps, Gram matrices and null-space bases.

A length-``N`` signal is zero padded with ``p`` samples on each side to
length ``M = N / a`` and transformed with the unitary DFT. The ``M`` complex
coefficients are redundant: any vector whose inverse DFT vanishes on the
``N`` retained samples can be added without changing the signal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CapacityError, ConfigError, DimensionError

__all__ = [
    "ANALYTIC",
    "EIGEN",
    "FrameConfig",
    "GramMatrix",
    "NullBasis",
    "validate_config",
    "analysis",
    "synthesis",
    "gram_continuous",
    "gram_discrete",
    "null_basis",
    "null_basis_analytic",
    "null_basis_eigen",
    "range_project",
]

ANALYTIC = "analytic"
EIGEN = "eigen"
BASIS_MODES = (ANALYTIC, EIGEN)

DEFAULT_TOLERANCE = 1e-8

# modulus below which a component is ignored when canonicalizing eigenvectors
_LEADING_EPS = 1e-8


@dataclass(frozen=True)
class FrameConfig:
    """Geometry of the oversampled frame.

    Build instances through :func:`validate_config`, which checks the
    invariants.
    """

    N: int
    M: int
    basis_mode: str = ANALYTIC
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def a(self) -> Fraction:
        """Oversampling parameter ``N / M`` as an exact fraction."""
        return Fraction(self.N, self.M)

    @property
    def p(self) -> int:
        """Number of zeros padded on each side of the signal."""
        return (self.M - self.N) // 2

    @property
    def capacity(self) -> int:
        """Dimension of the null space, ``M - N``."""
        return self.M - self.N

    @property
    def window(self) -> slice:
        """Slice of padded time indices occupied by the signal."""
        return slice(self.p, self.p + self.N)


def validate_config(N, M, basis_mode=ANALYTIC, tolerance=DEFAULT_TOLERANCE):
    """Check frame dimensions and return a :class:`FrameConfig`.

    Raises
    ------
    ConfigError
        If ``N < 1``, ``M < N``, ``M - N`` is odd, the basis mode is unknown
        or the eigen tolerance is not positive in eigen mode.
    """
    if isinstance(N, bool) or int(N) != N or N < 1:
        raise ConfigError(f"N must be a positive integer, got {N!r}")
    if isinstance(M, bool) or int(M) != M or M < N:
        raise ConfigError(f"M must be an integer >= N={N}, got {M!r}")
    N, M = int(N), int(M)
    if (M - N) % 2:
        raise ConfigError(f"M - N = {M - N} is odd; padding cannot split evenly")
    basis_mode = str(basis_mode).lower()
    if basis_mode not in BASIS_MODES:
        raise ConfigError(f"unknown basis_mode {basis_mode!r}; expected one of {BASIS_MODES}")
    tolerance = float(tolerance)
    if not np.isfinite(tolerance) or tolerance < 0:
        raise ConfigError(f"tolerance must be a finite nonnegative number, got {tolerance!r}")
    if basis_mode == EIGEN and tolerance <= 0:
        raise ConfigError("tolerance must be > 0 in eigen mode")
    return FrameConfig(N, M, basis_mode, tolerance)


def _check_length(v, n, what):
    v = np.asarray(v)
    if v.ndim != 1 or v.shape[0] != n:
        raise DimensionError(f"{what} must have length {n}, got shape {v.shape}")
    return v


def analysis(x, cfg: FrameConfig) -> np.ndarray:
    """Minimum-norm frame coefficients of a length-``N`` signal.

    Zero pads ``p`` samples on each side and applies the unitary DFT of
    size ``M`` in standard index ordering.
    """
    x = _check_length(x, cfg.N, "signal")
    z = np.zeros(cfg.M, dtype=np.result_type(x.dtype, np.float64))
    z[cfg.window] = x
    return np.fft.fft(z, norm="ortho")


def synthesis(c, cfg: FrameConfig, full_output=False):
    """Signal synthesized from frame coefficients.

    Parameters
    ----------
    c : array_like
        Length-``M`` coefficient vector.
    cfg : FrameConfig
    full_output : bool, optional
        Also return the largest imaginary magnitude among the retained
        samples (zero for coefficients of a real signal, up to roundoff).

    Returns
    -------
    x : ndarray
        Real length-``N`` signal.
    imag_residual : float
        Only when ``full_output`` is true.
    """
    c = _check_length(c, cfg.M, "coefficient vector")
    z = np.fft.ifft(c, norm="ortho")[cfg.window]
    x = z.real.copy()
    if full_output:
        imag = float(np.max(np.abs(z.imag))) if z.size else 0.0
        return x, imag
    return x


def range_project(c, cfg: FrameConfig) -> np.ndarray:
    """Orthogonal projection onto the range of :func:`analysis`.

    Complex linear: the imaginary part of the windowed time samples is kept,
    so ``c - range_project(c)`` lies exactly in the null space.
    """
    c = _check_length(c, cfg.M, "coefficient vector")
    z = np.fft.ifft(c, norm="ortho")
    z[: cfg.p] = 0
    z[cfg.p + cfg.N:] = 0
    return np.fft.fft(z, norm="ortho")


@dataclass(frozen=True)
class GramMatrix:
    entries: np.ndarray
    kind: str  # "continuous_sinc" or "discrete_dirichlet"


def gram_continuous(cfg: FrameConfig) -> GramMatrix:
    """Sinc Gram matrix of the restricted continuous exponentials.

    ``g[m, n] = sin(a pi (m - n)) / (a pi (m - n))`` with unit diagonal.
    """
    a = float(cfg.a)
    d = np.subtract.outer(np.arange(cfg.M), np.arange(cfg.M))
    g = np.sinc(a * d)  # numpy sinc is sin(pi x) / (pi x)
    return GramMatrix(g.astype(np.float64), "continuous_sinc")


def gram_discrete(cfg: FrameConfig) -> GramMatrix:
    """Gram matrix of the restricted discrete exponentials.

    ``g[m, n] = (1/M) sum_{k=p}^{p+N-1} exp(2j pi k (n - m) / M)``, evaluated
    through its Dirichlet-kernel closed form. Equal to the matrix of
    :func:`range_project`, so its null space is exactly the kernel of
    :func:`synthesis`.
    """
    M, N, p = cfg.M, cfg.N, cfg.p
    lags = np.arange(-(M - 1), M)
    kernel = np.empty(lags.shape, dtype=np.complex128)
    nz = lags != 0
    d = lags[nz]
    kernel[nz] = (
        np.exp(1j * np.pi * d * (2 * p + N - 1) / M)
        * np.sin(np.pi * d * N / M)
        / (M * np.sin(np.pi * d / M))
    )
    kernel[~nz] = N / M
    # entry (m, n) depends on n - m only
    idx = np.subtract.outer(np.arange(M), np.arange(M))  # m - n
    g = kernel[(M - 1) - idx]
    return GramMatrix(g, "discrete_dirichlet")


@dataclass(frozen=True)
class NullBasis:
    """``M x K`` matrix with orthonormal columns inside the null space."""

    columns: np.ndarray
    provenance: str

    @property
    def K(self) -> int:
        return self.columns.shape[1]

    def take(self, K):
        """Basis restricted to its first ``K`` columns."""
        if K < 1 or K > self.K:
            raise CapacityError(f"cannot select K={K} columns from a basis of {self.K}")
        return NullBasis(self.columns[:, :K].copy(), self.provenance)


def null_basis_analytic(cfg: FrameConfig) -> NullBasis:
    """DFTs of the unit impulses at every padded time index.

    Columns are ordered by ascending time index; ``K = M - N``.
    """
    if cfg.capacity == 0:
        raise CapacityError("no hiding capacity: M == N")
    idx = np.r_[0:cfg.p, cfg.p + cfg.N:cfg.M]
    k = np.arange(cfg.M)
    cols = np.exp(-2j * np.pi * np.outer(k, idx) / cfg.M) / np.sqrt(cfg.M)
    return NullBasis(cols, ANALYTIC)


def null_basis_eigen(cfg: FrameConfig) -> NullBasis:
    """Eigenvectors of :func:`gram_discrete` with eigenvalue below ``cfg.tolerance``.

    Columns are sorted by ascending eigenvalue (ties by the position of the
    first component with modulus above 1e-8), and each column's phase is
    rotated so that this first component is real and positive.
    """
    if cfg.capacity == 0:
        raise CapacityError("no hiding capacity: M == N")
    if cfg.tolerance <= 0:
        raise ConfigError("eigen basis requires tolerance > 0")
    w, v = np.linalg.eigh(gram_discrete(cfg).entries)
    sel = np.flatnonzero(w < cfg.tolerance)
    if sel.size == 0:
        raise CapacityError(f"no hiding capacity at this tolerance ({cfg.tolerance:g})")
    w, v = w[sel], v[:, sel]
    lead = np.argmax(np.abs(v) > _LEADING_EPS, axis=0)
    order = np.lexsort((lead, w))
    v, lead = v[:, order], lead[order]
    first = v[lead, np.arange(v.shape[1])]
    v = v * (np.abs(first) / first)
    return NullBasis(np.ascontiguousarray(v), EIGEN)


@lru_cache(maxsize=16)
def null_basis(cfg: FrameConfig) -> NullBasis:
    """Full null basis according to ``cfg.basis_mode`` (cached, read-only)."""
    basis = null_basis_eigen(cfg) if cfg.basis_mode == EIGEN else null_basis_analytic(cfg)
    basis.columns.flags.writeable = False
    return basis
