"""File formats: text signals, binary coefficient vectors, secret-parameter files, CSV series.

Coefficient files (``FCOF``)::

    offset  size  content
    0       4     b"FCOF"
    4       1     version, 0x01
    5       4     M, uint32 little-endian
    9       16*M  (real, imag) pairs, float64 little-endian
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .codec import SecretParameters
from .errors import FormatError, StegoError
from .frame import validate_config

__all__ = [
    "read_signal",
    "write_signal",
    "read_coeffs",
    "write_coeffs",
    "read_secret",
    "write_secret",
    "write_series_csv",
]

MAGIC = b"FCOF"
VERSION = 1
_HEADER = struct.Struct("<4sBI")

SECRET_KEYS = ("N", "M", "basis_mode", "tolerance", "seed", "K", "alpha")


def _fmt(v) -> str:
    return format(float(v), ".17g")


def write_signal(path, x):
    """One value per line, 17 significant digits."""
    x = np.asarray(x, dtype=np.float64)
    Path(path).write_text("".join(_fmt(v) + "\n" for v in x))


def read_signal(path) -> np.ndarray:
    text = Path(path).read_text()
    lines = text.splitlines()
    if not lines:
        raise FormatError(f"{path}: empty signal")
    values = []
    for lineno, line in enumerate(lines, 1):
        try:
            v = float(line)
        except ValueError:
            raise FormatError(f"{path}: line {lineno}: cannot parse {line.strip()!r} as a number") from None
        if not np.isfinite(v):
            raise FormatError(f"{path}: line {lineno}: non-finite value {line.strip()!r}")
        values.append(v)
    return np.array(values)


def write_coeffs(path, c):
    c = np.asarray(c, dtype=np.complex128)
    if c.ndim != 1:
        raise StegoError(f"coefficients must be one-dimensional, got shape {c.shape}")
    payload = c.astype("<c16").tobytes()
    Path(path).write_bytes(_HEADER.pack(MAGIC, VERSION, c.size) + payload)


def read_coeffs(path) -> np.ndarray:
    data = Path(path).read_bytes()
    if len(data) < 4 or data[:4] != MAGIC:
        raise FormatError(f"{path}: not a coefficient file (bad magic)")
    if len(data) < _HEADER.size:
        raise FormatError(f"{path}: truncated header ({len(data)} bytes)")
    _, version, M = _HEADER.unpack_from(data)
    if version != VERSION:
        raise FormatError(f"{path}: unsupported version {version} at offset 4")
    body = data[_HEADER.size:]
    expected = 16 * M
    if len(body) < expected:
        raise FormatError(f"{path}: truncated payload: header says M={M} ({expected} bytes), got {len(body)}")
    if len(body) > expected:
        raise FormatError(f"{path}: M mismatch: header says M={M} ({expected} bytes), payload has {len(body)}")
    return np.frombuffer(body, dtype="<c16").astype(np.complex128)


def write_secret(path, sp: SecretParameters):
    cfg = sp.cfg
    fields = {
        "N": str(cfg.N),
        "M": str(cfg.M),
        "basis_mode": cfg.basis_mode,
        "tolerance": _fmt(cfg.tolerance),
        "seed": str(sp.seed),
        "K": str(sp.K),
        "alpha": _fmt(sp.alpha),
    }
    Path(path).write_text("".join(f"{k}={v}\n" for k, v in fields.items()))


def read_secret(path) -> SecretParameters:
    """Parse a ``key=value`` secret file; every key in ``SECRET_KEYS`` is required."""
    raw = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip():
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise FormatError(f"{path}: line {lineno}: expected key=value")
        if key not in SECRET_KEYS:
            raise FormatError(f"{path}: line {lineno}: unknown key {key!r}")
        if key in raw:
            raise FormatError(f"{path}: line {lineno}: duplicate key {key!r}")
        raw[key] = value.strip()
    for key in SECRET_KEYS:
        if key not in raw:
            raise FormatError(f"{path}: missing key {key!r}")

    def parse(key, conv):
        try:
            return conv(raw[key])
        except ValueError:
            raise FormatError(f"{path}: key {key!r}: cannot parse {raw[key]!r}") from None

    cfg = validate_config(
        parse("N", int), parse("M", int), raw["basis_mode"], parse("tolerance", float)
    )
    return SecretParameters(cfg, parse("seed", int), parse("K", int), parse("alpha", float))


def write_series_csv(path, values, header=("index", "value")):
    """``index,value`` rows with a header line."""
    values = np.asarray(values, dtype=np.float64)
    lines = [",".join(header)]
    lines += [f"{i},{_fmt(v)}" for i, v in enumerate(values)]
    Path(path).write_text("\n".join(lines) + "\n")
