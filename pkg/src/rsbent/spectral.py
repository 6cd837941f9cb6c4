"""Walsh spectra and the verdicts derived from them (bentness, nonlinearity).

Everything is exact integer arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .f2core import BitVec, BoolFn, parity


@dataclass(frozen=True)
class WalshSpectrum:
    n: int
    values: np.ndarray

    def __getitem__(self, alpha: int | BitVec) -> int:
        return int(self.values[int(alpha)])

    def max_abs(self) -> int:
        return int(np.abs(self.values).max())

    def parseval_sum(self) -> int:
        # python ints: squares reach 2^(2n) and the sum 2^(2n) as well
        return sum(int(v) * int(v) for v in self.values.tolist())

    def to_record(self) -> dict:
        return {"n": self.n, "values": self.values.tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))


def fwht(signs: np.ndarray, n: int) -> np.ndarray:
    """Fast Walsh-Hadamard butterfly over int64. The input is left untouched."""
    a = np.array(signs, dtype=np.int64, copy=True)
    for i in range(n):
        v = a.reshape(-1, 2, 1 << i)
        lo = v[:, 0, :].copy()
        hi = v[:, 1, :]
        v[:, 0, :] += hi
        v[:, 1, :] = lo - hi
    return a


def walsh(f: BoolFn) -> WalshSpectrum:
    signs = 1 - 2 * f.bits.astype(np.int64)
    values = fwht(signs, f.n)
    values.flags.writeable = False
    return WalshSpectrum(f.n, values)


def is_bent(f: BoolFn, spectrum: WalshSpectrum | None = None) -> bool:
    if f.n % 2:
        return False
    spectrum = spectrum if spectrum is not None else walsh(f)
    return bool(np.all(np.abs(spectrum.values) == 1 << (f.n // 2)))


def nonlinearity(f: BoolFn, spectrum: WalshSpectrum | None = None) -> int:
    spectrum = spectrum if spectrum is not None else walsh(f)
    return (1 << (f.n - 1)) - spectrum.max_abs() // 2


def complement_kernel(a: BitVec, b: BitVec) -> int:
    """``sum over x of (-1)^(x . (x xor a xor b))``.

    The sum is ``2^n`` when ``a`` is the complement of ``b`` and 0 otherwise.
    """
    if a.n != b.n:
        raise DimensionError(f"length mismatch: {a.n} vs {b.n}")
    x = np.arange(1 << a.n, dtype=np.int64)
    exps = parity(x & (x ^ a.value ^ b.value))
    return int((1 - 2 * exps.astype(np.int64)).sum())
