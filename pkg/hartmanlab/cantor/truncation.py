# SPDX-FileCopyrightText: Copyright (c) 2026 HartmanLab Developers.
# SPDX-FileCopyrightText: All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import itertools
import math
from dataclasses import dataclass
from typing import Any, overload

import numpy as np

# 3^MAX_EXACT_POWER is the largest power of 3 below 2^63
MAX_EXACT_POWER = 39
# Period sums are evaluated in chunks of this many indices
SUM_CHUNK = 2**20


def _reduced_phase(k: np.ndarray, j: int) -> np.ndarray:
    """(k mod 3^j) / 3^j as a float computed from the reduced fraction, so that
    3k at level j + 1 and k at level j give bit-identical phases"""
    if j > MAX_EXACT_POWER:
        return np.mod(k / 3.0**j, 1.0)
    m = np.int64(3**j)
    r = np.mod(k, m)
    g = np.gcd(r, m)
    return (r // g) / (m // g)


@overload
def f_tilde_n(n: int, k: int, include_half_factor: bool = False) -> float: ...


@overload
def f_tilde_n(
    n: int, k: np.ndarray, include_half_factor: bool = False
) -> np.ndarray: ...


def f_tilde_n(
    n: int, k: int | np.ndarray, include_half_factor: bool = False
) -> float | np.ndarray:
    """Truncated Riesz type product

        f~_n(k) = prod_{j=1}^{n} cos(2 pi k / 3^j)

    with the empty product 1 for n = 0.

    Parameters
    ----------
    n : int
        Number of factors, non-negative
    k : int | np.ndarray
        Integer index or integer array
    include_half_factor : bool, optional
        Multiply by cos(pi k) = (-1)^k, the transform of the base atom at 1/2, so the
        result equals the Fourier-Stieltjes transform of nu_n, by default False

    Returns
    -------
    float | np.ndarray
        Product values, matching the shape of k
    """
    if n < 0:
        raise ValueError(f"Number of factors must be non-negative, got {n}")
    scalar = np.ndim(k) == 0
    ks = np.atleast_1d(np.asarray(k, dtype=np.int64))
    out = np.ones(ks.shape, dtype=np.float64)
    for j in range(1, n + 1):
        out = out * np.cos(2 * np.pi * _reduced_phase(ks, j))
    if include_half_factor:
        out = out * np.where(ks % 2 == 0, 1.0, -1.0)
    return float(out[0]) if scalar else out


@overload
def f_n(n: int, k: int) -> float: ...


@overload
def f_n(n: int, k: np.ndarray) -> np.ndarray: ...


def f_n(n: int, k: int | np.ndarray) -> float | np.ndarray:
    """Squared truncation f_n(k) = prod_{j=1}^{n} cos^2(2 pi k / 3^j), in [0, 1]

    Parameters
    ----------
    n : int
        Number of factors, non-negative
    k : int | np.ndarray
        Integer index or integer array
    """
    return f_tilde_n(n, k) ** 2


def _is_period(n: int, d: int) -> bool:
    """Whether d is a period of f_n, checked on one full period (or a prefix of it
    for large n)"""
    k = np.arange(min(3**n, SUM_CHUNK), dtype=np.int64)
    return bool(np.allclose(f_n(n, k), f_n(n, k + d), rtol=0, atol=1e-12))


@dataclass(frozen=True)
class CantorTruncation:
    """Finite truncation f_n of the Cantor product

    Parameters
    ----------
    n : int
        Number of factors, non-negative
    period : int
        Minimal period of f_n, a divisor of 3^n
    """

    n: int
    period: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"Number of factors must be non-negative, got {self.n}")
        if 3**self.n % self.period:
            raise ValueError(f"Period {self.period} does not divide 3^{self.n}")

    @property
    def expected_mean(self) -> float:
        return 2.0**-self.n

    def __call__(self, k: np.ndarray) -> np.ndarray:
        return f_n(self.n, np.asarray(k, dtype=np.int64))


def truncation(n: int) -> CantorTruncation:
    """Truncation f_n with its minimal period. Every period divides 3^n, so the
    minimal one is found by dividing out factors of 3 while the quotient is still
    a period.

    Parameters
    ----------
    n : int
        Number of factors, non-negative

    Returns
    -------
    CantorTruncation
        Truncation record
    """
    if n < 0:
        raise ValueError(f"Number of factors must be non-negative, got {n}")
    period = 3**n
    while period > 1 and _is_period(n, period // 3):
        period //= 3
    return CantorTruncation(n=n, period=period)


def period_mean(n: int) -> float:
    """Mean of f_n over one period k in [0, 3^n), summed in ascending k with
    correctly rounded summation

    Parameters
    ----------
    n : int
        Number of factors, non-negative

    Returns
    -------
    float
        (1/3^n) sum_{k=0}^{3^n - 1} f_n(k), equal to 2^-n
    """
    if n < 0:
        raise ValueError(f"Number of factors must be non-negative, got {n}")
    size = 3**n
    chunks = (
        f_n(n, np.arange(lo, min(lo + SUM_CHUNK, size), dtype=np.int64))
        for lo in range(0, size, SUM_CHUNK)
    )
    return math.fsum(itertools.chain.from_iterable(chunks)) / size


class CantorSource:
    """The truncation f_n as a sequence source

    Parameters
    ----------
    n : int
        Number of factors, non-negative
    include_half_factor : bool, optional
        Use the signed product f~_n times (-1)^k instead of f_n, by default False
    """

    def __init__(self, n: int, include_half_factor: bool = False):
        if n < 0:
            raise ValueError(f"Number of factors must be non-negative, got {n}")
        self.n = n
        self.include_half_factor = include_half_factor

    @property
    def descriptor(self) -> dict[str, Any]:
        name = "cantor_signed" if self.include_half_factor else "cantor"
        return {"family": name, "n": self.n}

    def __call__(self, k: np.ndarray) -> np.ndarray:
        k = np.asarray(k, dtype=np.int64)
        if self.include_half_factor:
            return f_tilde_n(self.n, k, include_half_factor=True)
        return f_n(self.n, k)
