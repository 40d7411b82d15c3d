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

import math
from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache

import numpy as np

# Integer work stays in int64 below this bound, Python ints above it
INT64_SAFE = 2**62

Location = Fraction | float | int | str


def _as_location(x: Location) -> Fraction:
    """Exact circle point in [0, 1). Floats are read through their shortest repr,
    so 0.1 becomes 1/10."""
    if isinstance(x, float):
        x = Fraction(repr(x))
    return Fraction(x) % 1


def _int_array(values: Iterable[int], bound: int) -> np.ndarray:
    dtype = np.int64 if bound < INT64_SAFE else object
    return np.array(list(values), dtype=dtype)


class DiscreteMeasure:
    """Finite complex combination of point masses on the circle R/Z. Locations are
    exact rationals stored as numerators over one common denominator, atoms at
    equal locations are merged.

    Parameters
    ----------
    atoms : Iterable[tuple[Location, complex]]
        (location, weight) pairs, locations are reduced mod 1
    """

    def __init__(self, atoms: Iterable[tuple[Location, complex]]):
        pairs = [(_as_location(x), complex(w)) for x, w in atoms]
        if len(pairs) == 0:
            raise ValueError("Discrete measure needs at least one atom")
        denominator = math.lcm(*(x.denominator for x, _ in pairs))
        numerators = _int_array(
            (x.numerator * (denominator // x.denominator) for x, _ in pairs),
            denominator,
        )
        weights = np.array([w for _, w in pairs], dtype=np.complex128)
        self._set(denominator, numerators, weights)

    def _set(self, denominator: int, numerators: np.ndarray, weights: np.ndarray) -> None:
        """Merge equal locations and store sorted atoms"""
        unique, inverse = np.unique(numerators, return_inverse=True)
        inverse = inverse.astype(np.int64).ravel()
        merged = np.bincount(
            inverse, weights=weights.real, minlength=unique.shape[0]
        ) + 1j * np.bincount(inverse, weights=weights.imag, minlength=unique.shape[0])
        self.denominator = int(denominator)
        self.numerators = unique
        self.weights = merged.astype(np.complex128)

    @classmethod
    def _from_arrays(
        cls, denominator: int, numerators: np.ndarray, weights: np.ndarray
    ) -> "DiscreteMeasure":
        m = cls.__new__(cls)
        m._set(denominator, numerators, weights)
        return m

    @classmethod
    def dirac(cls, location: Location, weight: complex = 1.0) -> "DiscreteMeasure":
        """Point mass weight * delta_location"""
        return cls([(location, weight)])

    @property
    def locations(self) -> list[Fraction]:
        return [Fraction(int(r), self.denominator) for r in self.numerators]

    @property
    def atoms(self) -> list[tuple[Fraction, complex]]:
        return list(zip(self.locations, (complex(w) for w in self.weights)))

    @property
    def total_mass(self) -> complex:
        return complex(self.weights.sum())

    def __len__(self) -> int:
        return self.numerators.shape[0]

    def __repr__(self) -> str:
        atoms = ", ".join(f"{x}: {w:.6g}" for x, w in self.atoms[:4])
        more = ", ..." if len(self) > 4 else ""
        return f"DiscreteMeasure({{{atoms}{more}}})"


def _rescale(m: DiscreteMeasure, denominator: int) -> np.ndarray:
    factor = denominator // m.denominator
    if denominator < INT64_SAFE:
        return m.numerators.astype(np.int64) * factor
    return m.numerators.astype(object) * factor


def convolve(a: DiscreteMeasure, b: DiscreteMeasure) -> DiscreteMeasure:
    """Convolution a * b: atoms at every sum x + y mod 1 with weight a(x) b(y)

    Parameters
    ----------
    a : DiscreteMeasure
        First factor
    b : DiscreteMeasure
        Second factor

    Returns
    -------
    DiscreteMeasure
        Convolution with merged atoms
    """
    denominator = math.lcm(a.denominator, b.denominator)
    sums = np.mod(
        _rescale(a, denominator)[:, None] + _rescale(b, denominator)[None, :],
        denominator,
    )
    weights = a.weights[:, None] * b.weights[None, :]
    return DiscreteMeasure._from_arrays(denominator, sums.ravel(), weights.ravel())


def fourier_stieltjes(m: DiscreteMeasure, k: int | np.ndarray) -> complex | np.ndarray:
    """Fourier-Stieltjes transform m^(k) = sum_x w_x exp(2 pi i k x). Phases k x mod 1
    are reduced in exact integer arithmetic before the exponential.

    Parameters
    ----------
    m : DiscreteMeasure
        Discrete measure
    k : int | np.ndarray
        Integer frequency or array of frequencies

    Returns
    -------
    complex | np.ndarray
        Transform values, matching the shape of k
    """
    scalar = np.ndim(k) == 0
    ks = np.atleast_1d(np.asarray(k, dtype=np.int64))
    bound = (int(np.abs(ks).max()) + 1) * m.denominator
    if bound < INT64_SAFE:
        r = np.mod(ks[:, None] * m.numerators.astype(np.int64)[None, :], m.denominator)
    else:
        r = np.mod(
            ks.astype(object)[:, None] * m.numerators.astype(object)[None, :],
            m.denominator,
        )
    phase = 2 * np.pi * (r.astype(np.float64) / m.denominator)
    out = np.exp(1j * phase) @ m.weights
    return complex(out[0]) if scalar else out


@lru_cache(maxsize=32)
def nu(n: int) -> DiscreteMeasure:
    """Discrete measures nu_0 = delta_{1/2} and

        nu_n = nu_{n-1} * (1/2)(delta_{-1/3^n} + delta_{1/3^n})

    whose transforms are (-1)^k prod_{j=1}^{n} cos(2 pi k / 3^j)

    Parameters
    ----------
    n : int
        Recursion depth, non-negative

    Returns
    -------
    DiscreteMeasure
        nu_n, total mass 1
    """
    if n < 0:
        raise ValueError(f"Recursion depth must be non-negative, got {n}")
    if n == 0:
        return DiscreteMeasure.dirac(Fraction(1, 2))
    step = DiscreteMeasure(
        [(Fraction(-1, 3**n), 0.5), (Fraction(1, 3**n), 0.5)]
    )
    return convolve(nu(n - 1), step)


def total_variation(m: DiscreteMeasure) -> float:
    """Total variation norm sum_x |w_x|"""
    return float(np.abs(m.weights).sum())
