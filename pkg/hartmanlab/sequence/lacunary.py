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

from typing import Any

import numpy as np

from hartmanlab.sequence.base import SequenceSlice
from hartmanlab.sequence.utils import fetch_slice


class Lacunary:
    """Indicator sequence of a finite set {t_1 < t_2 < ...} of positive integers

    Parameters
    ----------
    ts : list[int]
        Strictly increasing positive integers
    """

    def __init__(self, ts: list[int]):
        ts_array = np.asarray(ts, dtype=np.int64)
        if ts_array.ndim != 1:
            raise ValueError("Lacunary set must be a flat list of integers")
        if ts_array.size and ts_array[0] < 1:
            raise ValueError(f"Lacunary set must contain positive integers, got {ts_array[0]}")
        if np.any(np.diff(ts_array) <= 0):
            raise ValueError("Lacunary set must be strictly increasing")
        self.ts = ts_array

    @property
    def descriptor(self) -> dict[str, Any]:
        return {"family": "lacunary", "ts": [int(t) for t in self.ts]}

    def __call__(self, k: np.ndarray) -> np.ndarray:
        return np.isin(np.asarray(k, dtype=np.int64), self.ts).astype(np.uint8)


def powers(base: int, count: int) -> list[int]:
    """The geometric set [1, base, base^2, ..., base^(count - 1)]

    Parameters
    ----------
    base : int
        Integer ratio, at least 2
    count : int
        Number of terms, the largest term must fit a signed 64-bit integer

    Returns
    -------
    list[int]
        Strictly increasing powers
    """
    if base < 2:
        raise ValueError(f"Base must be at least 2, got {base}")
    out = [base**i for i in range(count)]
    if out and out[-1] >= 2**63:
        raise ValueError(f"{base}^{count - 1} does not fit a signed 64-bit integer")
    return out


def lacunarity_ratio(ts: list[int]) -> float:
    """Finite sample estimate of limsup t_n / t_(n+1): the largest ratio over the
    second half of the consecutive pairs. Lacunary sets have a value below 1.

    Parameters
    ----------
    ts : list[int]
        Strictly increasing positive integers, at least two

    Returns
    -------
    float
        Estimated lim sup ratio
    """
    if len(ts) < 2:
        raise ValueError("Need at least two terms to estimate the lacunarity ratio")
    ratios = np.asarray(ts[:-1], dtype=np.float64) / np.asarray(ts[1:], dtype=np.float64)
    return float(np.max(ratios[len(ratios) // 2 :]))


def lacunary_bits(ts: list[int], start: int, length: int) -> SequenceSlice:
    """Slice of the indicator sequence of {t_n} on [start, start + length)

    Parameters
    ----------
    ts : list[int]
        Strictly increasing positive integers
    start : int
        First index
    length : int
        Number of bits

    Returns
    -------
    SequenceSlice
        Bit slice, zero outside of the set
    """
    return fetch_slice(Lacunary(ts), start, length)
