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
from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from hartmanlab.sequence.base import SequenceSlice

# Widest block packed into a single integer code
PACKED_WIDTH = 62


@dataclass
class ComplexityProfile:
    """Subword complexity p(n) of a finite bit sample

    Parameters
    ----------
    n_values : list[int]
        Block lengths 1, ..., n_max
    counts : list[int]
        Number of distinct blocks of each length
    sample_length : int
        Length of the sample the counts were taken from
    """

    n_values: list[int]
    counts: list[int]
    sample_length: int

    def __post_init__(self) -> None:
        for n, p in zip(self.n_values, self.counts):
            if not 1 <= p <= min(2**n, self.sample_length - n + 1):
                raise ValueError(f"Count p({n}) = {p} out of bounds")
        # only the final block of a sample can lack a one-bit extension
        if any(b < a - 1 for a, b in zip(self.counts, self.counts[1:])):
            raise ValueError("Subword complexity drops by more than one block")


def _count_packed(bits: np.ndarray, n: int) -> int:
    """Distinct length-n blocks by rolling integer codes"""
    codes = np.zeros(bits.shape[0] - n + 1, dtype=np.uint64)
    for i in range(n):
        codes = (codes << np.uint64(1)) | bits[i : i + codes.shape[0]].astype(
            np.uint64
        )
    return int(np.unique(codes).shape[0])


def _count_rows(bits: np.ndarray, n: int) -> int:
    """Distinct length-n blocks as unique rows of a sliding window view"""
    return int(np.unique(sliding_window_view(bits, n), axis=0).shape[0])


def subword_complexity(bits: SequenceSlice, n_max: int) -> ComplexityProfile:
    """Number of distinct 0-1 blocks of each length 1, ..., n_max occurring anywhere
    in a bit slice

    Parameters
    ----------
    bits : SequenceSlice
        Bit slice, at least 4 * n_max long
    n_max : int
        Largest block length, positive

    Returns
    -------
    ComplexityProfile
        Counts p(1), ..., p(n_max)

    Raises
    ------
    ValueError
        If the slice is not a bit slice or is too short
    """
    if n_max < 1:
        raise ValueError(f"Largest block length must be positive, got {n_max}")
    if not bits.is_bits:
        raise ValueError("Subword complexity needs a bit slice")
    if len(bits) < 4 * n_max:
        raise ValueError(
            f"Slice of length {len(bits)} too short for blocks up to {n_max}, "
            f"need at least {4 * n_max}"
        )
    values = bits.values
    counts = []
    for n in range(1, n_max + 1):
        if n <= PACKED_WIDTH:
            counts.append(_count_packed(values, n))
        else:
            counts.append(_count_rows(values, n))
    return ComplexityProfile(
        n_values=list(range(1, n_max + 1)), counts=counts, sample_length=len(bits)
    )


def entropy_profile(profile: ComplexityProfile) -> list[float]:
    """Entropy diagnostic (1/n) ln p(n) for every length in a profile

    Parameters
    ----------
    profile : ComplexityProfile
        Complexity profile

    Returns
    -------
    list[float]
        One value per block length
    """
    return [math.log(p) / n for n, p in zip(profile.n_values, profile.counts)]
