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

from typing import Any, Literal

import numpy as np

from hartmanlab.sequence.base import SequenceSlice
from hartmanlab.sequence.utils import fetch_slice


def _bit_length(m: np.ndarray) -> np.ndarray:
    """Vectorized int.bit_length for non-negative integers"""
    m = m.copy()
    out = np.zeros(m.shape, dtype=np.int64)
    while np.any(m > 0):
        out += m > 0
        m >>= 1
    return out


class EvenOddBlocks:
    """Alternating block sets on Z at powers-of-two scale. With A = 2Z,

        B1 = U_n (2^(2n-1), 2^(2n)] n 2Z,  B2 = U_n (2^(2n), 2^(2n+1)] n (2Z + 1),
        B = B1 u B2 u -B1 u -B2,

    the sets A and B have Banach density 1/2 while A n B = B1 u -B1 has lower
    Banach density 0 and upper Banach density 1/2. Block boundaries at 2^n replace
    the factorials of the classical construction so the blocks fit desk scale.

    Parameters
    ----------
    member : Literal["A", "B", "AB"], optional
        Which set to code, by default "AB" (the intersection)
    """

    def __init__(self, member: Literal["A", "B", "AB"] = "AB"):
        if member not in ("A", "B", "AB"):
            raise ValueError(f"Unknown block set {member}, use A, B or AB")
        self.member = member

    @property
    def descriptor(self) -> dict[str, Any]:
        return {"family": "blocks", "member": self.member, "scale": "2^n"}

    def __call__(self, k: np.ndarray) -> np.ndarray:
        k = np.asarray(k, dtype=np.int64)
        even = k % 2 == 0
        if self.member == "A":
            return even.astype(np.uint8)

        m = np.abs(k)
        # m lies in the block (2^(e-1), 2^e] with e = bit_length(m - 1)
        e = _bit_length(np.maximum(m - 1, 0))
        in_b = (m > 2) & (((e % 2 == 0) & even) | ((e % 2 == 1) & ~even))
        if self.member == "B":
            return in_b.astype(np.uint8)
        return (in_b & even).astype(np.uint8)


def block_bits(
    member: Literal["A", "B", "AB"], start: int, length: int
) -> SequenceSlice:
    """Slice of one of the alternating block sets

    Parameters
    ----------
    member : Literal["A", "B", "AB"]
        Which set to code
    start : int
        First index
    length : int
        Number of bits

    Returns
    -------
    SequenceSlice
        Bit slice
    """
    return fetch_slice(EvenOddBlocks(member), start, length)
