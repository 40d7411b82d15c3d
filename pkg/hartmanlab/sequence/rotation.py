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

from fractions import Fraction
from typing import Any

from hartmanlab.compact import Torus
from hartmanlab.sequence.base import SequenceSlice
from hartmanlab.sequence.hartman import HartmanSet
from hartmanlab.sequence.utils import fetch_slice
from hartmanlab.window import ArcSet, TorusBox, Window


class Rotation(HartmanSet):
    """Coding of the circle rotation x -> x + alpha by an arc, a(k) = 1 iff
    k alpha mod 1 lies in [a, b) (a Beatty type sequence)

    Parameters
    ----------
    alpha : float | Fraction
        Rotation number in [0, 1)
    a : float
        Left arc endpoint, included
    b : float
        Right arc endpoint, excluded; a > b wraps around
    """

    def __init__(self, alpha: float | Fraction, a: float, b: float):
        spec = Torus([alpha])
        window = Window(spec, {0: TorusBox([ArcSet([(a, b)])])})
        super().__init__(spec, window)
        self.alpha = spec.alphas[0]
        self.arc = (a, b)

    @property
    def descriptor(self) -> dict[str, Any]:
        return super().descriptor | {"family": "rotation"}


class Sturmian(Rotation):
    """Sturmian sequence of slope alpha, coding the rotation by the partition
    [0, alpha), [alpha, 1): a(k) = 1 iff k alpha mod 1 >= alpha

    Parameters
    ----------
    alpha : float | Fraction
        Rotation number in (0, 1)
    """

    def __init__(self, alpha: float | Fraction):
        if not 0 < alpha < 1:
            raise ValueError(f"Sturmian slope must lie in (0, 1), got {alpha}")
        super().__init__(alpha, float(alpha), 1.0)

    @property
    def descriptor(self) -> dict[str, Any]:
        return super().descriptor | {"family": "sturmian", "alpha": str(self.alpha)}


def sturmian(alpha: float | Fraction, start: int, length: int) -> SequenceSlice:
    """Slice of the Sturmian sequence of slope alpha

    Parameters
    ----------
    alpha : float | Fraction
        Rotation number in (0, 1); rational values give periodic sequences
    start : int
        First index
    length : int
        Number of bits

    Returns
    -------
    SequenceSlice
        Bit slice
    """
    return fetch_slice(Sturmian(alpha), start, length)


def rotation_bits(
    alpha: float | Fraction, a: float, b: float, start: int, length: int
) -> SequenceSlice:
    """Slice of the rotation coding of the arc [a, b)

    Parameters
    ----------
    alpha : float | Fraction
        Rotation number in [0, 1)
    a : float
        Left arc endpoint
    b : float
        Right arc endpoint
    start : int
        First index
    length : int
        Number of bits

    Returns
    -------
    SequenceSlice
        Bit slice
    """
    return fetch_slice(Rotation(alpha, a, b), start, length)
