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

from dataclasses import dataclass

import numpy as np

from hartmanlab.sequence.base import SequenceSlice
from hartmanlab.statistics.utils import SequenceLike, _evaluate, _prefix_sums


@dataclass
class CesaroTrace:
    """Cesaro averages s_n = (1/n) sum_{k=0}^{n-1} f(base_point + k)

    Parameters
    ----------
    n_values : list[int]
        Averaging lengths
    averages : list[float]
        s_n for each length
    base_point : int
        Starting index of the orbit
    """

    n_values: list[int]
    averages: list[float]
    base_point: int

    def __post_init__(self) -> None:
        if len(self.n_values) != len(self.averages):
            raise ValueError("Cesaro trace needs one average per length")


def cesaro_trace(f: SequenceLike, base_point: int, n_values: list[int]) -> CesaroTrace:
    """Cesaro averages of f along the shift orbit of base_point. The sum runs in
    ascending k in one pass, so results are reproducible bit for bit.

    Parameters
    ----------
    f : SequenceLike
        Real valued slice, sequence source or callback
    base_point : int
        First index of every average
    n_values : list[int]
        Positive averaging lengths, any order

    Returns
    -------
    CesaroTrace
        Averages over [base_point, base_point + n)

    Raises
    ------
    ValueError
        If a length is not positive or runs past the end of a slice
    """
    if len(n_values) == 0:
        raise ValueError("Need at least one averaging length")
    if min(n_values) < 1:
        raise ValueError(f"Averaging lengths must be positive, got {min(n_values)}")
    n_max = int(max(n_values))
    if isinstance(f, SequenceSlice) and (
        base_point < f.start or base_point + n_max > f.stop
    ):
        raise ValueError(
            f"Averages over [{base_point}, {base_point + n_max}) leave the slice "
            f"[{f.start}, {f.stop})"
        )
    c = _prefix_sums(_evaluate(f, base_point, base_point + n_max))
    n = np.asarray(n_values, dtype=np.int64)
    averages = [c[int(i)].item() / int(i) for i in n]
    return CesaroTrace(
        n_values=[int(i) for i in n], averages=averages, base_point=int(base_point)
    )
