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

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from hartmanlab.statistics import SequenceLike


@dataclass
class DoubleLimitReport:
    """Finite estimates of the two iterated limits of f(k_i + l_j)

    Parameters
    ----------
    ks_outer : float
        lim_i lim_j f(k_i + l_j), estimated by the mean over pairs with j > i
    ls_outer : float
        lim_j lim_i f(k_i + l_j), estimated by the mean over pairs with i > j
    size : int
        Number of indices per family entering the estimate
    """

    ks_outer: float
    ls_outer: float
    size: int

    @property
    def gap(self) -> float:
        return abs(self.ks_outer - self.ls_outer)


def double_limits(
    f: SequenceLike,
    ks: Sequence[int] | np.ndarray,
    ls: Sequence[int] | np.ndarray,
    burn_in: int = 0,
) -> DoubleLimitReport:
    """Iterated limits of the matrix A[i, j] = f(k_i + l_j) over two finite index
    families. The inner limit is taken first in the triangle where its index runs
    ahead: lim_i lim_j is read off the pairs j > i and lim_j lim_i off the pairs
    i > j. Weakly almost periodic functions give equal limits whenever both exist,
    so a gap that persists as the families grow flags a function outside that
    class.

    Parameters
    ----------
    f : SequenceLike
        Bounded real valued slice, sequence source or callback
    ks : Sequence[int] | np.ndarray
        First index family k_0, k_1, ...
    ls : Sequence[int] | np.ndarray
        Second index family, same length as ks
    burn_in : int, optional
        Leading indices of both families left out, by default 0

    Returns
    -------
    DoubleLimitReport
        Both iterated limit estimates

    Raises
    ------
    ValueError
        If the families differ in length or leave fewer than two indices
    """
    ks = np.asarray(ks, dtype=np.int64)
    ls = np.asarray(ls, dtype=np.int64)
    if ks.ndim != 1 or ks.shape != ls.shape:
        raise ValueError(
            f"Index families must be flat and of equal length, got {ks.shape} and {ls.shape}"
        )
    if burn_in < 0 or ks.shape[0] - burn_in < 2:
        raise ValueError(
            f"Burn in {burn_in} leaves fewer than two of {ks.shape[0]} indices"
        )
    ks, ls = ks[burn_in:], ls[burn_in:]
    m = ks.shape[0]

    points = np.add.outer(ks, ls)
    values = np.asarray(f(points.ravel()))
    if values.shape != (m * m,):
        raise ValueError(f"Sequence returned shape {values.shape} on {m * m} indices")
    if np.iscomplexobj(values):
        raise ValueError("Double limits need a real valued sequence")
    A = values.reshape(m, m).astype(np.float64)

    upper = np.triu_indices(m, k=1)
    lower = np.tril_indices(m, k=-1)
    return DoubleLimitReport(
        ks_outer=float(A[upper].mean()), ls_outer=float(A[lower].mean()), size=m
    )


def double_limit_gap(
    f: SequenceLike,
    ks: Sequence[int] | np.ndarray,
    ls: Sequence[int] | np.ndarray,
    burn_in: int = 0,
) -> float:
    """Gap between the two iterated limits of f(k_i + l_j), see `double_limits`"""
    return double_limits(f, ks, ls, burn_in).gap
