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

from collections.abc import Callable

import numpy as np
import torch

from hartmanlab.sequence.base import SequenceSlice, SequenceSource

SequenceLike = SequenceSlice | SequenceSource | Callable[[np.ndarray], np.ndarray]


def _evaluate(f: SequenceLike, lo: int, hi: int) -> np.ndarray:
    """Values of f on [lo, hi). This is meant for internal use.

    Parameters
    ----------
    f : SequenceLike
        Slice, sequence source or plain callback on integer arrays
    lo : int
        First index
    hi : int
        One past the last index
    """
    values = np.asarray(f(np.arange(lo, hi, dtype=np.int64)))
    if values.shape != (hi - lo,):
        raise ValueError(
            f"Sequence returned shape {values.shape} on a range of length {hi - lo}"
        )
    if np.iscomplexobj(values):
        raise ValueError("Averages over windows need a real valued sequence")
    return values


def _prefix_sums(values: np.ndarray) -> torch.Tensor:
    """Prefix sums c[i] = sum(values[:i]), with c[0] = 0. Bit and integer inputs
    are summed exactly in int64, everything else in float64.
    """
    if values.dtype.kind in "biu":
        x = torch.from_numpy(values.astype(np.int64))
    else:
        x = torch.from_numpy(values.astype(np.float64))
    return torch.cat([torch.zeros(1, dtype=x.dtype), torch.cumsum(x, dim=0)])


def _window_sums(values: np.ndarray, window: int) -> torch.Tensor:
    """Sums over every length-`window` run of consecutive values"""
    c = _prefix_sums(values)
    return c[window:] - c[:-window]


def _scan_limits(f: SequenceLike, window: int, scan: int) -> tuple[int, int]:
    """Range [first, last] of window start positions n in [-scan, scan] for which
    f is known on [n, n + window). Sources are known everywhere, slices only on
    their own range.

    Raises
    ------
    ValueError
        If no window fits
    """
    first, last = -scan, scan
    if isinstance(f, SequenceSlice):
        first = max(first, f.start)
        last = min(last, f.stop - window)
    if first > last:
        raise ValueError(
            f"Evaluation range shorter than one window of length {window}"
        )
    return first, last
