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

from hartmanlab.compact import CompactificationSpec, embed, spec_to_json
from hartmanlab.sequence.base import SequenceSlice
from hartmanlab.sequence.utils import fetch_slice
from hartmanlab.window import Window, window_to_json


def _check_window(spec: CompactificationSpec, w: Window) -> None:
    if w.spec != spec:
        raise ValueError(f"Window of {w.spec} does not conform to {spec}")


class HartmanSet:
    """Indicator sequence of the Hartman set iota^-1[M] for a window M

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification
    window : Window
        Continuity set M inside the compactification
    """

    def __init__(self, spec: CompactificationSpec, window: Window):
        _check_window(spec, window)
        self.spec = spec
        self.window = window

    @property
    def descriptor(self) -> dict[str, Any]:
        return {
            "family": "hartman",
            "spec": spec_to_json(self.spec),
            "window": window_to_json(self.window),
        }

    def __call__(self, k: np.ndarray) -> np.ndarray:
        """Bits a(k) = 1 iff iota(k) lies in the window

        Parameters
        ----------
        k : np.ndarray
            1D integer array

        Returns
        -------
        np.ndarray
            uint8 array of bits
        """
        return self.window.contains_blocks(embed(self.spec, k)).astype(np.uint8)


class HartmanFunction:
    """Hartman function F o iota for a window-weighted simple function
    F = sum_j c_j 1_{M_j}

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification
    terms : list[tuple[Window, complex]]
        Windows and their coefficients
    """

    def __init__(
        self, spec: CompactificationSpec, terms: list[tuple[Window, complex]]
    ):
        for w, _ in terms:
            _check_window(spec, w)
        self.spec = spec
        self.terms = [(w, complex(c)) for w, c in terms]

    @property
    def is_real(self) -> bool:
        return all(c.imag == 0 for _, c in self.terms)

    @property
    def descriptor(self) -> dict[str, Any]:
        return {
            "family": "hartman_function",
            "spec": spec_to_json(self.spec),
            "terms": [
                {"window": window_to_json(w), "coefficient": [c.real, c.imag]}
                for w, c in self.terms
            ],
        }

    def __call__(self, k: np.ndarray) -> np.ndarray:
        blocks = embed(self.spec, k)
        dtype = np.float64 if self.is_real else np.complex128
        out = np.zeros(blocks[0].shape[0], dtype=dtype)
        for w, c in self.terms:
            out += (c.real if self.is_real else c) * w.contains_blocks(blocks)
        return out


def hartman_bits(
    spec: CompactificationSpec, w: Window, start: int, length: int
) -> SequenceSlice:
    """Slice of the Hartman sequence 1_{iota^-1[w]} on [start, start + length)

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification
    w : Window
        Window of the compactification
    start : int
        First index
    length : int
        Number of bits, positive

    Returns
    -------
    SequenceSlice
        Bit slice
    """
    return fetch_slice(HartmanSet(spec, w), start, length)


def hartman_real(
    spec: CompactificationSpec,
    terms: list[tuple[Window, complex]],
    start: int,
    length: int,
) -> SequenceSlice:
    """Slice of the Hartman function sum_j c_j 1_{w_j} o iota on
    [start, start + length). Values are real when every coefficient is real.

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification
    terms : list[tuple[Window, complex]]
        Windows and coefficients of the simple function
    start : int
        First index
    length : int
        Number of values, positive

    Returns
    -------
    SequenceSlice
        Real or complex slice
    """
    return fetch_slice(HartmanFunction(spec, terms), start, length)
