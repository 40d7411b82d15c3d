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

import json
from dataclasses import dataclass, field
from typing import Any, Protocol, runtime_checkable

import numpy as np
import xarray as xr


@runtime_checkable
class SequenceSource(Protocol):
    """Bounded sequence on Z interface, evaluated on integer arrays."""

    @property
    def descriptor(self) -> dict[str, Any]:
        """Provenance record, JSON serializable"""
        pass

    def __call__(self, k: np.ndarray) -> np.ndarray:
        """Evaluate the sequence

        Parameters
        ----------
        k : np.ndarray
            1D integer array of indices

        Returns
        -------
        np.ndarray
            Values at the indices, uint8 for 0-1 sequences
        """
        pass


@dataclass
class SequenceSlice:
    """A finite window values[i] = a(start + i) of a sequence on Z

    Parameters
    ----------
    start : int
        Index of the first value
    values : np.ndarray
        Non-empty array of values, uint8 for bit sequences
    descriptor : dict[str, Any], optional
        Provenance record (spec and window, or named family and parameters)
    """

    start: int
    values: np.ndarray
    descriptor: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.start = int(self.start)
        self.values = np.asarray(self.values)
        if self.values.ndim != 1 or self.values.shape[0] == 0:
            raise ValueError("Sequence slice needs a non-empty 1D array of values")
        if self.values.dtype == np.uint8 and np.any(self.values > 1):
            raise ValueError("Bit sequence values must lie in {0, 1}")

    def __len__(self) -> int:
        return self.values.shape[0]

    @property
    def stop(self) -> int:
        """One past the last index"""
        return self.start + len(self)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.start, self.stop, dtype=np.int64)

    @property
    def is_bits(self) -> bool:
        return self.values.dtype == np.uint8

    def __call__(self, k: np.ndarray) -> np.ndarray:
        """Look up values by absolute index

        Raises
        ------
        ValueError
            If an index lies outside of the slice
        """
        k = np.asarray(k, dtype=np.int64)
        if k.size and (k.min() < self.start or k.max() >= self.stop):
            raise ValueError(
                f"Indices [{k.min()}, {k.max()}] outside of slice [{self.start}, {self.stop})"
            )
        return self.values[k - self.start]

    def to_xarray(self) -> xr.DataArray:
        """Labelled copy with dimension "k" and the descriptor as a JSON attribute"""
        return xr.DataArray(
            data=self.values,
            dims=["k"],
            coords={"k": self.indices},
            attrs={"descriptor": json.dumps(self.descriptor, sort_keys=True)},
        )
