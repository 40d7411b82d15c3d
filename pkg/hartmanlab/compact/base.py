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
from typing import Any, Protocol, runtime_checkable

import numpy as np

# Per factor coordinate: tuple[float, ...] (torus), int (cyclic), tuple[int, ...]
# (triadic digits, least significant first)
Coordinate = Any


@dataclass(frozen=True)
class CompactPoint:
    """A point of a finitely described compactification, one coordinate per factor

    Parameters
    ----------
    coords : tuple[Coordinate, ...]
        Torus factors hold a tuple of reals in [0,1), cyclic factors a residue and
        triadic factors a tuple of base-3 digits (least significant first)
    """

    coords: tuple[Coordinate, ...]

    def __getitem__(self, index: int) -> Coordinate:
        return self.coords[index]

    def __len__(self) -> int:
        return len(self.coords)


@runtime_checkable
class Compactification(Protocol):
    """Single factor compactification interface. The group is identified with the
    coordinates returned by `embed`; `add` and `neg` realise the group law."""

    kind: str

    def embed(self, k: np.ndarray) -> np.ndarray:
        """Vectorized embedding of integers into the factor

        Parameters
        ----------
        k : np.ndarray
            1D array of integers

        Returns
        -------
        np.ndarray
            Coordinates batched along the first axis
        """
        pass

    def coordinate(self, row: np.ndarray) -> Coordinate:
        """Convert one row of `embed` output into a hashable coordinate"""
        pass

    def add(self, p: Coordinate, q: Coordinate) -> Coordinate:
        """Group addition of two coordinates"""
        pass

    def neg(self, p: Coordinate) -> Coordinate:
        """Group inverse of a coordinate"""
        pass

    def validate(self, p: Coordinate) -> None:
        """Raise ValueError if the coordinate does not conform to the factor"""
        pass

    def period(self) -> int | None:
        """Exact period of the embedding, None if its image is infinite"""
        pass

    def to_json(self) -> dict[str, Any]:
        """JSON document describing the factor"""
        pass
