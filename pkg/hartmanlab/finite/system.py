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

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FiniteSystem:
    """A self-map T of the finite set X = {0, ..., size - 1}

    Parameters
    ----------
    size : int
        Number of states, positive
    map : tuple[int, ...]
        Images T(0), ..., T(size - 1)
    """

    size: int
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "map", tuple(int(t) for t in self.map))
        if self.size < 1:
            raise ValueError(f"Finite system needs at least one state, got {self.size}")
        if len(self.map) != self.size:
            raise ValueError(
                f"Map has {len(self.map)} entries for {self.size} states"
            )
        for x, t in enumerate(self.map):
            if not 0 <= t < self.size:
                raise ValueError(f"T({x}) = {t} is not a state of X")

    @classmethod
    def from_map(cls, T: list[int] | tuple[int, ...] | np.ndarray) -> "FiniteSystem":
        T = tuple(int(t) for t in T)
        return cls(len(T), T)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.map, dtype=np.int64)

    def __call__(self, x: int) -> int:
        return self.map[x]


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles C_x of a finite system and the basin each state falls into

    Parameters
    ----------
    cycles : list[list[int]]
        Disjoint cycles, ordered by smallest state, each starting at its smallest
        state and following T
    basin_of : list[int]
        Index into cycles for every state
    """

    cycles: list[list[int]]
    basin_of: list[int]

    def basin(self, i: int) -> list[int]:
        """States whose forward orbit enters cycle i"""
        return [x for x, c in enumerate(self.basin_of) if c == i]

    @property
    def cycle_of(self) -> dict[int, int]:
        """Cycle index of every periodic state"""
        return {x: i for i, cycle in enumerate(self.cycles) for x in cycle}


def decompose(sys: FiniteSystem) -> CycleDecomposition:
    """Cycle and basin decomposition by visited-marking orbit walks

    Parameters
    ----------
    sys : FiniteSystem
        Finite system

    Returns
    -------
    CycleDecomposition
        Canonically ordered decomposition
    """
    # 0 unvisited, 1 on the current walk, 2 resolved
    state = [0] * sys.size
    basin: list[int] = [-1] * sys.size
    cycles: list[list[int]] = []

    for x0 in range(sys.size):
        if state[x0]:
            continue
        walk = []
        x = x0
        while state[x] == 0:
            state[x] = 1
            walk.append(x)
            x = sys(x)
        if state[x] == 1:
            # closed a new cycle at x
            cycle = walk[walk.index(x) :]
            cycles.append(cycle)
            index = len(cycles) - 1
        else:
            index = basin[x]
        for y in walk:
            state[y] = 2
            basin[y] = index

    # canonical order: cycles by smallest state, each rotated to its smallest state
    order = sorted(range(len(cycles)), key=lambda i: min(cycles[i]))
    relabel = {old: new for new, old in enumerate(order)}
    canonical = []
    for i in order:
        cycle = cycles[i]
        start = cycle.index(min(cycle))
        canonical.append(cycle[start:] + cycle[:start])
    return CycleDecomposition(
        cycles=canonical, basin_of=[relabel[b] for b in basin]
    )


def random_system(size: int, rng: np.random.Generator | None = None) -> FiniteSystem:
    """Uniformly random self-map of a set of the given size

    Parameters
    ----------
    size : int
        Number of states
    rng : np.random.Generator | None, optional
        Random generator, by default a fresh default_rng()
    """
    rng = np.random.default_rng() if rng is None else rng
    return FiniteSystem.from_map(rng.integers(0, size, size=size))


def all_systems(size: int) -> Iterator[FiniteSystem]:
    """Every one of the size^size self-maps of a set of the given size"""
    for T in itertools.product(range(size), repeat=size):
        yield FiniteSystem(size, T)
