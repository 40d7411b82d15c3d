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
import math
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

import numpy as np
from loguru import logger

from hartmanlab.finite.means import Rational, _as_fractions, invariant_mean_simplex
from hartmanlab.finite.system import FiniteSystem

# Largest system the oracle enumerates
MAX_ORACLE_SIZE = 8


@lru_cache(maxsize=64)
def simplex_grid(size: int, resolution: int) -> np.ndarray:
    """Every probability vector on `size` states with entries in (1/resolution)Z,
    as integer numerators (compositions of resolution into size parts)

    Parameters
    ----------
    size : int
        Number of states
    resolution : int
        Common denominator of the grid

    Returns
    -------
    np.ndarray
        Read-only int64 array of shape [C(resolution + size - 1, size - 1), size]
    """
    if size == 1:
        grid = np.array([[resolution]], dtype=np.int64)
        grid.setflags(write=False)
        return grid
    slots = resolution + size - 1
    bars = np.array(
        list(itertools.combinations(range(slots), size - 1)), dtype=np.int64
    )
    lo = np.full((bars.shape[0], 1), -1, dtype=np.int64)
    hi = np.full((bars.shape[0], 1), slots, dtype=np.int64)
    grid = np.diff(np.concatenate([lo, bars, hi], axis=1), axis=1) - 1
    grid.setflags(write=False)
    return grid


def verify_against_bruteforce(
    sys: FiniteSystem, f: Sequence[Rational], grid_resolution: int = 12
) -> bool:
    """Brute-force check of the cycle mean characterization and the value interval.

    Candidates are the grid of probability vectors with denominator
    `grid_resolution` together with the computed cycle means, all scaled to a
    common denominator. A candidate p is invariant iff p(T^-1{y}) = p({y}) for
    every state y, which by additivity covers every subset A of X. Every invariant
    candidate must vanish off the cycles and be constant on each cycle, its value
    p(f) must lie in [a, b], and both a and b must be attained.

    Parameters
    ----------
    sys : FiniteSystem
        Finite system with at most 8 states
    f : Sequence[Rational]
        Rational values of f
    grid_resolution : int, optional
        Denominator of the simplex grid, by default 12

    Returns
    -------
    bool
        False on any discrepancy
    """
    if sys.size > MAX_ORACLE_SIZE:
        raise ValueError(
            f"Oracle enumerates systems of at most {MAX_ORACLE_SIZE} states, "
            f"got {sys.size}"
        )
    values = _as_fractions(f, sys.size)
    means = invariant_mean_simplex(sys)
    a, b = min(means.evaluate(values)), max(means.evaluate(values))

    cycles = means.decomposition.cycles
    lengths = [len(c) for c in cycles]
    L = math.lcm(grid_resolution, *lengths)
    F = math.lcm(*(v.denominator for v in values))
    f_num = np.array([int(v * F) for v in values], dtype=object)

    # candidates as integer numerators over L
    grid = simplex_grid(sys.size, grid_resolution) * (L // grid_resolution)
    vertices = []
    for m in means.cycle_means:
        row = [w * L for w in m]
        if any(r.denominator != 1 or r < 0 for r in row) or sum(m) != 1:
            logger.warning(f"Cycle mean {m} is not a probability vector")
            return False
        vertices.append([int(r) for r in row])
    candidates = np.concatenate([grid, np.array(vertices, dtype=np.int64)], axis=0)

    # push forward through T: q[y] = sum_{x : T(x) = y} p[x]
    M = np.zeros((sys.size, sys.size), dtype=np.int64)
    M[np.arange(sys.size), sys.array] = 1
    invariant = np.all(candidates @ M == candidates, axis=1)
    if not np.all(invariant[grid.shape[0] :]):
        logger.warning("A computed cycle mean is not invariant")
        return False
    survivors = candidates[invariant]

    on_cycle = np.zeros(sys.size, dtype=bool)
    for cycle in cycles:
        on_cycle[cycle] = True
        if np.any(survivors[:, cycle] != survivors[:, cycle[:1]]):
            logger.warning(f"Invariant candidate not constant on cycle {cycle}")
            return False
    if np.any(survivors[:, ~on_cycle] != 0):
        logger.warning("Invariant candidate charges a transient state")
        return False

    # p(f) * L * F as exact integers
    scaled = survivors.astype(object) @ f_num
    lo, hi = a * L * F, b * L * F
    if any(not lo <= Fraction(int(v)) <= hi for v in scaled):
        logger.warning(f"Invariant candidate value outside of [{a}, {b}]")
        return False
    if min(scaled) != lo or max(scaled) != hi:
        logger.warning(f"Interval [{a}, {b}] not attained by invariant candidates")
        return False
    return True
