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

import math
from fractions import Fraction

import numpy as np
import pytest

from hartmanlab.finite import (
    FiniteSystem,
    all_systems,
    cesaro_average,
    decompose,
    fapm_interval,
    invariant_mean_simplex,
    orbit_frequency,
    random_system,
    simplex_grid,
    value_interval,
    verify_against_bruteforce,
)


@pytest.mark.parametrize(
    "T,cycles,basin_of",
    [
        ([0], [[0]], [0]),
        ([1, 0, 2], [[0, 1], [2]], [0, 0, 1]),
        ([1, 2, 0, 0], [[0, 1, 2]], [0, 0, 0, 0]),
        ([2, 2, 3, 2, 4], [[2, 3], [4]], [0, 0, 0, 0, 1]),
        ([3, 3, 3, 3], [[3]], [0, 0, 0, 0]),
    ],
)
def test_decompose(T, cycles, basin_of):
    dec = decompose(FiniteSystem.from_map(T))
    assert dec.cycles == cycles
    assert dec.basin_of == basin_of


def test_decompose_basins():
    dec = decompose(FiniteSystem.from_map([1, 0, 2, 2, 3]))
    assert dec.basin(0) == [0, 1]
    assert dec.basin(1) == [2, 3, 4]
    assert dec.cycle_of == {0: 0, 1: 0, 2: 1}


def test_invalid_systems():
    with pytest.raises(ValueError):
        FiniteSystem.from_map([])
    with pytest.raises(ValueError):
        FiniteSystem.from_map([0, 2])
    with pytest.raises(ValueError):
        FiniteSystem(3, (0, 1))


def test_simplex():
    means = invariant_mean_simplex(FiniteSystem.from_map([1, 0, 2, 2]))
    assert means.simplex_dim == 1
    assert means.cycle_means == [
        (Fraction(1, 2), Fraction(1, 2), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1), Fraction(0)),
    ]
    assert means.evaluate([0, 1, 1, 5]) == [Fraction(1, 2), Fraction(1)]


def test_mixture():
    means = invariant_mean_simplex(FiniteSystem.from_map([1, 0, 2]))
    mix = means.mixture(["1/3", "2/3"])
    assert mix == (Fraction(1, 6), Fraction(1, 6), Fraction(2, 3))
    with pytest.raises(ValueError):
        means.mixture([1, 1])
    with pytest.raises(ValueError):
        means.mixture([2, -1])


@pytest.mark.parametrize(
    "T,f,interval",
    [
        ([1, 0, 2], [0, 1, 1], (Fraction(1, 2), Fraction(1))),
        ([1, 2, 0], [1, 2, 6], (Fraction(3), Fraction(3))),
        ([0, 1, 2], ["1/3", "-1", 0], (Fraction(-1), Fraction(1, 3))),
        ([1, 1, 1], [7, 0, 7], (Fraction(0), Fraction(0))),
    ],
)
def test_value_interval(T, f, interval):
    assert value_interval(FiniteSystem.from_map(T), f) == interval


def test_value_interval_size_mismatch():
    with pytest.raises(ValueError):
        value_interval(FiniteSystem.from_map([1, 0]), [1, 2, 3])


@pytest.mark.timeout(30)
def test_oracle_exhaustive():
    rng = np.random.default_rng(0)
    for size in range(1, 5):
        for sys in all_systems(size):
            f = [Fraction(int(v), 3) for v in rng.integers(-6, 7, size=size)]
            assert verify_against_bruteforce(sys, f)


@pytest.mark.timeout(60)
def test_oracle_random():
    rng = np.random.default_rng(1)
    for _ in range(200):
        size = int(rng.integers(1, 9))
        sys = random_system(size, rng)
        f = [int(v) for v in rng.integers(-10, 11, size=size)]
        assert verify_against_bruteforce(sys, f, grid_resolution=12)


def test_oracle_size_limit():
    with pytest.raises(ValueError):
        verify_against_bruteforce(FiniteSystem.from_map(list(range(9))), [0] * 9)


def test_simplex_grid():
    grid = simplex_grid(3, 4)
    assert grid.shape == (math.comb(6, 2), 3)
    assert np.all(grid.sum(axis=1) == 4)
    assert np.all(grid >= 0)
    assert len({tuple(r) for r in grid}) == grid.shape[0]
    assert simplex_grid(1, 5).tolist() == [[5]]


def test_cycle_means_invariant():
    rng = np.random.default_rng(2)
    for _ in range(100):
        size = int(rng.integers(1, 12))
        sys = random_system(size, rng)
        f = [Fraction(int(v), 7) for v in rng.integers(-20, 21, size=size)]
        f_after_t = [f[sys(x)] for x in range(size)]
        means = invariant_mean_simplex(sys)
        assert means.evaluate(f) == means.evaluate(f_after_t)


def test_cesaro_convergence():
    rng = np.random.default_rng(3)
    for _ in range(50):
        size = int(rng.integers(1, 10))
        sys = random_system(size, rng)
        f = [int(v) for v in rng.integers(-5, 6, size=size)]
        dec = decompose(sys)
        means = invariant_mean_simplex(sys).evaluate(f)
        L = math.lcm(*(len(c) for c in dec.cycles))
        for j in (10, 100):
            s = cesaro_average(sys, f, j * L)
            for x in range(size):
                # the transient prefix has at most size steps of bounded f
                assert abs(s[x] - means[dec.basin_of[x]]) <= Fraction(2 * 5 * size, j * L)
        # on a cycle the average is exact at multiples of the cycle length
        s = cesaro_average(sys, f, L)
        for i, cycle in enumerate(dec.cycles):
            assert all(s[x] == means[i] for x in cycle)


def test_cesaro_errors():
    sys = FiniteSystem.from_map([0])
    with pytest.raises(ValueError):
        cesaro_average(sys, [1], 0)


def test_cycles_inside_basins():
    rng = np.random.default_rng(4)
    for _ in range(100):
        dec = decompose(random_system(int(rng.integers(1, 20)), rng))
        for i, cycle in enumerate(dec.cycles):
            assert set(cycle) <= set(dec.basin(i))


def test_orbit_frequency():
    sys = FiniteSystem.from_map([1, 0, 2])
    assert orbit_frequency(sys, [0], 4) == [Fraction(1, 2), Fraction(1, 2), Fraction(0)]
    assert orbit_frequency(sys, [0], 3) == [Fraction(2, 3), Fraction(1, 3), Fraction(0)]
    with pytest.raises(ValueError):
        orbit_frequency(sys, [3], 2)


def test_fapm_interval():
    sys = FiniteSystem.from_map([1, 0, 2, 0])
    assert fapm_interval(sys, [0, 3]) == (Fraction(0), Fraction(1, 2))
    assert fapm_interval(sys, [0, 1, 2]) == (Fraction(1), Fraction(1))
    assert fapm_interval(sys, []) == (Fraction(0), Fraction(0))


@pytest.mark.exhaustive
@pytest.mark.timeout(600)
def test_oracle_exhaustive_size_five(rng):
    for sys in all_systems(5):
        f = [int(v) for v in rng.integers(-4, 5, size=5)]
        assert verify_against_bruteforce(sys, f, grid_resolution=6)
