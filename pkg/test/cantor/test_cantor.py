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

from hartmanlab.cantor import (
    CantorSource,
    DiscreteMeasure,
    convolve,
    double_limit_gap,
    double_limits,
    f_n,
    f_tilde_n,
    fourier_stieltjes,
    nu,
    period_mean,
    total_variation,
    triadic_realization,
    truncation,
)
from hartmanlab.compact import Cyclic, Product, TriadicAdic, iota


@pytest.mark.parametrize(
    "n,k,expected",
    [
        (0, 5, 1.0),
        (1, 0, 1.0),
        (1, 1, -0.5),
        (1, 3, 1.0),
        (2, 3, -0.5),
        (2, 1, -0.5 * math.cos(2 * math.pi / 9)),
    ],
)
def test_f_tilde_n(n, k, expected):
    assert f_tilde_n(n, k) == pytest.approx(expected, abs=1e-15)
    assert f_n(n, k) == pytest.approx(expected**2, abs=1e-15)


def test_half_factor():
    k = np.arange(-20, 20)
    assert np.array_equal(
        f_tilde_n(3, k, include_half_factor=True), f_tilde_n(3, k) * (-1.0) ** k
    )


def test_array_shape():
    k = np.arange(12).reshape(3, 4)
    assert f_n(2, k).shape == (3, 4)
    assert isinstance(f_n(2, 4), float)


@pytest.mark.parametrize("n", range(1, 9))
def test_period_mean(n):
    assert abs(period_mean(n) - 2.0**-n) < 1e-12


def test_period_mean_zero():
    assert period_mean(0) == 1.0


def test_scaling_identity():
    k = np.arange(-(10**4), 10**4 + 1, dtype=np.int64)
    for n in range(7):
        assert np.array_equal(f_n(n + 1, 3 * k), f_n(n, k))


def test_monotone_and_bounded():
    k = np.arange(3**7, dtype=np.int64)
    previous = f_n(0, k)
    for n in range(1, 8):
        current = f_n(n, k)
        assert np.all(current <= previous)
        assert np.all((current >= 0) & (current <= 1))
        previous = current


@pytest.mark.parametrize("n", range(0, 6))
def test_truncation(n):
    t = truncation(n)
    assert t.period == 3**n
    assert t.expected_mean == 2.0**-n
    k = np.arange(3 * t.period)
    assert np.allclose(t(k), t(k + t.period), rtol=0, atol=1e-12)


def test_negative_n():
    with pytest.raises(ValueError):
        f_n(-1, 0)
    with pytest.raises(ValueError):
        truncation(-1)
    with pytest.raises(ValueError):
        CantorSource(-2)


def test_cantor_source():
    k = np.arange(-30, 30)
    assert np.array_equal(CantorSource(3)(k), f_n(3, k))
    assert CantorSource(3).descriptor == {"family": "cantor", "n": 3}
    assert CantorSource(3, include_half_factor=True).descriptor["family"] == "cantor_signed"


def test_convolve():
    a = DiscreteMeasure([(0, 0.5), (Fraction(1, 2), 0.5)])
    b = DiscreteMeasure.dirac(Fraction(1, 2))
    c = convolve(a, b)
    assert c.atoms == [(Fraction(0), 0.5 + 0j), (Fraction(1, 2), 0.5 + 0j)]

    d = convolve(DiscreteMeasure.dirac("1/3", 2.0), DiscreteMeasure.dirac("2/3", 1j))
    assert d.atoms == [(Fraction(0), 2j)]


def test_measure_merging():
    m = DiscreteMeasure([(0.25, 1.0), (Fraction(5, 4), 2.0), ("-3/4", -1.0)])
    assert len(m) == 1
    assert m.atoms == [(Fraction(1, 4), 2.0 + 0j)]
    assert m.total_mass == 2.0
    with pytest.raises(ValueError):
        DiscreteMeasure([])


def test_nu_one():
    assert nu(1).atoms == [(Fraction(1, 6), 0.5 + 0j), (Fraction(5, 6), 0.5 + 0j)]


@pytest.mark.parametrize("n", range(0, 9))
def test_nu_atoms(n):
    m = nu(n)
    assert len(m) == 2**n
    assert m.total_mass == pytest.approx(1.0, abs=1e-12)
    assert total_variation(m) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("n", range(0, 11))
def test_fourier_matches_signed_product(n):
    k = np.arange(-1000, 1001)
    transform = fourier_stieltjes(nu(n), k)
    expected = f_tilde_n(n, k, include_half_factor=True)
    assert np.max(np.abs(transform - expected)) < 1e-12


def test_fourier_homomorphism_nu():
    k = np.arange(-500, 501)
    for n in range(1, 9):
        step = DiscreteMeasure([(Fraction(-1, 3**n), 0.5), (Fraction(1, 3**n), 0.5)])
        lhs = fourier_stieltjes(convolve(nu(n - 1), step), k)
        rhs = fourier_stieltjes(nu(n - 1), k) * fourier_stieltjes(step, k)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_fourier_homomorphism_random():
    rng = np.random.default_rng(7)
    k = np.arange(-200, 201)
    for _ in range(100):
        a, b = (
            DiscreteMeasure(
                [
                    (Fraction(int(rng.integers(0, q)), int(q)), complex(*rng.normal(size=2)))
                    for q in rng.integers(1, 50, size=2)
                ]
            )
            for _ in range(2)
        )
        lhs = fourier_stieltjes(convolve(a, b), k)
        rhs = fourier_stieltjes(a, k) * fourier_stieltjes(b, k)
        assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_fourier_scalar():
    assert fourier_stieltjes(DiscreteMeasure.dirac(Fraction(1, 2)), 3) == pytest.approx(-1)


@pytest.mark.parametrize("n", [0, 1, 3, 5])
def test_triadic_realization(n):
    spec = TriadicAdic(8)
    for k in range(-50, 50):
        value = triadic_realization(n, iota(spec, k))
        assert value == f_n(n, k)
        assert value == triadic_realization(n, iota(spec, k + 3**n))
        assert triadic_realization(n + 1, iota(spec, k)) <= value


def test_triadic_realization_product():
    spec = Product([Cyclic(2), TriadicAdic(4)])
    assert triadic_realization(3, iota(spec, 7), spec) == f_n(3, 7)
    with pytest.raises(ValueError):
        triadic_realization(3, iota(spec, 7))


def test_triadic_realization_errors():
    with pytest.raises(ValueError):
        triadic_realization(4, iota(TriadicAdic(3), 1))
    with pytest.raises(ValueError):
        triadic_realization(2, (0, 3))
    with pytest.raises(ValueError):
        triadic_realization(40, (0,) * 40)


@pytest.mark.parametrize("m", [30, 60, 240])
def test_double_limits_truncation(m):
    i = np.arange(m)
    ks = 81 * i + 27 * (i % 3)
    ls = 81 * i + 9 * (i % 3)
    report = double_limits(CantorSource(4), ks, ls)
    assert report.size == m
    # A[i, j] only depends on (i mod 3, j mod 3), both triangles see every pair
    assert report.gap <= 2 / (m - 1) + 1e-12
    assert double_limit_gap(CantorSource(4), ks, ls) == report.gap


def test_double_limits_periodic_families():
    ks = [3**5 * i for i in range(40)]
    ls = [3**5 * j + 7 for j in range(40)]
    report = double_limits(CantorSource(5), ks, ls)
    assert report.ks_outer == pytest.approx(f_n(5, 7), abs=1e-15)
    assert report.gap < 1e-15


def test_double_limits_threshold():
    threshold = lambda k: (k >= 0).astype(np.float64)  # noqa: E731
    i = np.arange(30)
    report = double_limits(threshold, 10 * i, 5 - 10 * i)
    assert report.ks_outer == 0.0
    assert report.ls_outer == 1.0
    assert double_limit_gap(threshold, 10 * i, 5 - 10 * i, burn_in=10) == 1.0


def test_double_limits_errors():
    with pytest.raises(ValueError):
        double_limits(CantorSource(2), [0, 1, 2], [0, 1])
    with pytest.raises(ValueError):
        double_limits(CantorSource(2), [0, 1, 2], [0, 1, 2], burn_in=2)
    with pytest.raises(ValueError):
        double_limits(CantorSource(2), [0], [0])
    with pytest.raises(ValueError):
        double_limits(lambda k: np.zeros(3), [0, 1], [0, 1])
