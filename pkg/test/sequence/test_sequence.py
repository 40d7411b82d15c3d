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
from fractions import Fraction

import numpy as np
import pytest

from hartmanlab.compact import Cyclic, Product, Torus, TriadicAdic, iota
from hartmanlab.sequence import (
    EvenOddBlocks,
    HartmanFunction,
    HartmanSet,
    Lacunary,
    SequenceSlice,
    SequenceSource,
    Sturmian,
    block_bits,
    fetch_slice,
    hartman_bits,
    hartman_real,
    lacunarity_ratio,
    lacunary_bits,
    powers,
    rotation_bits,
    sturmian,
)
from hartmanlab.window import (
    ArcSet,
    DigitPrefixes,
    ResidueSet,
    TorusBox,
    Window,
    boundary_distance,
    translate,
)

GOLDEN = (np.sqrt(5) - 1) / 2


def test_hartman_bits_parity():
    spec = Cyclic(2)
    w = Window(spec, {0: ResidueSet(2, [0])})
    out = hartman_bits(spec, w, 0, 4)
    assert out.values.tolist() == [1, 0, 1, 0]
    assert out.values.dtype == np.uint8
    assert out.start == 0 and len(out) == 4


def test_hartman_bits_sturmian_prefix():
    spec = Torus([GOLDEN])
    w = Window(spec, {0: TorusBox([ArcSet([(GOLDEN, 1.0)])])})
    out = hartman_bits(spec, w, 0, 5)
    expected = [int((k * GOLDEN) % 1.0 >= GOLDEN) for k in range(5)]
    assert out.values.tolist() == expected
    assert out.values.tolist() == sturmian(GOLDEN, 0, 5).values.tolist()


@pytest.mark.parametrize(
    "spec",
    [
        Torus([GOLDEN, 0.3]),
        Cyclic(5),
        TriadicAdic(3),
        Product([Cyclic(3), Torus([0.1])]),
    ],
)
def test_hartman_bits_full_window(spec):
    out = hartman_bits(spec, Window(spec), -17, 40)
    assert np.all(out.values == 1)
    assert len(out) == 40


def test_hartman_bits_mismatch():
    w = Window(Cyclic(3), {0: ResidueSet(3, [0])})
    with pytest.raises(ValueError):
        hartman_bits(Cyclic(2), w, 0, 4)
    with pytest.raises(ValueError):
        hartman_bits(Cyclic(3), w, 0, 0)


@pytest.mark.parametrize(
    "spec,constraint",
    [
        (Cyclic(7), ResidueSet(7, [0, 3])),
        (TriadicAdic(6), DigitPrefixes(6, [(2, 0, 1)])),
    ],
)
def test_shift_equivariance_exact(spec, constraint):
    w = Window(spec, {0: constraint})
    moved = translate(w, iota(spec, 1))
    for start in (-100, 0, 37):
        assert np.array_equal(
            hartman_bits(spec, w, start + 1, 200).values,
            hartman_bits(spec, moved, start, 200).values,
        )


def test_shift_equivariance_torus():
    spec = Torus([GOLDEN])
    w = Window(spec, {0: TorusBox([ArcSet([(0.1, 0.45)])])})
    moved = translate(w, iota(spec, 1))
    start, length = -1000, 5000
    shifted = hartman_bits(spec, w, start + 1, length).values
    pulled = hartman_bits(spec, moved, start, length).values
    far = boundary_distance(w, np.arange(start + 1, start + 1 + length)) > 1e-9
    assert np.array_equal(shifted[far], pulled[far])


def test_hartman_real():
    spec = Cyclic(2)
    full = Window(spec)
    assert np.all(hartman_real(spec, [(full, 3.0)], 0, 6).values == 3.0)

    even = Window(spec, {0: ResidueSet(2, [0])})
    odd = Window(spec, {0: ResidueSet(2, [1])})
    out = hartman_real(spec, [(even, 1), (odd, -1)], 0, 4)
    assert out.values.tolist() == [1.0, -1.0, 1.0, -1.0]
    assert out.values.dtype == np.float64

    complex_out = hartman_real(spec, [(even, 1j)], 0, 2)
    assert complex_out.values.tolist() == [1j, 0j]


def test_hartman_real_cosine():
    # simple function approximating cos(2 pi x) by 64 arcs at the arc midpoints
    alpha = 1 / np.sqrt(7)
    spec = Torus([alpha])
    edges = np.linspace(0.0, 1.0, 65)
    terms = [
        (Window(spec, {0: TorusBox([ArcSet([(a, b)])])}), np.cos(np.pi * (a + b)))
        for a, b in zip(edges[:-1], edges[1:])
    ]
    out = hartman_real(spec, terms, 0, 500)
    direct = np.cos(2 * np.pi * np.arange(500) * alpha)
    assert np.max(np.abs(out.values - direct)) <= 2 * np.pi / 128 + 1e-12


def test_sturmian():
    assert sturmian(Fraction(1, 2), 0, 4).values.tolist() == [0, 1, 0, 1]
    assert sturmian(0.5, 0, 4).values.tolist() == [0, 1, 0, 1]
    for alpha in (GOLDEN, 0.1, 0.9, Fraction(3, 7)):
        assert sturmian(alpha, 0, 1).values[0] == 0
    with pytest.raises(ValueError):
        sturmian(0.0, 0, 4)
    with pytest.raises(ValueError):
        Sturmian(1.0)


@pytest.mark.parametrize("alpha", [Fraction(2, 5), Fraction(3, 7), Fraction(5, 12)])
def test_sturmian_rational_periodic(alpha):
    q = alpha.denominator
    out = sturmian(alpha, -3 * q, 10 * q).values
    assert np.array_equal(out[q:], out[:-q])


@pytest.mark.timeout(10)
def test_sturmian_density():
    out = sturmian(GOLDEN, 0, 10**5)
    assert abs(out.values.mean() - (1 - GOLDEN)) < 1e-3


def test_rotation_bits():
    out = rotation_bits(GOLDEN, 0.0, 0.25, 0, 10**4)
    expected = ((np.arange(10**4) * GOLDEN) % 1.0 < 0.25).astype(np.uint8)
    assert np.array_equal(out.values, expected)
    assert out.descriptor["family"] == "rotation"


def test_lacunary_bits():
    assert lacunary_bits([1, 2, 4, 8], 0, 9).values.tolist() == [0, 1, 1, 0, 1, 0, 0, 0, 1]
    assert np.all(lacunary_bits([], -5, 20).values == 0)
    with pytest.raises(ValueError):
        lacunary_bits([1, 4, 3], 0, 5)
    with pytest.raises(ValueError):
        Lacunary([0, 1])


def test_powers():
    assert powers(2, 5) == [1, 2, 4, 8, 16]
    assert powers(3, 1) == [1]
    assert lacunarity_ratio(powers(2, 20)) == pytest.approx(0.5)
    assert lacunarity_ratio([n * n for n in range(1, 200)]) > 0.98
    with pytest.raises(ValueError):
        powers(1, 4)
    with pytest.raises(ValueError):
        powers(2, 64)
    with pytest.raises(ValueError):
        lacunarity_ratio([4])


def test_blocks():
    k = np.arange(-40, 41)
    a = EvenOddBlocks("A")(k)
    b = EvenOddBlocks("B")(k)
    ab = EvenOddBlocks("AB")(k)
    assert np.array_equal(ab, a & b)
    assert np.array_equal(b, EvenOddBlocks("B")(-k))

    members = set(k[b == 1].tolist())
    # B1 = {4} u {10, ..., 16} u {34, ..., 40} and B2 = {5, 7} u {17, ..., 31}
    positive = {4, 10, 12, 14, 16, 34, 36, 38, 40, 5, 7, 17, 19, 21, 23, 25, 27, 29, 31}
    assert members == positive | {-m for m in positive}

    assert block_bits("AB", 0, 5).values.tolist() == [0, 0, 0, 0, 1]
    with pytest.raises(ValueError):
        EvenOddBlocks("C")


def test_sequence_slice():
    out = SequenceSlice(10, np.array([1, 0, 1], dtype=np.uint8), {"family": "test"})
    assert out.stop == 13
    assert out.indices.tolist() == [10, 11, 12]
    assert out.is_bits
    assert out(np.array([12, 10])).tolist() == [1, 1]
    with pytest.raises(ValueError):
        out(np.array([13]))
    with pytest.raises(ValueError):
        SequenceSlice(0, np.array([], dtype=np.uint8))
    with pytest.raises(ValueError):
        SequenceSlice(0, np.array([2], dtype=np.uint8))

    da = out.to_xarray()
    assert da.dims == ("k",)
    assert da.coords["k"].values.tolist() == [10, 11, 12]
    assert json.loads(da.attrs["descriptor"]) == {"family": "test"}


@pytest.mark.parametrize(
    "source",
    [
        Sturmian(GOLDEN),
        Lacunary([1, 3, 9]),
        EvenOddBlocks(),
        HartmanSet(Cyclic(3), Window(Cyclic(3), {0: ResidueSet(3, [1])})),
        HartmanFunction(Cyclic(3), [(Window(Cyclic(3)), 2.0)]),
    ],
)
def test_sources(source):
    assert isinstance(source, SequenceSource)
    json.dumps(source.descriptor)
    # disjoint ranges agree with one long range
    whole = fetch_slice(source, -50, 100).values
    parts = np.concatenate(
        [fetch_slice(source, -50, 30).values, fetch_slice(source, -20, 70).values]
    )
    assert np.array_equal(whole, parts)
