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

from hartmanlab.compact import (
    CompactPoint,
    Cyclic,
    Product,
    Torus,
    TriadicAdic,
    add,
    embed,
    identity,
    iota,
    is_finite,
    load_spec,
    neg,
    period,
    product,
    spec_from_json,
    spec_to_json,
)

GOLDEN = (np.sqrt(5) - 1) / 2


def _circle_distance(x: float, y: float) -> float:
    d = abs(x - y) % 1.0
    return min(d, 1.0 - d)


@pytest.mark.parametrize(
    "spec,k,expected",
    [
        (Torus([GOLDEN]), 0, ((0.0,),)),
        (Cyclic(9), 13, (4,)),
        (Cyclic(9), -1, (8,)),
        (TriadicAdic(3), 5, ((2, 1, 0),)),
        (TriadicAdic(3), -1, ((2, 2, 2),)),
        (Torus(["1/4"]), 3, ((0.75,),)),
    ],
)
def test_iota(spec, k, expected):
    assert iota(spec, k) == CompactPoint(expected)


@pytest.mark.parametrize(
    "spec,p,q,expected",
    [
        (Cyclic(5), (3,), (4,), (2,)),
        (TriadicAdic(2), ((2, 0),), ((1, 0),), ((0, 1),)),
        (TriadicAdic(2), ((2, 2),), ((1, 0),), ((0, 0),)),
        (Torus([0.3]), ((0.75,),), ((0.5,),), ((0.25,),)),
    ],
)
def test_add(spec, p, q, expected):
    assert add(spec, CompactPoint(p), CompactPoint(q)) == CompactPoint(expected)


@pytest.mark.parametrize(
    "spec",
    [
        Cyclic(7),
        TriadicAdic(5),
        Product([Cyclic(4), TriadicAdic(3)]),
    ],
)
def test_homomorphism_exact(spec):
    for k in range(-30, 31, 7):
        for l in range(-25, 26, 5):
            assert add(spec, iota(spec, k), iota(spec, l)) == iota(spec, k + l)
        assert add(spec, iota(spec, k), neg(spec, iota(spec, k))) == identity(spec)


@pytest.mark.parametrize("alpha", [GOLDEN, 1 / np.pi, np.sqrt(2) - 1])
def test_homomorphism_torus(alpha):
    spec = Torus([alpha])
    for k in range(-1000, 1001, 97):
        for l in range(-500, 501, 101):
            lhs = add(spec, iota(spec, k), iota(spec, l))[0][0]
            rhs = iota(spec, k + l)[0][0]
            assert _circle_distance(lhs, rhs) < 1e-12


def test_identity():
    spec = Product([Torus([GOLDEN, 0.1]), Cyclic(3), TriadicAdic(4)])
    assert iota(spec, 0) == identity(spec)
    assert identity(spec) == CompactPoint(((0.0, 0.0), 0, (0, 0, 0, 0)))


def test_triadic_period():
    spec = TriadicAdic(4)
    k = np.arange(-200, 200)
    assert np.array_equal(embed(spec, k)[0], embed(spec, k + 3**4)[0])


def test_torus_reduction():
    spec = Torus([GOLDEN, 1 / np.e])
    block = embed(spec, np.arange(-(10**6), 10**6, 997))[0]
    assert block.shape[1] == 2
    assert np.all(block >= 0) and np.all(block < 1)


def test_product():
    assert product([Cyclic(2)]) == Cyclic(2)
    spec = product([Cyclic(2), Cyclic(3)])
    assert isinstance(spec, Product)
    assert iota(spec, 5) == CompactPoint((1, 2))

    mixed = product([Torus([GOLDEN]), TriadicAdic(2)])
    p = iota(mixed, 4)
    assert p[0] == iota(Torus([GOLDEN]), 4)[0]
    assert p[1] == (1, 1)

    nested = Product([Product([Cyclic(2), Cyclic(3)]), Cyclic(5)])
    assert len(nested.factors) == 3

    with pytest.raises(ValueError):
        product([])


@pytest.mark.parametrize(
    "spec,expected",
    [
        (Cyclic(6), 6),
        (TriadicAdic(3), 27),
        (Torus(["1/4", "1/6"]), 12),
        (Torus([GOLDEN]), None),
        (Product([Cyclic(4), Torus(["2/3"])]), 12),
    ],
)
def test_period(spec, expected):
    assert period(spec) == expected
    assert is_finite(spec) == (expected is not None)


def test_rational_rotation_exact():
    spec = Torus([Fraction(2, 7)])
    k = np.arange(-70, 70)
    block = embed(spec, k)[0][:, 0]
    assert np.array_equal(block, np.mod(2 * k, 7) / 7)


@pytest.mark.parametrize(
    "bad",
    [
        lambda: Torus([]),
        lambda: Torus([1.0]),
        lambda: Torus([-0.1]),
        lambda: Cyclic(0),
        lambda: TriadicAdic(0),
        lambda: Product([]),
    ],
)
def test_invalid_spec(bad):
    with pytest.raises(ValueError):
        bad()


def test_point_mismatch():
    with pytest.raises(ValueError):
        add(Cyclic(5), CompactPoint((1,)), CompactPoint((7,)))
    with pytest.raises(ValueError):
        add(TriadicAdic(3), CompactPoint(((1, 0),)), CompactPoint(((1, 0, 0),)))
    with pytest.raises(ValueError):
        neg(Product([Cyclic(2), Cyclic(3)]), CompactPoint((1,)))


@pytest.mark.parametrize(
    "doc",
    [
        {"torus": [0.41421356]},
        {"cyclic": 9},
        {"triadic": {"digits": 12}},
        {"product": [{"cyclic": 2}, {"torus": ["1/3", 0.25]}]},
    ],
)
def test_spec_json(doc, tmp_path):
    spec = spec_from_json(doc)
    assert spec_from_json(spec_to_json(spec)) == spec
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec_to_json(spec)))
    assert load_spec(path) == spec


def test_spec_json_errors():
    with pytest.raises(KeyError):
        spec_from_json({"circle": [0.5]})
    with pytest.raises(ValueError):
        spec_from_json({"cyclic": 3, "triadic": {"digits": 2}})
