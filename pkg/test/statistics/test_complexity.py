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

import numpy as np
import pytest

from hartmanlab.compact import Cyclic
from hartmanlab.sequence import HartmanSet, SequenceSlice, Sturmian, fetch_slice
from hartmanlab.statistics import ComplexityProfile, entropy_profile, subword_complexity
from hartmanlab.window import ResidueSet, Window

GOLDEN = (np.sqrt(5) - 1) / 2


def brute_force_counts(bits: np.ndarray, n_max: int) -> list[int]:
    text = "".join(map(str, np.asarray(bits).tolist()))
    return [
        len({text[i : i + n] for i in range(len(text) - n + 1)})
        for n in range(1, n_max + 1)
    ]


def test_all_zeros():
    bits = SequenceSlice(0, np.zeros(100, dtype=np.uint8))
    profile = subword_complexity(bits, 20)
    assert profile.counts == [1] * 20
    assert entropy_profile(profile) == [0.0] * 20


def test_parity():
    spec = Cyclic(2)
    bits = fetch_slice(HartmanSet(spec, Window(spec, {0: ResidueSet(2, [0])})), 0, 200)
    assert subword_complexity(bits, 30).counts == [2] * 30


@pytest.mark.timeout(10)
def test_sturmian_complexity():
    bits = fetch_slice(Sturmian(GOLDEN), 0, 10**5)
    profile = subword_complexity(bits, 20)
    assert profile.counts == [n + 1 for n in range(1, 21)]
    assert profile.counts == brute_force_counts(bits.values, 20)
    assert profile.sample_length == 10**5

    entropy = entropy_profile(profile)
    for n, h in zip(profile.n_values, entropy):
        assert h <= math.log(n + 1) / n + 1e-15
    assert all(b < a for a, b in zip(entropy, entropy[1:]))


def test_random_bits():
    rng = np.random.default_rng(11)
    bits = SequenceSlice(0, rng.integers(0, 2, size=50_000).astype(np.uint8))
    profile = subword_complexity(bits, 8)
    assert profile.counts == [2**n for n in range(1, 9)]
    assert all(abs(h - math.log(2)) < 1e-12 for h in entropy_profile(profile))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_profile_properties(seed):
    rng = np.random.default_rng(seed)
    # sparse ones keep long words repeating
    bits = (rng.random(3000) < 0.1).astype(np.uint8)
    profile = subword_complexity(SequenceSlice(0, bits), 24)
    p = dict(zip(profile.n_values, profile.counts))
    assert profile.counts == brute_force_counts(bits, 24)
    for m in range(1, 13):
        for n in range(1, 25 - m):
            assert p[m + n] <= p[m] * p[n]
    for n, count in p.items():
        assert 1 <= count <= min(2**n, len(bits) - n + 1)


def test_block_at_the_end():
    bits = SequenceSlice(0, np.array([0] * 7 + [1], dtype=np.uint8))
    assert subword_complexity(bits, 2).counts == [2, 2]
    assert brute_force_counts(bits.values, 2) == [2, 2]


def test_long_words():
    rng = np.random.default_rng(5)
    bits = SequenceSlice(0, rng.integers(0, 2, size=400).astype(np.uint8))
    profile = subword_complexity(bits, 70)
    # every long window of a random sample is distinct
    assert profile.counts[61:] == [400 - n + 1 for n in range(62, 71)]


def test_errors():
    bits = SequenceSlice(0, np.zeros(30, dtype=np.uint8))
    with pytest.raises(ValueError):
        subword_complexity(bits, 8)
    with pytest.raises(ValueError):
        subword_complexity(bits, 0)
    with pytest.raises(ValueError):
        subword_complexity(SequenceSlice(0, np.zeros(40)), 4)
    with pytest.raises(ValueError):
        ComplexityProfile([1, 2, 3], [2, 4, 1], 10)
    with pytest.raises(ValueError):
        ComplexityProfile([1], [3], 10)
