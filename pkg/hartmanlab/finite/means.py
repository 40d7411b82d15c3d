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
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from hartmanlab.finite.system import CycleDecomposition, FiniteSystem, decompose
from hartmanlab.utils.checks import handshake_size
from hartmanlab.utils.type import RationalVector

Rational = int | Fraction | str


def _as_fractions(f: Sequence[Rational], size: int) -> list[Fraction]:
    handshake_size(f, size, "function on X")
    return [Fraction(v) for v in f]


@dataclass(frozen=True)
class InvariantMeanSet:
    """Ergodic cycle means m_C(f) = (1/|C|) sum_{y in C} f(y). Every invariant
    mean on the system is a convex combination of them.

    Parameters
    ----------
    cycle_means : list[RationalVector]
        Weight vector over X of every cycle mean
    decomposition : CycleDecomposition
        Cycles the means are supported on
    """

    cycle_means: list[RationalVector]
    decomposition: CycleDecomposition

    @property
    def simplex_dim(self) -> int:
        return len(self.cycle_means) - 1

    def evaluate(self, f: Sequence[Rational]) -> list[Fraction]:
        """Value m_C(f) of every cycle mean"""
        values = _as_fractions(f, len(self.cycle_means[0]))
        return [sum((w * v for w, v in zip(m, values)), Fraction(0)) for m in self.cycle_means]

    def mixture(self, lambdas: Sequence[Rational]) -> RationalVector:
        """Weight vector of the invariant mean sum_C lambda_C m_C

        Raises
        ------
        ValueError
            If the coefficients are not a probability vector over the cycles
        """
        lam = _as_fractions(lambdas, len(self.cycle_means))
        if any(v < 0 for v in lam) or sum(lam) != 1:
            raise ValueError(f"Mixture coefficients {lambdas} are not a probability vector")
        size = len(self.cycle_means[0])
        return tuple(
            sum((l * m[x] for l, m in zip(lam, self.cycle_means)), Fraction(0))
            for x in range(size)
        )


def invariant_mean_simplex(sys: FiniteSystem) -> InvariantMeanSet:
    """Extreme points of the simplex of T-invariant means

    Parameters
    ----------
    sys : FiniteSystem
        Finite system

    Returns
    -------
    InvariantMeanSet
        One exact uniform weight vector per cycle
    """
    dec = decompose(sys)
    means = []
    for cycle in dec.cycles:
        w = [Fraction(0)] * sys.size
        for y in cycle:
            w[y] = Fraction(1, len(cycle))
        means.append(tuple(w))
    return InvariantMeanSet(cycle_means=means, decomposition=dec)


def value_interval(sys: FiniteSystem, f: Sequence[Rational]) -> tuple[Fraction, Fraction]:
    """Interval [a, b] of the values m(f) over all invariant means, with
    a = min_C m_C(f) and b = max_C m_C(f). f is almost convergent iff a = b.

    Parameters
    ----------
    sys : FiniteSystem
        Finite system
    f : Sequence[Rational]
        Rational values f(0), ..., f(size - 1)

    Returns
    -------
    tuple[Fraction, Fraction]
        (a, b)
    """
    values = invariant_mean_simplex(sys).evaluate(_as_fractions(f, sys.size))
    return min(values), max(values)


def cesaro_average(sys: FiniteSystem, f: Sequence[Rational], n: int) -> list[Fraction]:
    """Exact Cesaro averages s_n(x) = (1/n) sum_{k=0}^{n-1} f(T^k x) at every state

    Parameters
    ----------
    sys : FiniteSystem
        Finite system
    f : Sequence[Rational]
        Rational values of f
    n : int
        Number of orbit steps, positive

    Returns
    -------
    list[Fraction]
        s_n(x) for x = 0, ..., size - 1
    """
    if n < 1:
        raise ValueError(f"Number of orbit steps must be positive, got {n}")
    values = _as_fractions(f, sys.size)
    den = math.lcm(*(v.denominator for v in values))
    num = [v.numerator * (den // v.denominator) for v in values]

    totals = [0] * sys.size
    states = list(range(sys.size))
    for _ in range(n):
        for x in range(sys.size):
            totals[x] += num[states[x]]
        states = [sys(y) for y in states]
    return [Fraction(t, n * den) for t in totals]


def orbit_frequency(sys: FiniteSystem, subset: Sequence[int], n: int) -> list[Fraction]:
    """Exact visit frequencies d_n(x) = |{k < n : T^k x in A}| / n

    Parameters
    ----------
    sys : FiniteSystem
        Finite system
    subset : Sequence[int]
        States of A
    n : int
        Number of orbit steps
    """
    return cesaro_average(sys, _indicator(sys, subset), n)


def fapm_interval(sys: FiniteSystem, subset: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Interval of values p(A) taken by invariant probability measures

    Parameters
    ----------
    sys : FiniteSystem
        Finite system
    subset : Sequence[int]
        States of A
    """
    return value_interval(sys, _indicator(sys, subset))


def _indicator(sys: FiniteSystem, subset: Sequence[int]) -> list[int]:
    members = set(int(x) for x in subset)
    if any(not 0 <= x < sys.size for x in members):
        raise ValueError(f"Subset {sorted(members)} is not contained in X")
    return [int(x in members) for x in range(sys.size)]
