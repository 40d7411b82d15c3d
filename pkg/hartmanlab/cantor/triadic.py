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

from collections.abc import Sequence

import numpy as np

from hartmanlab.cantor.truncation import MAX_EXACT_POWER, f_n
from hartmanlab.compact import CompactificationSpec, CompactPoint, TriadicAdic, factors_of


def _triadic_digits(
    point: CompactPoint | Sequence[int], spec: CompactificationSpec | None
) -> Sequence[int]:
    if not isinstance(point, CompactPoint):
        return point
    if spec is None:
        if len(point) != 1:
            raise ValueError(
                "Point of a product compactification needs its spec to locate the "
                "triadic factor"
            )
        return point[0]
    factors = factors_of(spec)
    indices = [i for i, factor in enumerate(factors) if isinstance(factor, TriadicAdic)]
    if len(indices) != 1:
        raise ValueError(f"{spec} must have exactly one triadic factor")
    return point[indices[0]]


def triadic_realization(
    n: int,
    point: CompactPoint | Sequence[int],
    spec: CompactificationSpec | None = None,
) -> float:
    """Continuous function F_n on the 3-adic integers with f_n = F_n o iota. F_n only
    reads the first n digits, i.e. the residue k mod 3^n they encode.

    Parameters
    ----------
    n : int
        Number of factors, non-negative
    point : CompactPoint | Sequence[int]
        Point of a triadic compactification with at least n digits, or its digit
        tuple (least significant first)
    spec : CompactificationSpec | None, optional
        Compactification of the point, needed only for product points

    Returns
    -------
    float
        F_n(point)

    Raises
    ------
    ValueError
        If the point carries fewer than n digits or a digit outside {0, 1, 2}
    """
    if not 0 <= n <= MAX_EXACT_POWER:
        raise ValueError(f"Number of factors must lie in [0, {MAX_EXACT_POWER}], got {n}")
    digits = _triadic_digits(point, spec)
    if len(digits) < n:
        raise ValueError(
            f"F_{n} needs at least {n} triadic digits, point has {len(digits)}"
        )
    if not all(int(d) == d and 0 <= d <= 2 for d in digits[:n]):
        raise ValueError(f"Triadic digits must lie in {{0,1,2}}, got {tuple(digits)}")
    residue = sum(int(d) * 3**i for i, d in enumerate(digits[:n]))
    return f_n(n, residue)
