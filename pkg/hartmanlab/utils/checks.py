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
from typing import Any

import numpy as np


def handshake_size(
    value: Sequence[Any] | np.ndarray,
    required_size: int,
    name: str = "value",
) -> None:
    """Simple check to see if a sequence has a required length

    Parameters
    ----------
    value : Sequence[Any] | np.ndarray
        Object to validate
    required_size : int
        Required length
    name : str, optional
        Name used in the error message, by default "value"

    Raises
    ------
    ValueError
        If the length of value is not the required size
    """
    if len(value) != required_size:
        raise ValueError(
            f"Size of {name} is {len(value)} but should be of size {required_size}"
        )


def handshake_factors(
    got: Sequence[str],
    expected: Sequence[str],
    name: str = "point",
) -> None:
    """Check that a factor layout (list of factor kinds) matches a compactification

    Parameters
    ----------
    got : Sequence[str]
        Factor kinds of the object being validated, e.g. ["torus", "cyclic"]
    expected : Sequence[str]
        Factor kinds of the compactification
    name : str, optional
        Name used in the error message, by default "point"

    Raises
    ------
    ValueError
        If the factor layouts differ
    """
    if list(got) != list(expected):
        raise ValueError(
            f"Factor layout of {name} {list(got)} does not match compactification "
            + f"factors {list(expected)}"
        )


def handshake_range(start: int, length: int) -> None:
    """Check a finite index range [start, start + length) is well formed

    Parameters
    ----------
    start : int
        First index
    length : int
        Number of indices, must be positive

    Raises
    ------
    ValueError
        If length is not a positive integer
    """
    if int(length) != length or length < 1:
        raise ValueError(f"Range length must be a positive integer, got {length}")
    if int(start) != start:
        raise ValueError(f"Range start must be an integer, got {start}")
