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
from typing import Any

import numpy as np

from hartmanlab.utils.checks import handshake_size
from hartmanlab.utils.type import RotationNumber


def _parse_rotation(alpha: Any) -> RotationNumber:
    """Rotation numbers given as "p/q" strings or Fractions stay exact, everything
    else becomes a float."""
    if isinstance(alpha, str):
        alpha = Fraction(alpha)
    if isinstance(alpha, Fraction):
        value: RotationNumber = alpha
    else:
        value = float(alpha)
    if not 0 <= value < 1:
        raise ValueError(f"Rotation number {alpha} must lie in [0,1)")
    return value


def _frac(x: np.ndarray) -> np.ndarray:
    """Reduction x - floor(x) into [0,1)"""
    y = x - np.floor(x)
    # x slightly below an integer can round up to exactly 1.0
    return np.where(y >= 1.0, 0.0, y)


class Torus:
    """Rotation by (alpha_1, ..., alpha_s) on the s-dimensional torus, the finite
    dimensional compactification k -> (k alpha_i mod 1)_i.

    Parameters
    ----------
    alphas : list[float | Fraction | str]
        Rotation numbers in [0,1). Floats are flagged irrational, Fractions (or
        "p/q" strings) are kept exact which makes the image of the integers finite.
    """

    kind = "torus"

    def __init__(self, alphas: list[Any]):
        if len(alphas) == 0:
            raise ValueError("Torus needs at least one rotation number")
        self.alphas: tuple[RotationNumber, ...] = tuple(
            _parse_rotation(a) for a in alphas
        )
        self.irrational = tuple(not isinstance(a, Fraction) for a in self.alphas)

    @property
    def dim(self) -> int:
        """Torus dimension s"""
        return len(self.alphas)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Torus) and self.alphas == other.alphas

    def __hash__(self) -> int:
        return hash((self.kind, self.alphas))

    def __repr__(self) -> str:
        return f"Torus({[str(a) for a in self.alphas]})"

    def embed(self, k: np.ndarray) -> np.ndarray:
        """Vectorized embedding k -> (k alpha_i mod 1)_i

        Parameters
        ----------
        k : np.ndarray
            1D integer array

        Returns
        -------
        np.ndarray
            Float array of shape [len(k), dim] with entries in [0,1)
        """
        k = np.asarray(k, dtype=np.int64)
        out = np.empty((k.shape[0], self.dim), dtype=np.float64)
        for i, alpha in enumerate(self.alphas):
            if isinstance(alpha, Fraction):
                p, q = alpha.numerator, alpha.denominator
                if q * max(p, 1) < 2**62:
                    r = np.mod(np.mod(k, q) * p, q)
                else:
                    r = np.array([(int(ki) * p) % q for ki in k], dtype=np.float64)
                out[:, i] = r / q
            else:
                out[:, i] = _frac(k * alpha)
        return out

    def coordinate(self, row: np.ndarray) -> tuple[float, ...]:
        return tuple(float(x) for x in row)

    def add(self, p: tuple[float, ...], q: tuple[float, ...]) -> tuple[float, ...]:
        self.validate(p)
        self.validate(q)
        return tuple(float(x) for x in _frac(np.add(p, q)))

    def neg(self, p: tuple[float, ...]) -> tuple[float, ...]:
        self.validate(p)
        return tuple(float(x) for x in _frac(-np.asarray(p, dtype=np.float64)))

    def identity(self) -> tuple[float, ...]:
        return tuple(0.0 for _ in self.alphas)

    def validate(self, p: Any) -> None:
        if not isinstance(p, tuple | list | np.ndarray):
            raise ValueError(f"Torus coordinate must be a sequence, got {p}")
        handshake_size(p, self.dim, "torus coordinate")
        if not all(0 <= x < 1 for x in p):
            raise ValueError(f"Torus coordinate {p} not reduced into [0,1)")

    def period(self) -> int | None:
        if any(self.irrational):
            return None
        return math.lcm(*[a.denominator for a in self.alphas])  # type: ignore[union-attr]

    def to_json(self) -> dict[str, Any]:
        return {
            "torus": [
                str(a) if isinstance(a, Fraction) else float(a) for a in self.alphas
            ]
        }
