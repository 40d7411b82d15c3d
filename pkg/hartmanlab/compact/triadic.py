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

from typing import Any

import numpy as np

from hartmanlab.utils.checks import handshake_size


class TriadicAdic:
    """The 3-adic integers truncated to a fixed number of digits, i.e. the finite
    quotient Z/3^d Z of the projective limit. Points are base-3 digit tuples, least
    significant digit first.

    Parameters
    ----------
    precision_digits : int
        Number of 3-adic digits d kept
    """

    kind = "triadic"

    def __init__(self, precision_digits: int):
        if int(precision_digits) != precision_digits or precision_digits < 1:
            raise ValueError(
                f"Triadic precision must be a positive integer, got {precision_digits}"
            )
        self.precision_digits = int(precision_digits)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TriadicAdic)
            and self.precision_digits == other.precision_digits
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.precision_digits))

    def __repr__(self) -> str:
        return f"TriadicAdic({self.precision_digits})"

    def embed(self, k: np.ndarray) -> np.ndarray:
        """Vectorized 3-adic digits of integers. Negative integers get their 3-adic
        expansion (floor division), e.g. -1 -> (2, 2, ..., 2).

        Parameters
        ----------
        k : np.ndarray
            1D integer array

        Returns
        -------
        np.ndarray
            Digit array of shape [len(k), precision_digits]
        """
        r = np.asarray(k, dtype=np.int64).copy()
        out = np.empty((r.shape[0], self.precision_digits), dtype=np.int8)
        for i in range(self.precision_digits):
            out[:, i] = np.mod(r, 3)
            r = np.floor_divide(r, 3)
        return out

    def coordinate(self, row: np.ndarray) -> tuple[int, ...]:
        return tuple(int(d) for d in row)

    def residue(self, p: tuple[int, ...], digits: int | None = None) -> int:
        """Integer in [0, 3^digits) encoded by the leading digits of a point

        Parameters
        ----------
        p : tuple[int, ...]
            Digit tuple
        digits : int, optional
            Number of digits to use, by default all of them
        """
        digits = self.precision_digits if digits is None else digits
        return sum(int(d) * 3**i for i, d in enumerate(p[:digits]))

    def from_residue(self, r: int) -> tuple[int, ...]:
        """Digit tuple of r mod 3^precision_digits"""
        r = r % 3**self.precision_digits
        digits = []
        for _ in range(self.precision_digits):
            r, d = divmod(r, 3)
            digits.append(d)
        return tuple(digits)

    def add(self, p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        self.validate(p)
        self.validate(q)
        out = []
        carry = 0
        for a, b in zip(p, q):
            carry, d = divmod(a + b + carry, 3)
            out.append(d)
        # carry out of the last digit is dropped (truncation at precision)
        return tuple(out)

    def neg(self, p: tuple[int, ...]) -> tuple[int, ...]:
        self.validate(p)
        return self.from_residue(-self.residue(p))

    def identity(self) -> tuple[int, ...]:
        return tuple(0 for _ in range(self.precision_digits))

    def validate(self, p: Any) -> None:
        if not isinstance(p, tuple | list | np.ndarray):
            raise ValueError(f"Triadic coordinate must be a digit sequence, got {p}")
        handshake_size(p, self.precision_digits, "triadic coordinate")
        if not all(int(d) == d and 0 <= d <= 2 for d in p):
            raise ValueError(f"Triadic digits must lie in {{0,1,2}}, got {p}")

    def period(self) -> int | None:
        return 3**self.precision_digits

    def to_json(self) -> dict[str, Any]:
        return {"triadic": {"digits": self.precision_digits}}
