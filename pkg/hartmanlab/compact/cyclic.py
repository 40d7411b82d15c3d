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


class Cyclic:
    """The finite quotient Z -> Z/mZ, k -> k mod m

    Parameters
    ----------
    modulus : int
        Positive modulus m
    """

    kind = "cyclic"

    def __init__(self, modulus: int):
        if int(modulus) != modulus or modulus < 1:
            raise ValueError(f"Cyclic modulus must be a positive integer, got {modulus}")
        self.modulus = int(modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cyclic) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.kind, self.modulus))

    def __repr__(self) -> str:
        return f"Cyclic({self.modulus})"

    def embed(self, k: np.ndarray) -> np.ndarray:
        """Vectorized residues k mod m

        Parameters
        ----------
        k : np.ndarray
            1D integer array

        Returns
        -------
        np.ndarray
            Residues in {0, ..., m-1}
        """
        return np.mod(np.asarray(k, dtype=np.int64), self.modulus)

    def coordinate(self, row: np.ndarray) -> int:
        return int(row)

    def add(self, p: int, q: int) -> int:
        self.validate(p)
        self.validate(q)
        return (p + q) % self.modulus

    def neg(self, p: int) -> int:
        self.validate(p)
        return (-p) % self.modulus

    def identity(self) -> int:
        return 0

    def validate(self, p: Any) -> None:
        if isinstance(p, bool) or not isinstance(p, int | np.integer):
            raise ValueError(f"Cyclic coordinate must be an integer residue, got {p}")
        if not 0 <= p < self.modulus:
            raise ValueError(f"Residue {p} outside of [0, {self.modulus})")

    def period(self) -> int | None:
        return self.modulus

    def to_json(self) -> dict[str, Any]:
        return {"cyclic": self.modulus}
