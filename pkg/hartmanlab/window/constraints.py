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

from hartmanlab.compact.torus import _frac


class ArcSet:
    """Finite union of disjoint half-open arcs [a, b) on the circle R/Z. An arc with
    a > b wraps around, i.e. encodes [a, 1) U [0, b).

    Parameters
    ----------
    arcs : list[tuple[float, float]]
        Arc endpoints, 0 <= a, b <= 1 and a != b. The full circle is (0, 1).
    """

    def __init__(self, arcs: list[tuple[float, float]]):
        parsed = []
        for arc in arcs:
            if len(arc) != 2:
                raise ValueError(f"Arc must be an endpoint pair, got {arc}")
            a, b = float(arc[0]), float(arc[1])
            if not (0 <= a <= 1 and 0 <= b <= 1) or a == b:
                raise ValueError(f"Invalid arc [{a}, {b})")
            if a == 1.0:
                a = 0.0
            if a > b and b == 0.0:
                b = 1.0
            if a == b:
                raise ValueError(f"Degenerate arc [{arc[0]}, {arc[1]})")
            parsed.append((a, b))
        self.arcs: tuple[tuple[float, float], ...] = tuple(sorted(parsed))
        segments = sorted(s for a, b in self.arcs for s in self._segments(a, b))
        for (_, b0), (a1, _) in zip(segments[:-1], segments[1:]):
            if a1 < b0:
                raise ValueError(f"Arcs {list(self.arcs)} overlap")

    @staticmethod
    def _segments(a: float, b: float) -> list[tuple[float, float]]:
        if a < b:
            return [(a, b)]
        return [(a, 1.0), (0.0, b)]

    @classmethod
    def full(cls) -> "ArcSet":
        """The whole circle"""
        return cls([(0.0, 1.0)])

    @property
    def is_full(self) -> bool:
        return self.arcs == ((0.0, 1.0),)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ArcSet) and self.arcs == other.arcs

    def __repr__(self) -> str:
        return f"ArcSet({list(self.arcs)})"

    @property
    def length(self) -> float:
        """Total arc length"""
        return float(sum(b - a if a < b else 1.0 - a + b for a, b in self.arcs))

    def contains(self, x: np.ndarray) -> np.ndarray:
        """Membership of circle coordinates in [0,1), left endpoints in and right
        endpoints out"""
        x = np.asarray(x, dtype=np.float64)
        mask = np.zeros(x.shape, dtype=bool)
        for a, b in self.arcs:
            if a < b:
                mask |= (a <= x) & (x < b)
            else:
                mask |= (a <= x) | (x < b)
        return mask

    def translate(self, g: float) -> "ArcSet":
        """The set {x : x + g in self}"""
        if self.is_full:
            return self
        arcs = []
        for a, b in self.arcs:
            a1 = float(_frac(np.float64(a - g)))
            b1 = float(_frac(np.float64(b - g)))
            if b1 == 0.0:
                b1 = 1.0
            arcs.append((a1, b1))
        return ArcSet(arcs)

    def complement(self) -> "ArcSet":
        """Complement within the circle"""
        if self.is_full:
            raise ValueError("Complement of the full circle is empty")
        segments = sorted(s for a, b in self.arcs for s in self._segments(a, b))
        gaps = []
        cursor = 0.0
        for a, b in segments:
            if a > cursor:
                gaps.append((cursor, a))
            cursor = max(cursor, b)
        if cursor < 1.0:
            gaps.append((cursor, 1.0))
        # glue a gap ending at 1 with a gap starting at 0
        if len(gaps) > 1 and gaps[0][0] == 0.0 and gaps[-1][1] == 1.0:
            gaps = [(gaps[-1][0], gaps[0][1])] + gaps[1:-1]
        return ArcSet(gaps)

    def boundary_distance(self, x: np.ndarray) -> np.ndarray:
        """Circular distance of each coordinate to the nearest arc endpoint"""
        x = np.asarray(x, dtype=np.float64)
        if self.is_full:
            return np.full(x.shape, np.inf)
        ends = np.array([e for arc in self.arcs for e in arc]) % 1.0
        d = np.abs(x[..., None] - ends)
        return np.min(np.minimum(d, 1.0 - d), axis=-1)

    def to_json(self) -> list[list[float]]:
        return [[a, b] for a, b in self.arcs]


class TorusBox:
    """Product of arc sets, one per torus coordinate

    Parameters
    ----------
    coordinates : list[ArcSet]
        One ArcSet per torus dimension
    """

    kind = "torus"

    def __init__(self, coordinates: list[ArcSet]):
        self.coordinates = tuple(coordinates)

    @property
    def dim(self) -> int:
        return len(self.coordinates)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TorusBox) and self.coordinates == other.coordinates

    def __repr__(self) -> str:
        return f"TorusBox({list(self.coordinates)})"

    @property
    def measure(self) -> float:
        return float(np.prod([arcs.length for arcs in self.coordinates]))

    def contains(self, block: np.ndarray) -> np.ndarray:
        block = np.atleast_2d(block)
        mask = np.ones(block.shape[0], dtype=bool)
        for i, arcs in enumerate(self.coordinates):
            if not arcs.is_full:
                mask &= arcs.contains(block[:, i])
        return mask

    def translate(self, g: tuple[float, ...]) -> "TorusBox":
        return TorusBox([arcs.translate(gi) for arcs, gi in zip(self.coordinates, g)])

    def constrained_axes(self) -> list[int]:
        return [i for i, arcs in enumerate(self.coordinates) if not arcs.is_full]

    def complement(self) -> "TorusBox":
        axes = self.constrained_axes()
        if len(axes) != 1:
            raise ValueError(
                "Complement of a torus box is only representable when exactly one "
                + f"coordinate is constrained, got {len(axes)}"
            )
        coordinates = list(self.coordinates)
        coordinates[axes[0]] = coordinates[axes[0]].complement()
        return TorusBox(coordinates)

    def boundary_distance(self, block: np.ndarray) -> np.ndarray:
        block = np.atleast_2d(block)
        dist = np.full(block.shape[0], np.inf)
        for i, arcs in enumerate(self.coordinates):
            dist = np.minimum(dist, arcs.boundary_distance(block[:, i]))
        return dist

    def to_json(self) -> dict[str, Any]:
        return {"arcs": [arcs.to_json() for arcs in self.coordinates]}


class ResidueSet:
    """Subset of Z/mZ

    Parameters
    ----------
    modulus : int
        Modulus m of the cyclic factor
    residues : list[int]
        Residues in {0, ..., m-1}
    """

    kind = "cyclic"

    def __init__(self, modulus: int, residues: list[int]):
        self.modulus = int(modulus)
        if any(not 0 <= int(r) < self.modulus for r in residues):
            raise ValueError(f"Residues {residues} outside of [0, {self.modulus})")
        self.residues = frozenset(int(r) for r in residues)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ResidueSet)
            and self.modulus == other.modulus
            and self.residues == other.residues
        )

    def __repr__(self) -> str:
        return f"ResidueSet({self.modulus}, {sorted(self.residues)})"

    @property
    def measure(self) -> float:
        return len(self.residues) / self.modulus

    def contains(self, block: np.ndarray) -> np.ndarray:
        return np.isin(np.atleast_1d(block), np.fromiter(self.residues, dtype=np.int64))

    def translate(self, g: int) -> "ResidueSet":
        return ResidueSet(self.modulus, [(r - g) % self.modulus for r in self.residues])

    def complement(self) -> "ResidueSet":
        return ResidueSet(
            self.modulus, [r for r in range(self.modulus) if r not in self.residues]
        )

    def boundary_distance(self, block: np.ndarray) -> np.ndarray:
        return np.full(np.atleast_1d(block).shape[0], np.inf)

    def to_json(self) -> dict[str, Any]:
        return {"residues": sorted(self.residues)}


class DigitPrefixes:
    """Finite union of 3-adic cylinders sharing one prefix length L, stored as the
    residues mod 3^L the prefixes encode

    Parameters
    ----------
    precision_digits : int
        Digit precision of the triadic factor
    prefixes : list[tuple[int, ...]]
        Digit prefixes (least significant digit first), all of the same length
    """

    kind = "triadic"

    def __init__(self, precision_digits: int, prefixes: list[tuple[int, ...]]):
        self.precision_digits = int(precision_digits)
        lengths = {len(p) for p in prefixes}
        if len(lengths) > 1:
            raise ValueError(f"Prefixes must share one length, got {sorted(lengths)}")
        self.length = lengths.pop() if lengths else 0
        if self.length > self.precision_digits:
            raise ValueError(
                f"Prefix length {self.length} exceeds precision {self.precision_digits}"
            )
        if any(not all(int(d) == d and 0 <= d <= 2 for d in p) for p in prefixes):
            raise ValueError(f"Prefix digits must lie in {{0,1,2}}, got {prefixes}")
        self.residues = frozenset(
            sum(int(d) * 3**i for i, d in enumerate(p)) for p in prefixes
        )

    @classmethod
    def from_residues(
        cls, precision_digits: int, length: int, residues: list[int]
    ) -> "DigitPrefixes":
        prefixes = []
        for r in residues:
            digits = []
            for _ in range(length):
                r, d = divmod(r, 3)
                digits.append(d)
            prefixes.append(tuple(digits))
        out = cls(precision_digits, prefixes)
        out.length = length
        return out

    @property
    def prefixes(self) -> list[tuple[int, ...]]:
        out = []
        for r in sorted(self.residues):
            digits = []
            for _ in range(self.length):
                r, d = divmod(r, 3)
                digits.append(d)
            out.append(tuple(digits))
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DigitPrefixes)
            and self.length == other.length
            and self.residues == other.residues
        )

    def __repr__(self) -> str:
        return f"DigitPrefixes({self.precision_digits}, {self.prefixes})"

    @property
    def measure(self) -> float:
        return len(self.residues) / 3**self.length

    def contains(self, block: np.ndarray) -> np.ndarray:
        block = np.atleast_2d(block)
        codes = np.zeros(block.shape[0], dtype=np.int64)
        for i in range(self.length):
            codes += block[:, i].astype(np.int64) * 3**i
        return np.isin(codes, np.fromiter(self.residues, dtype=np.int64))

    def translate(self, g: tuple[int, ...]) -> "DigitPrefixes":
        shift = sum(int(d) * 3**i for i, d in enumerate(g[: self.length]))
        size = 3**self.length
        return DigitPrefixes.from_residues(
            self.precision_digits,
            self.length,
            [(r - shift) % size for r in self.residues],
        )

    def complement(self) -> "DigitPrefixes":
        return DigitPrefixes.from_residues(
            self.precision_digits,
            self.length,
            [r for r in range(3**self.length) if r not in self.residues],
        )

    def boundary_distance(self, block: np.ndarray) -> np.ndarray:
        return np.full(np.atleast_2d(block).shape[0], np.inf)

    def to_json(self) -> dict[str, Any]:
        prefixes = self.prefixes
        if len(prefixes) == 1:
            return {"prefix": list(prefixes[0])}
        return {"prefixes": [list(p) for p in prefixes]}


Constraint = TorusBox | ResidueSet | DigitPrefixes
