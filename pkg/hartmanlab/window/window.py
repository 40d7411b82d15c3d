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
from pathlib import Path
from typing import Any

import numpy as np

from hartmanlab.compact import (
    CompactificationSpec,
    CompactPoint,
    Cyclic,
    Torus,
    TriadicAdic,
    embed,
    factors_of,
)
from hartmanlab.utils.checks import handshake_factors, handshake_size
from hartmanlab.window.constraints import (
    ArcSet,
    Constraint,
    DigitPrefixes,
    ResidueSet,
    TorusBox,
)


class Window:
    """Haar continuity set of a compactification given as an intersection of per
    factor constraints: torus boxes of arcs, cyclic residue sets and 3-adic
    cylinders. Factors without a constraint are unconstrained.

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification the window lives in
    constraints : dict[int, Constraint], optional
        Constraint per factor index, by default {} (the whole space)
    """

    def __init__(
        self,
        spec: CompactificationSpec,
        constraints: dict[int, Constraint] | None = None,
    ):
        self.spec = spec
        constraints = {} if constraints is None else dict(constraints)
        factors = factors_of(spec)
        for index, constraint in constraints.items():
            if not 0 <= index < len(factors):
                raise ValueError(
                    f"Constraint factor index {index} outside of [0, {len(factors)})"
                )
        self.constraints: dict[int, Constraint] = dict(sorted(constraints.items()))
        handshake_factors(
            [c.kind for c in self.constraints.values()],
            [factors[index].kind for index in self.constraints],
            "window constraints",
        )
        for index, constraint in self.constraints.items():
            _check_constraint(factors[index], constraint)
        self.measure = float(
            np.prod([c.measure for c in self.constraints.values()], initial=1.0)
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Window)
            and self.spec == other.spec
            and self.constraints == other.constraints
        )

    def __repr__(self) -> str:
        return f"Window({self.spec}, {self.constraints})"

    def contains_blocks(self, blocks: list[np.ndarray]) -> np.ndarray:
        """Vectorized membership of embedded points

        Parameters
        ----------
        blocks : list[np.ndarray]
            Per factor coordinate blocks as returned by `compact.embed`

        Returns
        -------
        np.ndarray
            Boolean mask, one entry per point
        """
        handshake_size(blocks, len(factors_of(self.spec)), "coordinate blocks")
        size = blocks[0].shape[0]
        mask = np.ones(size, dtype=bool)
        for index, constraint in self.constraints.items():
            mask &= constraint.contains(blocks[index])
        return mask

    def boundary_distance_blocks(self, blocks: list[np.ndarray]) -> np.ndarray:
        """Distance of torus coordinates to the nearest arc endpoint, +inf when no
        torus coordinate is constrained"""
        dist = np.full(blocks[0].shape[0], np.inf)
        for index, constraint in self.constraints.items():
            dist = np.minimum(dist, constraint.boundary_distance(blocks[index]))
        return dist


def _check_constraint(factor: Any, constraint: Constraint) -> None:
    match constraint:
        case TorusBox():
            if constraint.dim != factor.dim:
                raise ValueError(
                    f"Torus box of dimension {constraint.dim} does not fit {factor}"
                )
        case ResidueSet():
            if constraint.modulus != factor.modulus:
                raise ValueError(f"Residue set mod {constraint.modulus} does not fit {factor}")
        case DigitPrefixes():
            if constraint.precision_digits != factor.precision_digits:
                raise ValueError(
                    f"Prefixes of precision {constraint.precision_digits} do not fit {factor}"
                )


def _point_blocks(w: Window, p: CompactPoint) -> list[np.ndarray]:
    factors = factors_of(w.spec)
    if not isinstance(p, CompactPoint):
        raise ValueError(f"Expected a CompactPoint, got {type(p).__name__}")
    handshake_size(p.coords, len(factors), "point factor list")
    blocks = []
    for factor, coord in zip(factors, p.coords):
        factor.validate(coord)
        blocks.append(np.asarray([coord]))
    return blocks


def contains(w: Window, p: CompactPoint) -> bool:
    """Membership of a point in a window, half-open convention [a, b)

    Parameters
    ----------
    w : Window
        Window
    p : CompactPoint
        Point of the window's compactification

    Returns
    -------
    bool
        True iff p lies in w
    """
    return bool(w.contains_blocks(_point_blocks(w, p))[0])


def haar_measure(w: Window) -> float:
    """Haar measure of a window: product over factors of total arc length, residue
    count / m and cylinder count / 3^L"""
    return w.measure


def translate(w: Window, g: CompactPoint) -> Window:
    """Pull a window back along translation by a group element, i.e. return
    {p : p + g in w}. Then iota(k) lies in translate(w, iota(1)) iff iota(k + 1)
    lies in w.

    Parameters
    ----------
    w : Window
        Window
    g : CompactPoint
        Group element

    Returns
    -------
    Window
        Translated window
    """
    _point_blocks(w, g)
    return Window(
        w.spec,
        {
            index: constraint.translate(g.coords[index])  # type: ignore[arg-type]
            for index, constraint in w.constraints.items()
        },
    )


def complement(w: Window) -> Window:
    """Complement of a window constrained along a single factor axis

    Parameters
    ----------
    w : Window
        Window with exactly one constrained factor

    Returns
    -------
    Window
        Complement, whose measure is 1 - haar_measure(w)
    """
    if len(w.constraints) != 1:
        raise ValueError(
            f"Complement needs exactly one constrained factor, got {len(w.constraints)}"
        )
    index, constraint = next(iter(w.constraints.items()))
    return Window(w.spec, {index: constraint.complement()})


def boundary_distance(w: Window, k: np.ndarray) -> np.ndarray:
    """Distance of iota(k) to the nearest arc endpoint of the window, the exclusion
    band used when comparing floating torus codings

    Parameters
    ----------
    w : Window
        Window
    k : np.ndarray
        Integer indices

    Returns
    -------
    np.ndarray
        Distances, +inf where no torus coordinate is constrained
    """
    return w.boundary_distance_blocks(embed(w.spec, k))


def _constraint_from_json(factor: Any, doc: dict[str, Any]) -> Constraint:
    match factor:
        case Torus():
            arcs = doc["arcs"]
            handshake_size(arcs, factor.dim, "torus arc list")
            coordinates = []
            for entry in arcs:
                # [a, b] is a single arc, [[a, b], ...] a union of arcs
                if len(entry) > 0 and isinstance(entry[0], list | tuple):
                    coordinates.append(ArcSet([tuple(e) for e in entry]))
                else:
                    coordinates.append(ArcSet([tuple(entry)]))
            return TorusBox(coordinates)
        case Cyclic():
            return ResidueSet(factor.modulus, list(doc["residues"]))
        case TriadicAdic():
            if "prefixes" in doc:
                prefixes = [tuple(p) for p in doc["prefixes"]]
            else:
                prefixes = [tuple(doc["prefix"])]
            return DigitPrefixes(factor.precision_digits, prefixes)
    raise ValueError(f"Unsupported factor {factor}")


_KIND_KEYS = {"arcs": "torus", "residues": "cyclic", "prefix": "triadic", "prefixes": "triadic"}


def window_from_json(spec: CompactificationSpec, doc: dict[str, Any]) -> Window:
    """Build a window from its JSON document. Constraints are keyed by factor index,
    e.g. {"0": {"arcs": [[0.0, 0.41]]}, "1": {"residues": [0, 2]}}; a flat document
    such as {"arcs": [[0.0, 0.41]]} applies each key to the unique factor of the
    matching kind.

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification
    doc : dict[str, Any]
        Parsed JSON document, {} is the whole space

    Returns
    -------
    Window
        Window
    """
    if not isinstance(doc, dict):
        raise ValueError(f"Window document must be an object, got {doc}")
    factors = factors_of(spec)
    constraints: dict[int, Constraint] = {}
    if any(key in _KIND_KEYS for key in doc):
        unknown = [key for key in doc if key not in _KIND_KEYS]
        if unknown:
            raise KeyError(f"Unknown window keys {unknown}")
        for key in doc:
            matches = [i for i, f in enumerate(factors) if f.kind == _KIND_KEYS[key]]
            if len(matches) != 1:
                raise ValueError(
                    f"Window key {key} is ambiguous for {spec}, key the constraints by factor index"
                )
            constraints[matches[0]] = _constraint_from_json(factors[matches[0]], doc)
    else:
        for key, value in doc.items():
            index = int(key)
            if not 0 <= index < len(factors):
                raise ValueError(f"Window factor index {index} outside of spec")
            constraints[index] = _constraint_from_json(factors[index], value)
    return Window(spec, constraints)


def window_to_json(w: Window) -> dict[str, Any]:
    """JSON document of a window, keyed by factor index"""
    return {str(index): c.to_json() for index, c in w.constraints.items()}


def load_window(spec: CompactificationSpec, path: str | Path) -> Window:
    """Read a window for a compactification from a JSON file"""
    with open(path, encoding="utf-8") as f:
        return window_from_json(spec, json.load(f))
