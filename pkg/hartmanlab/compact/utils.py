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
import math
from pathlib import Path
from typing import Any

import numpy as np

from hartmanlab.compact.base import CompactPoint, Compactification
from hartmanlab.compact.cyclic import Cyclic
from hartmanlab.compact.product import CompactificationSpec, Product
from hartmanlab.compact.torus import Torus
from hartmanlab.compact.triadic import TriadicAdic
from hartmanlab.utils.checks import handshake_size


def factors_of(spec: CompactificationSpec) -> tuple[Compactification, ...]:
    """Factor list of a compactification, a single factor for non-products

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification

    Returns
    -------
    tuple[Compactification, ...]
        Factors in order
    """
    if isinstance(spec, Product):
        return spec.factors
    return (spec,)


def product(specs: list[CompactificationSpec]) -> CompactificationSpec:
    """Product compactification of a list of compactifications. A single factor
    collapses to the factor itself.

    Parameters
    ----------
    specs : list[CompactificationSpec]
        Non-empty list of compactifications

    Returns
    -------
    CompactificationSpec
        Flattened product
    """
    if len(specs) == 0:
        raise ValueError("Cannot form the product of an empty list of compactifications")
    spec = Product(specs)
    if len(spec.factors) == 1:
        return spec.factors[0]
    return spec


def embed(spec: CompactificationSpec, k: np.ndarray) -> list[np.ndarray]:
    """Vectorized embedding of an integer array, one coordinate block per factor

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification
    k : np.ndarray
        1D integer array

    Returns
    -------
    list[np.ndarray]
        Per factor coordinates batched along the first axis
    """
    k = np.atleast_1d(np.asarray(k, dtype=np.int64))
    return [factor.embed(k) for factor in factors_of(spec)]


def iota(spec: CompactificationSpec, k: int) -> CompactPoint:
    """Image of an integer in the compactification

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification
    k : int
        Any signed 64-bit integer

    Returns
    -------
    CompactPoint
        iota(k)
    """
    blocks = embed(spec, np.array([k], dtype=np.int64))
    return CompactPoint(
        tuple(
            factor.coordinate(block[0])
            for factor, block in zip(factors_of(spec), blocks)
        )
    )


def _check_point(spec: CompactificationSpec, p: CompactPoint) -> None:
    factors = factors_of(spec)
    if not isinstance(p, CompactPoint):
        raise ValueError(f"Expected a CompactPoint, got {type(p).__name__}")
    handshake_size(p.coords, len(factors), "point factor list")
    for factor, coord in zip(factors, p.coords):
        factor.validate(coord)


def add(spec: CompactificationSpec, p: CompactPoint, q: CompactPoint) -> CompactPoint:
    """Group addition, componentwise over factors

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification
    p : CompactPoint
        First summand
    q : CompactPoint
        Second summand

    Returns
    -------
    CompactPoint
        p + q
    """
    _check_point(spec, p)
    _check_point(spec, q)
    return CompactPoint(
        tuple(
            factor.add(a, b) for factor, a, b in zip(factors_of(spec), p.coords, q.coords)
        )
    )


def neg(spec: CompactificationSpec, p: CompactPoint) -> CompactPoint:
    """Group inverse, componentwise over factors

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification
    p : CompactPoint
        Point

    Returns
    -------
    CompactPoint
        -p
    """
    _check_point(spec, p)
    return CompactPoint(
        tuple(factor.neg(a) for factor, a in zip(factors_of(spec), p.coords))
    )


def identity(spec: CompactificationSpec) -> CompactPoint:
    """Neutral element of the compactification"""
    return CompactPoint(tuple(factor.identity() for factor in factors_of(spec)))  # type: ignore[attr-defined]


def period(spec: CompactificationSpec) -> int | None:
    """Exact period of iota, i.e. the size of the image of Z, or None if infinite

    Parameters
    ----------
    spec : CompactificationSpec
        Compactification

    Returns
    -------
    int | None
        Least common multiple of the factor periods
    """
    periods = [factor.period() for factor in factors_of(spec)]
    if any(p is None for p in periods):
        return None
    return math.lcm(*periods)  # type: ignore[arg-type]


def is_finite(spec: CompactificationSpec) -> bool:
    """True iff the image of the integers is finite (all rotations rational)"""
    return period(spec) is not None


def spec_from_json(doc: dict[str, Any]) -> CompactificationSpec:
    """Build a compactification from its JSON document, e.g.
    {"torus": [0.414]}, {"cyclic": 9}, {"triadic": {"digits": 12}} or
    {"product": [...]}.

    Parameters
    ----------
    doc : dict[str, Any]
        Parsed JSON document with exactly one of the keys above

    Returns
    -------
    CompactificationSpec
        Compactification

    Raises
    ------
    KeyError
        If the document has none of the known keys
    ValueError
        If the document has more than one key
    """
    if not isinstance(doc, dict):
        raise ValueError(f"Compactification document must be an object, got {doc}")
    keys = [key for key in ("torus", "cyclic", "triadic", "product") if key in doc]
    if len(keys) == 0:
        raise KeyError(
            f"Compactification document needs one of torus, cyclic, triadic, product; got {list(doc)}"
        )
    if len(keys) > 1:
        raise ValueError(f"Compactification document has several kinds {keys}")

    match keys[0]:
        case "torus":
            return Torus(list(doc["torus"]))
        case "cyclic":
            return Cyclic(doc["cyclic"])
        case "triadic":
            return TriadicAdic(doc["triadic"]["digits"])
        case _:
            return Product([spec_from_json(item) for item in doc["product"]])


def spec_to_json(spec: CompactificationSpec) -> dict[str, Any]:
    """JSON document of a compactification, inverse of `spec_from_json`"""
    return spec.to_json()


def load_spec(path: str | Path) -> CompactificationSpec:
    """Read a compactification from a JSON file

    Parameters
    ----------
    path : str | Path
        JSON file path

    Returns
    -------
    CompactificationSpec
        Compactification
    """
    with open(path, encoding="utf-8") as f:
        return spec_from_json(json.load(f))
