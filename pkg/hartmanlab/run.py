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

import sys
from fractions import Fraction
from typing import Any

import numpy as np
from loguru import logger
from tqdm import tqdm

from hartmanlab.cantor import f_n, period_mean, truncation
from hartmanlab.finite import FiniteSystem, invariant_mean_simplex, value_interval
from hartmanlab.io import IOBackend
from hartmanlab.sequence import SequenceSlice, SequenceSource, fetch_slice
from hartmanlab.statistics import (
    SequenceLike,
    banach_density,
    entropy_profile,
    subword_complexity,
)

logger.remove()
logger.add(lambda msg: tqdm.write(msg, end="", file=sys.stderr), colorize=True)

# Rows evaluated and written per step
ROW_CHUNK = 2**16


def _value(v: Any) -> Any:
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.complexfloating):
        return str(complex(v))
    if isinstance(v, np.floating):
        return float(v)
    return v


def generate(
    source: SequenceSource,
    start: int,
    length: int,
    io: IOBackend,
    provenance: dict[str, Any] | None = None,
) -> IOBackend:
    """Sequence workflow, writes the table "k,value" of a sequence on
    [start, start + length)

    Parameters
    ----------
    source : SequenceSource
        Sequence to evaluate
    start : int
        First index
    length : int
        Number of rows, positive
    io : IOBackend
        IO object
    provenance : dict[str, Any] | None, optional
        Extra provenance merged with the source descriptor, by default None

    Returns
    -------
    IOBackend
        Output IO object
    """
    logger.info(f"Generating {length} values of {source.descriptor.get('family')}")
    io.add_table(
        "sequence",
        ["k", "value"],
        (provenance or {}) | {"descriptor": source.descriptor},
    )
    with tqdm(total=length, desc="Generating", file=sys.stderr) as pbar:
        for lo in range(start, start + length, ROW_CHUNK):
            n = min(ROW_CHUNK, start + length - lo)
            chunk = fetch_slice(source, lo, n)
            io.write(
                zip(chunk.indices.tolist(), (_value(v) for v in chunk.values)),
                "sequence",
            )
            pbar.update(n)
    logger.success("Sequence complete")
    return io


def density(
    f: SequenceLike,
    N_schedule: list[int],
    K: int,
    io: IOBackend,
    provenance: dict[str, Any] | None = None,
) -> IOBackend:
    """Banach density workflow, writes the table "N,inf,sup" over a window schedule

    Parameters
    ----------
    f : SequenceLike
        Real valued slice or sequence source
    N_schedule : list[int]
        Increasing window lengths
    K : int
        Scan radius
    io : IOBackend
        IO object
    provenance : dict[str, Any] | None, optional
        Provenance record, by default None

    Returns
    -------
    IOBackend
        Output IO object
    """
    logger.info(f"Scanning windows {N_schedule} over starts [-{K}, {K}]")
    report = banach_density(f, N_schedule, K, verbose=True)
    io.add_table("density", ["N", "inf", "sup"], provenance)
    io.write(report.per_window_extrema, "density")
    logger.success(
        f"Density estimates [{report.lower_estimate}, {report.upper_estimate}] "
        f"at N = {report.window_length}"
    )
    return io


def complexity(
    bits: SequenceSlice,
    n_max: int,
    io: IOBackend,
    provenance: dict[str, Any] | None = None,
) -> IOBackend:
    """Subword complexity workflow, writes the table "n,p,entropy"

    Parameters
    ----------
    bits : SequenceSlice
        Bit slice
    n_max : int
        Largest block length
    io : IOBackend
        IO object
    provenance : dict[str, Any] | None, optional
        Provenance record, by default None

    Returns
    -------
    IOBackend
        Output IO object
    """
    logger.info(f"Counting subwords up to length {n_max} in {len(bits)} bits")
    profile = subword_complexity(bits, n_max)
    io.add_table(
        "complexity",
        ["n", "p", "entropy"],
        (provenance or {}) | {"sample_length": profile.sample_length},
    )
    io.write(
        zip(profile.n_values, profile.counts, entropy_profile(profile)), "complexity"
    )
    logger.success("Complexity profile complete")
    return io


def cantor(
    n: int,
    kmax: int,
    io: IOBackend,
    provenance: dict[str, Any] | None = None,
) -> IOBackend:
    """Cantor truncation workflow. Writes the summary table
    "n,period_mean,expected,abs_err" followed by the table "k,f_n" for k in
    [0, kmax).

    Parameters
    ----------
    n : int
        Number of factors
    kmax : int
        Number of tabulated values
    io : IOBackend
        IO object
    provenance : dict[str, Any] | None, optional
        Provenance record, by default None

    Returns
    -------
    IOBackend
        Output IO object
    """
    if kmax < 1:
        raise ValueError(f"Number of tabulated values must be positive, got {kmax}")
    logger.info(f"Averaging f_{n} over one period of length {3**n}")
    mean = period_mean(n)
    expected = 2.0**-n
    record = truncation(n)
    if record.period != 3**n:
        logger.warning(f"Minimal period {record.period} of f_{n} is below 3^{n}")

    io.add_table(
        "summary",
        ["n", "period_mean", "expected", "abs_err"],
        (provenance or {}) | {"period": record.period},
    )
    io.add_table("values", ["k", "f_n"])
    io.write([(n, mean, expected, abs(mean - expected))], "summary")
    for lo in tqdm(range(0, kmax, ROW_CHUNK), desc="Tabulating", file=sys.stderr):
        k = np.arange(lo, min(lo + ROW_CHUNK, kmax), dtype=np.int64)
        io.write(zip(k.tolist(), f_n(n, k).tolist()), "values")
    logger.success(f"Period mean {mean}, expected {expected}")
    return io


def finite(
    sys_map: FiniteSystem,
    f: list[Fraction] | None,
    io: IOBackend,
    provenance: dict[str, Any] | None = None,
) -> IOBackend:
    """Finite dynamics workflow. Writes the cycle table
    "cycle,states,basin,weights[,mean]" and, when f is given, the table
    "a,b,interval" of the values of invariant means on f.

    Parameters
    ----------
    sys_map : FiniteSystem
        Finite system
    f : list[Fraction] | None
        Rational function on X, optional
    io : IOBackend
        IO object
    provenance : dict[str, Any] | None, optional
        Provenance record, by default None

    Returns
    -------
    IOBackend
        Output IO object
    """
    means = invariant_mean_simplex(sys_map)
    dec = means.decomposition
    logger.info(f"Found {len(dec.cycles)} cycles on {sys_map.size} states")

    columns = ["cycle", "states", "basin", "weights"]
    values = None
    if f is not None:
        columns.append("mean")
        values = means.evaluate(f)
    io.add_table("cycles", columns, provenance)
    rows = []
    for i, cycle in enumerate(dec.cycles):
        row = [
            i,
            " ".join(str(x) for x in cycle),
            " ".join(str(x) for x in dec.basin(i)),
            " ".join(str(w) for w in means.cycle_means[i]),
        ]
        if values is not None:
            row.append(str(values[i]))
        rows.append(row)
    io.write(rows, "cycles")

    if f is not None:
        a, b = value_interval(sys_map, f)
        io.add_table("interval", ["a", "b", "interval"])
        io.write([(str(a), str(b), f"[{a}, {b}]")], "interval")
        logger.success(f"Invariant means take the values [{a}, {b}]")
    return io
