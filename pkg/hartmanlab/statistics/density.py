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

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from tqdm import tqdm

from hartmanlab.statistics.utils import (
    SequenceLike,
    _evaluate,
    _scan_limits,
    _window_sums,
)
from hartmanlab.utils.config import default_threads

# Window start positions handled per worker task
CHUNK_SIZE = 2**18


@dataclass
class DensityReport:
    """Finite-scan estimates of lower and upper Banach density

    Parameters
    ----------
    lower_estimate : float
        inf of the window averages s_N(n) over the scanned starts
    upper_estimate : float
        sup of the window averages s_N(n) over the scanned starts
    window_length : int
        Window length N the estimates belong to
    scan_range : tuple[int, int]
        Start positions [-K, K] requested
    per_window_extrema : list[tuple[int, float, float]]
        (N, inf s_N, sup s_N) for every scheduled window length
    """

    lower_estimate: float
    upper_estimate: float
    window_length: int
    scan_range: tuple[int, int]
    per_window_extrema: list[tuple[int, float, float]] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.lower_estimate > self.upper_estimate:
            raise ValueError(
                f"Lower estimate {self.lower_estimate} exceeds upper estimate "
                f"{self.upper_estimate}"
            )

    @property
    def gap(self) -> float:
        return self.upper_estimate - self.lower_estimate


def _chunk_extrema(
    f: SequenceLike, window: int, first: int, last: int
) -> tuple[float, float]:
    """Min and max window sum over the starts [first, last]"""
    sums = _window_sums(_evaluate(f, first, last + window), window)
    return sums.min().item(), sums.max().item()


def sliding_extrema(
    f: SequenceLike, N: int, K: int, threads: int | None = None
) -> tuple[float, float]:
    """Extrema of the window averages

        s_N(n) = (1/N) sum_{k=n}^{n+N-1} f(k),   n in [-K, K]

    Sequence sources are evaluated on [-K, K + N - 1]. Slices only contribute the
    windows lying inside the slice. Start ranges are split into chunks reduced
    concurrently and merged with min / max.

    Parameters
    ----------
    f : SequenceLike
        Real valued slice, sequence source or callback
    N : int
        Window length, positive
    K : int
        Scan radius, non-negative
    threads : int | None, optional
        Worker threads, by default `default_threads()`

    Returns
    -------
    tuple[float, float]
        (inf s_N, sup s_N)

    Raises
    ------
    ValueError
        If N or K are out of range, or no window fits the slice
    """
    if N < 1:
        raise ValueError(f"Window length must be positive, got {N}")
    if K < 0:
        raise ValueError(f"Scan radius must be non-negative, got {K}")
    first, last = _scan_limits(f, N, K)
    starts = list(range(first, last + 1, CHUNK_SIZE))
    bounds = [(s, min(s + CHUNK_SIZE - 1, last)) for s in starts]

    threads = default_threads() if threads is None else threads
    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            extrema = list(pool.map(lambda b: _chunk_extrema(f, N, *b), bounds))
    else:
        extrema = [_chunk_extrema(f, N, *b) for b in bounds]

    low = min(e[0] for e in extrema)
    high = max(e[1] for e in extrema)
    return low / N, high / N


def banach_density(
    f: SequenceLike,
    N_schedule: list[int],
    K: int,
    threads: int | None = None,
    verbose: bool = False,
) -> DensityReport:
    """Lower and upper Banach density estimates along a schedule of window lengths.
    The estimates are the extrema at the largest N, the whole schedule is recorded
    so convergence can be inspected.

    Parameters
    ----------
    f : SequenceLike
        Real valued slice, sequence source or callback
    N_schedule : list[int]
        Non-empty, strictly increasing window lengths
    K : int
        Scan radius
    threads : int | None, optional
        Worker threads, by default `default_threads()`
    verbose : bool, optional
        Show a progress bar over the schedule, by default False

    Returns
    -------
    DensityReport
        Density estimates
    """
    if len(N_schedule) == 0:
        raise ValueError("Window schedule must not be empty")
    if any(b <= a for a, b in zip(N_schedule, N_schedule[1:])):
        raise ValueError(f"Window schedule must be increasing, got {N_schedule}")

    per_window = []
    for N in tqdm(N_schedule, desc="Window lengths", disable=not verbose):
        low, high = sliding_extrema(f, N, K, threads=threads)
        per_window.append((int(N), low, high))

    N, low, high = per_window[-1]
    return DensityReport(
        lower_estimate=low,
        upper_estimate=high,
        window_length=N,
        scan_range=(-K, K),
        per_window_extrema=per_window,
    )


def is_almost_convergent(
    f: SequenceLike,
    N_schedule: list[int],
    K: int,
    tol: float = 1e-3,
    threads: int | None = None,
) -> tuple[bool, float]:
    """Almost convergence test m_*(f) = m^*(f) at the final schedule entry

    Parameters
    ----------
    f : SequenceLike
        Real valued slice, sequence source or callback
    N_schedule : list[int]
        Increasing window lengths
    K : int
        Scan radius
    tol : float, optional
        Largest admissible gap between the estimates, by default 1e-3
    threads : int | None, optional
        Worker threads, by default `default_threads()`

    Returns
    -------
    tuple[bool, float]
        Whether the gap is within tolerance, and the midpoint of the estimates
    """
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    report = banach_density(f, N_schedule, K, threads=threads)
    midpoint = (report.lower_estimate + report.upper_estimate) / 2
    return bool(report.gap <= tol), midpoint


def star_discrepancy(points: np.ndarray) -> float:
    """Star discrepancy of a finite point set in [0, 1)

        D*_N = 1/(2N) + max_i |x_(i) - (2i - 1)/(2N)|

    with x_(1) <= ... <= x_(N) the sorted points.

    Parameters
    ----------
    points : np.ndarray
        1D array of points in [0, 1)

    Returns
    -------
    float
        Star discrepancy, in [1/(2N), 1]
    """
    x = np.sort(np.asarray(points, dtype=np.float64).ravel())
    if x.size == 0:
        raise ValueError("Star discrepancy needs at least one point")
    if x[0] < 0 or x[-1] >= 1:
        raise ValueError("Points must lie in [0, 1)")
    n = x.size
    centers = (2 * np.arange(1, n + 1) - 1) / (2 * n)
    return float(1 / (2 * n) + np.max(np.abs(x - centers)))
