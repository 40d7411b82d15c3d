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

import argparse
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np
from dotenv import load_dotenv
from loguru import logger

from hartmanlab import __version__, run as workflows
from hartmanlab.compact import Cyclic, load_spec
from hartmanlab.finite import FiniteSystem
from hartmanlab.io import CSVBackend, read_csv_sequence
from hartmanlab.sequence import (
    EvenOddBlocks,
    HartmanSet,
    Lacunary,
    Rotation,
    SequenceSlice,
    SequenceSource,
    Sturmian,
    fetch_slice,
    powers,
)
from hartmanlab.window import ResidueSet, Window, load_window

SUBCOMMANDS = ("generate", "density", "finite", "complexity", "cantor")
FAMILIES = ("sturmian", "beatty", "parity", "powers2", "blocks")
GOLDEN = (math.sqrt(5) - 1) / 2
DEFAULT_SCAN = 10**5

# Flags each subcommand cannot run without
REQUIRED_FLAGS = {
    "generate": ("len",),
    "density": ("window",),
    "finite": ("map",),
    "complexity": ("nmax",),
    "cantor": ("n",),
}


@dataclass
class RunConfig:
    """One CLI invocation

    Parameters
    ----------
    subcommand : str
        One of generate, density, finite, complexity, cantor
    spec_path : str | None, optional
        Compactification JSON file
    flags : dict[str, Any], optional
        Remaining options, None for flags not given
    output_path : str | None, optional
        Output file, by default standard output
    """

    subcommand: str
    spec_path: str | None = None
    flags: dict[str, Any] = field(default_factory=dict)
    output_path: str | None = None

    def validate(self) -> None:
        """Check the subcommand is known and its required flags are present

        Raises
        ------
        ValueError
            On an unknown subcommand or a missing flag
        """
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"Unknown subcommand {self.subcommand}")
        for name in REQUIRED_FLAGS[self.subcommand]:
            if self.flags.get(name) is None:
                raise ValueError(f"{self.subcommand} requires --{name}")

    @property
    def provenance(self) -> dict[str, Any]:
        flags = {k: v for k, v in self.flags.items() if v is not None}
        if self.spec_path is not None:
            flags["spec"] = self.spec_path
        return {"command": self.subcommand, "flags": flags, "version": __version__}


def _rotation_number(value: str) -> float | Fraction:
    return Fraction(value) if "/" in value else float(value)


def _integers(value: str) -> list[int]:
    return [int(v) for v in value.split(",") if v.strip()]


def _family_source(config: RunConfig) -> SequenceSource:
    flags = config.flags
    alpha = flags.get("alpha")
    match flags["family"]:
        case "sturmian":
            if alpha is None:
                raise ValueError("Family sturmian requires --alpha")
            return Sturmian(_rotation_number(alpha))
        case "beatty":
            if flags.get("beta") is None:
                raise ValueError("Family beatty requires --beta")
            rotation = GOLDEN if alpha is None else _rotation_number(alpha)
            return Rotation(rotation, 0.0, float(flags["beta"]))
        case "parity":
            spec = Cyclic(2)
            return HartmanSet(spec, Window(spec, {0: ResidueSet(2, [0])}))
        case "powers2":
            return Lacunary(powers(2, 63))
        case "blocks":
            return EvenOddBlocks(flags.get("member") or "AB")
    raise ValueError(f"Unknown family {flags['family']}, use one of {FAMILIES}")


def _read_input(path: str) -> SequenceSlice:
    provenance, ks, raw = read_csv_sequence(path)
    if len(ks) == 0:
        raise ValueError(f"{path} holds no values")
    if ks != list(range(ks[0], ks[0] + len(ks))):
        raise ValueError(f"{path} does not hold consecutive indices")
    if all(v in ("0", "1") for v in raw):
        values = np.array([int(v) for v in raw], dtype=np.uint8)
    else:
        values = np.array([float(v) for v in raw], dtype=np.float64)
    return SequenceSlice(ks[0], values, provenance.get("descriptor", {}))


def _sequence(config: RunConfig, window_flag: str) -> SequenceSource | SequenceSlice:
    """Sequence selected by --input, --family or --spec with a window file"""
    flags = config.flags
    given = [
        name
        for name, present in (
            ("input", flags.get("input") is not None),
            ("family", flags.get("family") is not None),
            ("spec", config.spec_path is not None),
        )
        if present
    ]
    if len(given) != 1:
        raise ValueError(
            f"{config.subcommand} needs exactly one of --input, --family, --spec, got {given}"
        )
    match given[0]:
        case "input":
            return _read_input(flags["input"])
        case "family":
            return _family_source(config)
    spec = load_spec(config.spec_path)  # type: ignore[arg-type]
    if flags.get(window_flag) is None:
        raise ValueError(f"--spec requires a window file via --{window_flag}")
    return HartmanSet(spec, load_window(spec, flags[window_flag]))


def _dispatch(config: RunConfig, io: CSVBackend) -> None:
    flags = config.flags
    provenance = config.provenance
    match config.subcommand:
        case "generate":
            source = _sequence(config, "window")
            if isinstance(source, SequenceSlice):
                raise ValueError("generate needs --family or --spec, not --input")
            workflows.generate(
                source, int(flags.get("start") or 0), int(flags["len"]), io, provenance
            )
        case "density":
            f = _sequence(config, "region")
            N = int(flags["window"])
            schedule = _integers(flags["schedule"]) if flags.get("schedule") else [N]
            if schedule[-1] != N:
                schedule = sorted(set(schedule) | {N})
            scan = flags.get("scan")
            if scan is None and isinstance(f, SequenceSlice):
                scan = max(abs(f.start), abs(f.stop))
            elif scan is None:
                scan = DEFAULT_SCAN
            provenance = provenance | {"descriptor": f.descriptor}
            workflows.density(f, schedule, int(scan), io, provenance)
        case "complexity":
            f = _sequence(config, "window")
            if not isinstance(f, SequenceSlice):
                if flags.get("len") is None:
                    raise ValueError("complexity of a generated sequence requires --len")
                f = fetch_slice(f, int(flags.get("start") or 0), int(flags["len"]))
            provenance = provenance | {"descriptor": f.descriptor}
            workflows.complexity(f, int(flags["nmax"]), io, provenance)
        case "finite":
            sys_map = FiniteSystem.from_map(_integers(flags["map"]))
            f = None
            if flags.get("f") is not None:
                f = [Fraction(v) for v in flags["f"].split(",")]
            workflows.finite(sys_map, f, io, provenance)
        case "cantor":
            n = int(flags["n"])
            kmax = 3**n if flags.get("kmax") is None else int(flags["kmax"])
            workflows.cantor(n, kmax, io, provenance)


def run(config: RunConfig) -> int:
    """Run one CLI invocation

    Parameters
    ----------
    config : RunConfig
        Invocation

    Returns
    -------
    int
        0 on success, 2 on a configuration error
    """
    try:
        config.validate()
        with CSVBackend(config.output_path) as io:
            _dispatch(config, io)
    except json.JSONDecodeError as e:
        logger.error(f"Malformed JSON: {e.msg} at line {e.lineno} column {e.colno}")
        return 2
    except (ValueError, KeyError, OSError, ZeroDivisionError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hartmanlab",
        description="Hartman sequences, Banach densities, invariant means and the "
        "Cantor product example",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def sequence_flags(p: argparse.ArgumentParser, window_flag: str) -> None:
        p.add_argument("--spec", help="compactification JSON file")
        p.add_argument(f"--{window_flag}", help="window JSON file used with --spec")
        p.add_argument("--family", choices=FAMILIES)
        p.add_argument("--alpha", help="rotation number, float or p/q")
        p.add_argument("--beta", help="right end of the Beatty window [0, beta)")
        p.add_argument("--member", choices=("A", "B", "AB"), help="block set")
        p.add_argument("--input", help="sequence CSV written by generate")

    generate = sub.add_parser("generate", help="write a sequence slice")
    sequence_flags(generate, "window")
    generate.add_argument("--start", type=int, default=0)
    generate.add_argument("--len", type=int)

    density = sub.add_parser("density", help="Banach density estimates")
    sequence_flags(density, "region")
    density.add_argument("--window", type=int, help="window length N")
    density.add_argument("--scan", type=int, help="scan radius K")
    density.add_argument("--schedule", help="window lengths N1,N2,...")

    finite = sub.add_parser("finite", help="invariant means of a finite map")
    finite.add_argument("--map", help="images T(0),T(1),...")
    finite.add_argument("--f", help="function values, integers or p/q")

    complexity = sub.add_parser("complexity", help="subword complexity")
    sequence_flags(complexity, "window")
    complexity.add_argument("--start", type=int, default=0)
    complexity.add_argument("--len", type=int)
    complexity.add_argument("--nmax", type=int)

    cantor = sub.add_parser("cantor", help="Cantor truncations f_n")
    cantor.add_argument("--n", type=int)
    cantor.add_argument("--kmax", type=int)

    for p in (generate, density, finite, complexity, cantor):
        p.add_argument("--output", help="output file, by default standard output")
    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    """Parse command line arguments into a run configuration"""
    args = vars(build_parser().parse_args(argv))
    subcommand = args.pop("subcommand")
    spec_path = args.pop("spec", None)
    output_path = args.pop("output", None)
    return RunConfig(subcommand, spec_path, args, output_path)


def main(argv: list[str] | None = None) -> int:
    """Console entry point"""
    load_dotenv()
    return run(parse_config(argv))
