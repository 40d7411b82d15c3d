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

import csv
import json
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any, TextIO


def _cell(value: Any) -> Any:
    """Floats by shortest round-trip repr, everything else by str"""
    if isinstance(value, float):
        return repr(value)
    return value


class CSVBackend:
    """Comma separated text backend. The first line is a "#"-prefixed JSON record
    of the provenance; every table follows with its column header, tables are
    separated by a blank line.

    Parameters
    ----------
    path : str | Path | None, optional
        Output file, by default standard output
    """

    def __init__(self, path: str | Path | None = None) -> None:
        self.path = None if path is None else Path(path)
        self._stream: TextIO | None = None
        self._writer: Any = None
        self.columns: dict[str, list[str]] = {}
        self.provenance: dict[str, Any] = {}
        self._current: str | None = None
        self._closed = False

    def __enter__(self) -> "CSVBackend":
        return self

    def __exit__(self, exc_type: Any, *args: Any) -> None:
        if exc_type is not None and self._stream is None:
            # nothing written, leave no header behind
            self._closed = True
            return
        self.close()

    def _open(self) -> None:
        if self._closed:
            raise ValueError("CSV backend is closed")
        if self._stream is not None:
            return
        if self.path is None:
            self._stream = sys.stdout
        else:
            self._stream = open(self.path, "w", newline="", encoding="utf-8")
        self._writer = csv.writer(self._stream, lineterminator="\n")
        self._stream.write("# " + json.dumps(self.provenance, sort_keys=True) + "\n")

    def add_table(
        self,
        name: str,
        columns: list[str],
        provenance: dict[str, Any] | None = None,
    ) -> None:
        """Add a table. Provenance must be given before the first table is written.

        Parameters
        ----------
        name : str
            Name of the table
        columns : list[str]
            Column names
        provenance : dict[str, Any] | None, optional
            Provenance record merged into the header line
        """
        if name in self.columns:
            raise ValueError(f"Table {name} already exists")
        if provenance:
            if self._stream is not None:
                raise ValueError("Provenance header has already been written")
            self.provenance = self.provenance | provenance
        self.columns[name] = list(columns)

    def write(self, rows: Iterable[Sequence[Any]], name: str) -> None:
        """Append rows to a table. Tables are written one after the other, a table
        is closed once rows of the next table are written.

        Parameters
        ----------
        rows : Iterable[Sequence[Any]]
            Rows with one entry per column
        name : str
            Name of the table
        """
        if name not in self.columns:
            raise KeyError(f"Table {name} has not been added")
        self._open()
        if name != self._current:
            if self._current is not None:
                self._stream.write("\n")  # type: ignore[union-attr]
            self._writer.writerow(self.columns[name])
            self._current = name
        width = len(self.columns[name])
        for row in rows:
            if len(row) != width:
                raise ValueError(
                    f"Row of length {len(row)} written to table {name} with {width} columns"
                )
            self._writer.writerow([_cell(v) for v in row])

    def close(self) -> None:
        """Write the header if nothing was written yet and release the file"""
        if self._closed:
            return
        self._open()
        if self._stream is not None and self._stream is not sys.stdout:
            self._stream.close()
        elif self._stream is not None:
            self._stream.flush()
        self._stream = None
        self._closed = True


def read_csv_sequence(path: str | Path) -> tuple[dict[str, Any], list[int], list[str]]:
    """Read back a sequence written as a "k,value" table

    Parameters
    ----------
    path : str | Path
        CSV file with a "#" JSON header line

    Returns
    -------
    tuple[dict[str, Any], list[int], list[str]]
        Provenance, indices and raw value strings
    """
    with open(path, encoding="utf-8") as stream:
        first = stream.readline()
        if not first.startswith("#"):
            raise ValueError(f"{path} does not start with a '#' provenance line")
        provenance = json.loads(first[1:])
        reader = csv.reader(stream)
        header = next(reader, None)
        if header is None or header[:2] != ["k", "value"]:
            raise ValueError(f"{path} is not a k,value sequence table")
        ks, values = [], []
        for row in reader:
            if not row:
                break
            ks.append(int(row[0]))
            values.append(row[1])
    return provenance, ks, values
