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
from collections.abc import Iterable, Iterator, Sequence
from typing import Any

import numpy as np
import xarray


class KVBackend:
    """A key-value (dict) backend holding result tables in memory.

    Columns are kept as lists while rows are appended and converted to numpy
    arrays on access.
    """

    def __init__(self) -> None:
        self.root: dict[str, dict[str, list[Any]]] = {}
        self.provenance: dict[str, Any] = {}

    def __contains__(self, item: str) -> bool:
        return item in self.root

    def __getitem__(self, item: str) -> dict[str, np.ndarray]:
        """Columns of a table as numpy arrays

        Parameters
        ----------
        item : str
            Table name
        """
        return {c: np.asarray(v) for c, v in self.root[item].items()}

    def __len__(self) -> int:
        return len(self.root)

    def __iter__(self) -> Iterator:
        return iter(self.root)

    def add_table(
        self,
        name: str,
        columns: list[str],
        provenance: dict[str, Any] | None = None,
    ) -> None:
        """Add an empty table to the KV store.

        Parameters
        ----------
        name : str
            Name of the table
        columns : list[str]
            Column names
        provenance : dict[str, Any] | None, optional
            Provenance record merged into the store attributes
        """
        if name in self.root:
            raise AssertionError(f"Warning! {name} is already in KV Store.")
        self.root[name] = {c: [] for c in columns}
        if provenance:
            self.provenance = self.provenance | provenance

    def write(self, rows: Iterable[Sequence[Any]], name: str) -> None:
        """Append rows to a table in the KV store.

        Parameters
        ----------
        rows : Iterable[Sequence[Any]]
            Rows with one entry per column
        name : str
            Name of the table
        """
        if name not in self.root:
            raise KeyError(f"Table {name} has not been added")
        table = self.root[name]
        for row in rows:
            if len(row) != len(table):
                raise ValueError(
                    f"Row of length {len(row)} written to table {name} with "
                    f"{len(table)} columns"
                )
            for column, value in zip(table.values(), row):
                column.append(value)

    def to_xarray(self, name: str) -> xarray.Dataset:
        """Table as a dataset indexed by its first column

        Parameters
        ----------
        name : str
            Name of the table

        Returns
        -------
        xarray.Dataset
            One data variable per remaining column, provenance as a JSON attribute
        """
        table = self[name]
        index, *rest = table
        return xarray.Dataset(
            data_vars={c: ([index], table[c]) for c in rest},
            coords={index: table[index]},
            attrs={"provenance": json.dumps(self.provenance, sort_keys=True)},
        )
