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

from collections.abc import Iterable, Sequence
from typing import Any, Protocol, runtime_checkable


@runtime_checkable
class IOBackend(Protocol):
    """Interface for a result table backend."""

    def add_table(
        self,
        name: str,
        columns: list[str],
        provenance: dict[str, Any] | None = None,
    ) -> None:
        """
        Add an empty table with named columns to the backend.

        Parameters
        ----------
        name : str
            Name of the table
        columns : list[str]
            Column names
        provenance : dict[str, Any] | None, optional
            JSON serializable description of how the results were produced
        """
        pass

    def write(self, rows: Iterable[Sequence[Any]], name: str) -> None:
        """
        Append rows to a table.

        Parameters
        ----------
        rows : Iterable[Sequence[Any]]
            Rows with one entry per column
        name : str
            Name of the table written to
        """
        pass
