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

from hartmanlab.compact.base import Compactification
from hartmanlab.compact.cyclic import Cyclic
from hartmanlab.compact.torus import Torus
from hartmanlab.compact.triadic import TriadicAdic


class Product:
    """Product (supremum) of finitely many compactifications, k -> (iota_i(k))_i.
    Nested products are flattened on construction.

    Parameters
    ----------
    factors : list[Torus | Cyclic | TriadicAdic | Product]
        Non-empty list of factor compactifications
    """

    kind = "product"

    def __init__(self, factors: list[Any]):
        if len(factors) == 0:
            raise ValueError("Product of compactifications needs at least one factor")
        flat: list[Compactification] = []
        for factor in factors:
            if isinstance(factor, Product):
                flat.extend(factor.factors)
            elif isinstance(factor, Torus | Cyclic | TriadicAdic):
                flat.append(factor)
            else:
                raise ValueError(f"Unsupported compactification factor {factor}")
        self.factors: tuple[Compactification, ...] = tuple(flat)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Product) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash((self.kind, self.factors))

    def __repr__(self) -> str:
        return f"Product({list(self.factors)})"

    def to_json(self) -> dict[str, Any]:
        return {"product": [factor.to_json() for factor in self.factors]}


CompactificationSpec = Torus | Cyclic | TriadicAdic | Product
