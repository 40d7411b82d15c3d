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

from .base import CompactPoint, Compactification
from .cyclic import Cyclic
from .product import CompactificationSpec, Product
from .torus import Torus
from .triadic import TriadicAdic
from .utils import (  # noqa
    add,
    embed,
    factors_of,
    identity,
    iota,
    is_finite,
    load_spec,
    neg,
    period,
    product,
    spec_from_json,
    spec_to_json,
)
