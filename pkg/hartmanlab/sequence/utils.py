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

import numpy as np

from hartmanlab.sequence.base import SequenceSlice, SequenceSource
from hartmanlab.utils.checks import handshake_range


def fetch_slice(source: SequenceSource, start: int, length: int) -> SequenceSlice:
    """Evaluate a sequence source on [start, start + length)

    Parameters
    ----------
    source : SequenceSource
        Sequence source
    start : int
        First index
    length : int
        Number of values, positive

    Returns
    -------
    SequenceSlice
        Slice carrying the source descriptor
    """
    handshake_range(start, length)
    k = np.arange(int(start), int(start) + int(length), dtype=np.int64)
    return SequenceSlice(int(start), source(k), dict(source.descriptor))
