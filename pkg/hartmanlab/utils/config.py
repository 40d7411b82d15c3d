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

import os


def default_threads() -> int:
    """Default cap on internal parallelism, read from `HARTMANLAB_THREADS`

    Malformed or non-positive values are ignored and the CPU count is used.

    Returns
    -------
    int
        Number of worker threads
    """
    default = os.cpu_count() or 1
    try:
        threads = int(os.environ.get("HARTMANLAB_THREADS", default))
        if threads > 0:
            default = threads
    except ValueError:
        pass
    return default
