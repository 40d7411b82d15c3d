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

from .base import SequenceSlice, SequenceSource
from .blocks import EvenOddBlocks, block_bits  # noqa
from .hartman import HartmanFunction, HartmanSet, hartman_bits, hartman_real  # noqa
from .lacunary import Lacunary, lacunarity_ratio, lacunary_bits, powers  # noqa
from .rotation import Rotation, Sturmian, rotation_bits, sturmian  # noqa
from .utils import fetch_slice
