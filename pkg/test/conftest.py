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

import numpy as np
import pytest


@pytest.fixture(scope="session")
def threads_context():
    class EnvContextManager:
        def __init__(self, **kwargs):
            # Single worker by default
            self.env_vars = {"HARTMANLAB_THREADS": "1"}
            for key, value in kwargs.items():
                self.env_vars[key] = value

        def __enter__(self):
            self.old_values = {key: os.environ.get(key) for key in self.env_vars}
            os.environ.update(self.env_vars)

        def __exit__(self, exc_type, exc_value, exc_traceback):
            for key, value in self.old_values.items():
                if value is None:
                    os.environ.pop(key, None)
                else:
                    os.environ[key] = value

    return EnvContextManager


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def pytest_addoption(parser):
    parser.addoption(
        "--exhaustive",
        action="store_true",
        default=False,
        help="run exhaustive enumerations of larger finite systems",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "exhaustive: mark test as enumerating every system of a size"
    )


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--exhaustive"):
        skip_exhaustive = pytest.mark.skip(
            reason="need --exhaustive option to run exhaustive enumerations"
        )
        for item in items:
            if "exhaustive" in item.keywords:
                item.add_marker(skip_exhaustive)
