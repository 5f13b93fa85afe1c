# Copyright 2026 The qecnn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the qecnn surface-code decoding library."""

from qecnn._core import (
    Code,
    Model,
    default_hidden_size,
    input_size,
    latency_steps,
    parity_depth,
    wilson_interval,
)

__all__ = [
    "Code",
    "Model",
    "default_hidden_size",
    "input_size",
    "latency_steps",
    "parity_depth",
    "wilson_interval",
]
