# Copyright 2026 The posemi Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Finite po-semirings, zero-divisor graphs and ideal lattices."""

from ._posemi import (
    ConstructionError,
    Graph,
    GraphError,
    ParseError,
    PoSemiring,
    RingError,
    __version__,
    build,
    classify,
    construction_kinds,
    is_isomorphic,
    ring,
    ring_corpus,
    run_cli,
    search,
    target_graph,
)

__all__ = [
    "ConstructionError",
    "Graph",
    "GraphError",
    "ParseError",
    "PoSemiring",
    "RingError",
    "__version__",
    "build",
    "classify",
    "construction_kinds",
    "is_isomorphic",
    "ring",
    "ring_corpus",
    "run_cli",
    "search",
    "target_graph",
]
