# Copyright 2026 The cayrep Authors
#
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

"""Cayley representations and isomorphism over C_p x C_{p^k}, p in {2, 3}.

Graphs are given as a vertex count and a list of directed edges (u, v).
Elements of D = C_{p^k} x C_p are pairs (i, j).
"""

from ._cayrep import (
    CayrepError,
    CoherentConfiguration,
    Permutation,
    cayley_graph_edges,
    cayley_isomorphic,
    cc_from_graph,
    cgi,
    dbase,
    parse_graph,
    recognize,
    represent,
    scheme_info,
)

__all__ = [
    "CayrepError",
    "CoherentConfiguration",
    "Permutation",
    "cayley_graph_edges",
    "cayley_isomorphic",
    "cc_from_graph",
    "cgi",
    "dbase",
    "parse_graph",
    "recognize",
    "represent",
    "scheme_info",
]
