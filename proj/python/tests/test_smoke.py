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

import itertools

import pytest

import cayrep


def undirected(edges):
    return sorted({(u, v) for a, b in edges for u, v in ((a, b), (b, a))})


K4 = undirected(itertools.combinations(range(4), 2))
C8 = undirected((i, (i + 1) % 8) for i in range(8))
Q3 = undirected((a, a ^ (1 << t)) for a in range(8) for t in range(3))


def test_permutation_round_trip():
    g = cayrep.Permutation.parse("(0 1 2 3)(4 5)", 6)
    assert str(g) == "(0 1 2 3)(4 5)"
    assert g.order() == 4
    assert g[0] == 1
    assert (g * g.inverse()).images == list(range(6))


def test_closure_of_k4_is_trivial_scheme():
    x = cayrep.cc_from_graph(4, K4)
    assert x.rank == 2
    assert x.degree == 4
    assert x.to_json()["rank"] == 2


def test_dbase_reports():
    assert cayrep.dbase(4, K4, 2, 1)["b_D"] == 1
    assert cayrep.dbase(8, C8, 2, 2)["b_D"] == 0
    report = cayrep.dbase(8, Q3, 2, 2)
    assert report["b_D"] >= 1
    x = cayrep.cc_from_graph(8, Q3)
    for cls in report["classes"]:
        for key in ("c", "b"):
            assert x.is_automorphism(cayrep.Permutation.parse(cls[key], 8))


def test_recognize_and_represent():
    assert cayrep.recognize(4, K4, 2, 1)
    assert not cayrep.recognize(8, C8, 2, 2)
    reps = cayrep.represent(8, Q3, 2, 2)
    assert reps and all(len(r["connection_set"]) == 3 for r in reps)


def test_cgi():
    conn = [(1, 0), (3, 0), (0, 1)]
    assert cayrep.cgi(2, 2, conn, 8, Q3)
    assert not cayrep.cgi(2, 2, conn, 8, C8)
    assert sorted(cayrep.cayley_graph_edges(2, 2, conn)) == sorted(
        cayrep.cayley_graph_edges(2, 2, [(3, 0), (0, 1), (1, 0)])
    )
    assert cayrep.cayley_isomorphic(2, 2, conn, conn)
    assert not cayrep.cayley_isomorphic(2, 2, [(1, 0)], [(0, 1)])


def test_scheme_info_and_parsing():
    n, edges, directed = cayrep.parse_graph("# path\n3 2 undirected\n0 1\n1 2\n")
    assert (n, directed) == (3, False)
    info = cayrep.scheme_info(n, edges)
    assert len(info["fibers"]) == 2
    assert not info["homogeneous"]


def test_errors():
    with pytest.raises(cayrep.CayrepError):
        cayrep.dbase(6, [], 2, 1)
    with pytest.raises(cayrep.CayrepError):
        cayrep.parse_graph("3 1\n0 7\n")
    with pytest.raises(ValueError):
        cayrep.cc_from_graph(3, [(0, 5)])
