"""
Graph states: where every AvN argument lives
============================================

Local complementation, the triple extracted from a degree-2 vertex, and
the reduction of that triple to three qubits.
"""

from avnkit.checks import all_graphs
from avnkit.graphstate import (
    Graph,
    conjugate_group,
    extract_avn_triple,
    graph_group,
    lc_orbit,
    local_complement,
    local_complement_frame,
    same_group,
)
from avnkit.subgroup import is_avn
from avnkit.triples import reduce_to_three

# K3 complemented at any vertex is a star
k3 = Graph.complete(3)
print(local_complement(k3, 0).format())

# the connected 3-vertex graphs form a single orbit
print(sorted(g.edges for g in lc_orbit(k3)))

# and the group moves with a local Clifford frame
frame = local_complement_frame(k3, 0)
print(same_group(conjugate_group(frame, graph_group(k3)), graph_group(local_complement(k3, 0))))

# the square (4-cycle) cluster state
square = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
(u, v, w), triple, case = extract_avn_triple(square)
print(f"vertex {u}, neighbours {v},{w}, case {case}")
print(triple.format())
print(reduce_to_three(triple))

# AvN exactly when some vertex has degree >= 2, over all labelled 4-vertex graphs
tally = {}
for g in all_graphs(4):
    key = (bool(is_avn(graph_group(g))), g.max_degree() >= 2)
    tally[key] = tally.get(key, 0) + 1
print(tally)
