"""Build the two cube families and look at their basic structure.

Labels are ints; the text form is written most significant bit first.
"""

from cubecycle import CubeGraph, graph_report
from cubecycle.topology import to_edgelist

for family in ("SSQ", "BSQ"):
    for n in (2, 6, 10):
        g = CubeGraph(family, n)
        r = graph_report(g)
        print(
            f"{g.name:7s} vertices={r.vertex_count:5d} edges={r.edge_count:5d} "
            f"degree={r.regular_degree} bipartite={r.bipartite} girth={r.girth} diameter={r.diameter}"
        )

ssq = CubeGraph("SSQ", 6)
print("\nneighbours of 000000 in SSQ_6:", [ssq.text(v) for v in ssq.neighbors("000000")])
print("001100 ~ 110000 by the recursive definition:", ssq.recursive_adjacent("001100", "110000"))

bsq = CubeGraph("BSQ", 6)
edge = bsq.classify_edge("000000", "110100")
print("BSQ_6 edge 000000-110100 lives in group", edge.group, "with (a, b) step", edge.step)

print("\nBSQ_2 is a 4-cycle:")
print(to_edgelist(CubeGraph("BSQ", 2)), end="")
