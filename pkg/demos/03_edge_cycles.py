"""Cycles through an edge that use exactly one edge inside every subcube.

These 16-cycles (SSQ) and 32-cycles (BSQ) are the glue of every larger
construction: each subcube's single edge is where a subcube cycle gets spliced in.
"""

from cubecycle import CubeGraph, bsq_edge_cycle32, ssq_edge_cycle16, verify_cycle

g = CubeGraph("SSQ", 6)
w = ssq_edge_cycle16(6, ("000000", "000001"))
print("SSQ_6 suffix edge:", " ".join(w.texts(6)))
print("  one edge per subcube:", verify_cycle(g, w, subcube_constraint=1).ok)

w = ssq_edge_cycle16(6, ("000000", "111100"))
print("SSQ_6 prefix edge:", " ".join(w.texts(6)))

g = CubeGraph("SSQ", 10)
w = ssq_edge_cycle16(10, ("0000000000", "0000000100"))
print("\nSSQ_10 group-1 edge, (prefix, group 1) pairs:")
print("  ", [(t[:4], t[4:8]) for t in w.texts(10)])

g = CubeGraph("BSQ", 10)
w = bsq_edge_cycle32(10, ("0110100111", "0110100110"))
print("\nBSQ_10 suffix edge at 0110100111: length", w.length,
      "verified:", verify_cycle(g, w, expected_len=32, subcube_constraint=1).ok)
