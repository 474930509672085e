"""Round trips through the three hardness reductions: each instance is
translated to a matroid problem, and both sides are solved by brute
force to exhibit the if-and-only-if.
"""

from matroidkit import (
    TripleSystem,
    detect_minor_exhaustive,
    graph_has_independent_set,
    has_matching,
    intersect3_bruteforce,
    multigraph,
    reduce_3dm,
    reduce_independent_set,
    reduce_subgraph_iso,
    subgraph_contains,
    to_view,
    uniform,
)

print("== 3-dimensional matching -> 3-matroid intersection ==")
for triples in (((0, 0, 0), (1, 1, 1), (0, 1, 1)), ((0, 0, 0), (0, 1, 1))):
    ts = TripleSystem(2, triples)
    built = reduce_3dm(ts)
    matched = has_matching(ts) is not None
    common = intersect3_bruteforce(*(to_view(d) for d in built.circuits), ts.s)
    print(f"  triples {triples}: matching={matched}, "
          f"common independent set of size {ts.s}={common is not None}")

print()
print("== subgraph isomorphism -> minor detection ==")
k3 = multigraph(3, [(0, 1), (1, 2), (0, 2)])
p3 = multigraph(3, [(0, 1), (1, 2)])
for g, h, names in ((k3, p3, "P3 in K3"), (p3, k3, "K3 in P3")):
    host, pattern = reduce_subgraph_iso(g, h)
    contains = subgraph_contains(g, h)
    minor = detect_minor_exhaustive(to_view(host), to_view(pattern))
    print(f"  {names}: subgraph={contains}, minor={minor is not None}")

print()
print("== independent set -> uniform minor ==")
for g, name in ((p3, "P3"), (k3, "K3")):
    desc, target = reduce_independent_set(g, 2, 3)
    indep = graph_has_independent_set(g, 2) is not None
    minor = detect_minor_exhaustive(to_view(desc), uniform(*target))
    print(f"  {name}, k=2: independent set={indep}, "
          f"U{target} minor={minor is not None}")
