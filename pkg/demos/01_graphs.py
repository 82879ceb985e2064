"""Graph side: cliques, chordality, pastings, forbidden shapes and ladders."""

from praag.graph import (
    chordal_certificate,
    chordal_pasting_tree,
    clique_census,
    cycle_graph,
    embed_in_ladder,
    enumerate_cliques,
    fan_graph,
    is_elementary_type,
    ladder_graph,
    path_graph,
    subsquare_census,
    tree_leaves,
)

g = fan_graph(4)
print("Fan on 5 vertices:", g.edge_list)
print("clique counts by size 0..4:", clique_census(g, 4))
print("triangles:", [[g.vertices[v] for v in c] for c in enumerate_cliques(g, 3)])

peo = chordal_certificate(g)
print("\nA perfect elimination order certifies chordality:", [g.vertices[v] for v in peo.order])
tree = chordal_pasting_tree(g)
print("pasting tree:", tree)
print("leaf cliques, left to right:", [[g.vertices[v] for v in leaf] for leaf in tree_leaves(tree)])

w = is_elementary_type(g)
print("\nNot of elementary type; induced", w.kind, "on", [g.vertices[v] for v in w.vertices])

c5 = cycle_graph(5)
print("\nThe 5-cycle is not chordal:", chordal_certificate(c5))

q3 = ladder_graph(3)
census = subsquare_census(q3)
print(f"\nLadder with 3 squares: q={census.q}, |E|-d+r={census.lhs}")
print("path on 4 vertices inside the 2-square ladder:", embed_in_ladder(path_graph(4), 2))
