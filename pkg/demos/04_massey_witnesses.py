"""Massey products through unipotent representations.

A tuple of characters with vanishing consecutive cups on a right-angled
Artin group always comes from a homomorphism into U_{n+1}(F_p). For a
group with a deeper relator the exhaustive search finds a tuple that is
only defined mod the centre.
"""

import time

from praag.errors import CupObstruction
from praag.graph import path_graph
from praag.massey import (
    DEFINED_ONLY,
    Presentation,
    build_raag_witness,
    exhaustive_witness_search,
    extract_superdiagonal,
    find_tuple_with_status,
    power_witness,
    raag_presentation,
    verify_rep,
)
from praag.pcentral import commutator, gen

g = path_graph(3)
chars = [(1, 0, 0), (1, 0, 1), (0, 0, 1)]
rep = build_raag_witness(g, 3, chars)
print("witness for", chars, "on the path v1-v2-v3:")
for name, m in zip(g.vertices, rep.images):
    print(name, m.tolist())
print("verified:", verify_rep(rep), " superdiagonal:", extract_superdiagonal(rep))

try:
    build_raag_witness(g, 3, [(1, 0, 0), (0, 1, 0), (1, 0, 0)])
except CupObstruction as exc:
    print("\nobstructed:", exc)

print("\nJordan-block witness for <alpha, alpha, alpha, alpha>:")
print(power_witness(g, 5, (2, 0, 1), 4).images[0].tolist())

res = exhaustive_witness_search(raag_presentation(g), 2, 3, [(1, 0, 0)] * 3)
print("\nexhaustive search agrees with the construction:", res.status, "after", res.fillings, "fillings")

x = [gen(5, i) for i in range(5)]
pres = Presentation(5, (commutator(commutator(x[0], x[1]), x[2]) * commutator(x[3], x[4]),))
t0 = time.perf_counter()
hit = find_tuple_with_status(pres, 2, 3, DEFINED_ONLY, budget=2 ** 15)
print(f"\n<x1..x5 | [[x1,x2],x3][x4,x5]> at p=2: {hit.chars} is defined but does not vanish")
print(f"({hit.searched} triples scanned in {time.perf_counter() - t0:.1f}s)")
