"""Degree-one cup products in the Stanley-Reisner exterior algebra.

For alpha supported on S with coefficient 1, the rank of beta -> beta * alpha
is (|S| - #components of S) + #(outside vertices adjacent to S).
"""

import itertools

from praag.cohomology import SRAlgebra, cup_matrix, cup_rank, dim_im_c_alpha_formula, support_data, wedge
from praag.graph import fan_graph

g = fan_graph(4)
alg = SRAlgebra(g, 3)
print("degree-2 basis (edges):", alg.basis(2))
print("chi1 * chi2 =", wedge(alg.chi(0), alg.chi(1)).terms())
print("chi2 * chi1 =", wedge(alg.chi(1), alg.chi(0)).terms())
print("chi2 * chi4 =", wedge(alg.chi(1), alg.chi(3)).terms(), "(no edge)")

alpha = alg.support_character([0])
print("\ncup matrix of alpha = chi1 (columns chi1..chi5):")
print(cup_matrix(alg, alpha).entries)
sd = support_data(alg, [0])
print("outside neighbours:", sd.v0, " edges among them:", sd.e0)
print("rank", cup_rank(alg, alpha), "formula", dim_im_c_alpha_formula(alg, [0]))

mismatch = 0
for k in range(1, 6):
    for s in itertools.combinations(range(5), k):
        mismatch += cup_rank(alg, alg.support_character(s)) != dim_im_c_alpha_formula(alg, s)
print("\nall 31 supports: mismatches =", mismatch)
