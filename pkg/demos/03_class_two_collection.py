"""Arithmetic in F/F^(3): collection, commutators and independence of relations."""

from praag.pcentral import (
    commutator,
    gen,
    nf_commutator,
    nf_from_word,
    relations_independent,
    substitute_hom,
)

x = [gen(3, i) for i in range(3)]
print("x2 x1 collects to", nf_from_word(x[1] * x[0], 5))
print("(x1 x2)^2 at p=2:", nf_from_word((x[0] * x[1]) ** 2, 2))
print("(x1 x2)^3 at p=3:", nf_from_word((x[0] * x[1]) ** 3, 3))

a = nf_from_word(x[0] * x[1].inverse(), 5)
b = nf_from_word(x[1] * x[2].inverse(), 5)
print("\n[x1 x2^-1, x2 x3^-1] =", nf_commutator(a, b))

# w_i = v_i v_{i+1}^-1 on five vertices; relations of a pasting of triangles
w = [gen(4, i) for i in range(4)]
phi = substitute_hom({i: gen(5, i) * gen(5, i + 1).inverse() for i in range(4)}, 4, 2)
rels = [commutator(w[0], w[1]), commutator(w[0] * w[1], w[2]), commutator(w[0] * w[1] * w[2], w[3])]
for r in rels:
    print(r, "->", phi(r))
rep = relations_independent([nf_from_word(r, 2) for r in rels])
print("independent:", rep.independent, "rank:", rep.rank)
