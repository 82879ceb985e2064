"""Demushkin forms: symplectic bases, cup surjectivity, corestriction."""

import numpy as np

from praag.demushkin import DemushkinForm, demushkin_cor_table, demushkin_suite, demushkin_symplectic_basis, standard_form
from praag.linalg import rank_mod_p

rng = np.random.default_rng(5)
p, d = 5, 6
m = rng.integers(0, p, (d, d))
while rank_mod_p(m, p) < d:
    m = rng.integers(0, p, (d, d))
f = DemushkinForm(p, m.T @ standard_form(d, p) @ m % p)
pm = demushkin_symplectic_basis(f)
print("random form B:\n", f.matrix)
print("P^T B P:\n", pm.T @ f.matrix @ pm % p)

t = demushkin_cor_table(3, 4)
print("\ncorestriction at p=3, d=4 (rows alpha_1..alpha_4):")
print("   ", t.y_names)
print(t.matrix)
print("rank", t.rank, " image = Ker(cup with alpha_1):", t.image_is_kernel)
print("warning:", t.warning)

r = demushkin_suite(2, 2)
print("\np=2, d=2:", {k: r[k] for k in ("symplectic_ok", "h2_exact", "y_count", "cor_rank")})
