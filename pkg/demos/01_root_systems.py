"""
Root systems, heights and exponents
===================================

A tour of the root system layer: building a system from its Cartan type,
reading off rho, the Coxeter numbers and the exponents, and comparing a
type with its Langlands dual.
"""

# %%
# Build a root system. Roots are integer tuples over the simple roots.
from orbitq.rootsys import CartanType, build, langlands_dual

rs = build(CartanType.parse("F4"))
print(rs.cartan_type, "rank", rs.rank, "dim", rs.dim, "positive roots", len(rs.positive_roots))
print("highest root", rs.theta, "highest short root", rs.theta_short)
print("h =", rs.coxeter_number, " dual h =", rs.dual_coxeter_number, " lacing =", rs.lacing)

# %%
# Heights. Counting positive roots by height gives a partition whose dual
# is the list of exponents.
mult = rs.height_multiplicities()
print("roots per height:", mult)
print("exponents:", rs.exponents())

# %%
# The dual of B_n is C_n. Both have the same number of roots of each
# coroot height, which is why the centralizer dimensions agree.
from orbitq.ekv import d_via_heights

b, c = build(CartanType("B", 5)), build(langlands_dual(CartanType("B", 5)))
for q in range(1, 12):
    print(q, d_via_heights(b, q), d_via_heights(c, q))
