"""
The orbit O_q and the integral root count
=========================================

For each q we pick out the nilpotent orbit O_q and check that its
dimension equals dim N minus the number of roots integral for lambda_q.
"""

# %%
from orbitq.integral_roots import count_by_heights, count_by_pairing, lambda_q, var_dim_joseph
from orbitq.orbits import orbit_q
from orbitq.rootsys import CartanType, build

ct = CartanType.parse("E7")
rs = build(ct)
print(f"{ct}: dim N = {rs.dim_nilcone}")
for q in range(2, 20):
    res = orbit_q(ct, q)
    print(f"q={q:2d}  {res.label:10s} dim {res.dim:3d}   Joseph {var_dim_joseph(ct, q):3d}")

# %%
# The integral count can be read off in two ways, from exact pairings
# with lambda_q + rho or from heights of coroots. They always agree.
lq = lambda_q(CartanType.parse("B4"), 4)
print(lq.case_tag, count_by_pairing(lq), count_by_heights(lq))

# %%
# Classical types work through partitions. In sl(7) with q = 3 the orbit
# has Jordan type (3,3,1).
ct = CartanType("A", 6)
res = orbit_q(ct, 3)
print(res.label, res.dim, var_dim_joseph(ct, 3))

# %%
# The same data for a whole family, checked record by record.
from orbitq.cli import run_verify

report = run_verify([CartanType("C", r) for r in range(2, 7)])
print(report.summary)
