"""
Checking against explicit matrices
==================================

For small n the orbit can be found by brute force: build a nilpotent
matrix for every partition, measure how fast ad(x) dies, and keep the
largest orbit that fits. All arithmetic is exact.
"""

# %%
from orbitq.oracle import measure, max_orbit_in_Nq
from orbitq.orbits import orbit_q_classical
from orbitq.partitions import ClassicalFamily, family_partitions

fam = ClassicalFamily("SO", 9)
for p in family_partitions(fam):
    m = measure(fam, p)
    print(f"{str(p):14s} dim {m.orbit_dim:3d}  ad order {m.ad_order:2d}  little order {m.little_order}")

# %%
# For each q the brute-force maximum matches the closed-form answer.
for q in range(1, 11):
    case = "principal" if q % 2 else "coprincipal"
    top = max_orbit_in_Nq(fam, q, case)
    print(q, case, top.partition, orbit_q_classical(fam, q, case).orbit.partition)

# %%
# The affine side: at an admissible level the integral roots of the
# affine weight are carried to those of k Lambda_0 by a translation.
from orbitq.affine import verify_prop_2_4
from orbitq.rootsys import CartanType

rep = verify_prop_2_4(CartanType("G", 2), 7, 3)
for name, ok in rep.checks.items():
    print(f"{name:28s} {ok}")
