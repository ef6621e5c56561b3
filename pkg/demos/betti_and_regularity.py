# # Betti tables from the lcm lattice
#
# Each multigraded Betti number is the reduced homology of a small simplicial
# complex living at an lcm of generators. Summing by total degree gives the
# graded table.

from monolef import betti_table, hilbert_function, linear_steps, parse_gens, regularity
from monolef.resolution import euler_identity_holds, lcm_multidegrees

ideal = parse_gens("x^3, y^3, z^3, x*y^2, x^2*y, x*z^2, x^2*z, y^2*z, y*z^2", 3)
B = betti_table(ideal)
print(B.pretty())

# Linear for two steps, one step short of a linear resolution.

print("linear steps:", linear_steps(B))
print("regularity:", regularity(ideal, B), "| top Hilbert degree:", len(hilbert_function(ideal)) - 2)

# The alternating sum of the table is the Hilbert series times (1 - t)^3.

print("Euler identity:", euler_identity_holds(B, hilbert_function(ideal)))

# ## Where the homology lives

for (i, b), v in sorted(B.multigraded.items()):
    print(i, b, v)
print(len(lcm_multidegrees(ideal)), "lcm multidegrees")
