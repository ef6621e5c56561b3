# # Where the weak Lefschetz property breaks
#
# The ideal (x1^3, x2^3, x3^3, x1*x2*x3) is the smallest monomial example
# whose quotient fails the WLP. We look at the failing map and at the
# inverse-system form that explains it.

from monolef import MonomialIdeal, hilbert_function, wlp_check
from monolef.lefschetz import canonical_form, multiplication_matrix

ideal = MonomialIdeal.from_gens([(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)])
print(ideal)
print("Hilbert function:", hilbert_function(ideal))

# ## Rank table of x l for l = x1 + x2 + x3

report = wlp_check(ideal, witnesses=True)
for cell in report.cells:
    print(f"degree {cell.j} -> {cell.j + 1}: {cell.src} x {cell.tgt}, rank {cell.rank}")
print("verdict:", report.verdict, "at", report.failure_degrees)

# The square map in the middle is the culprit.

for row in multiplication_matrix(ideal, 2, 1, canonical_form(3)):
    print(row)

# ## A form in the kernel of differentiation
#
# Every coefficient is +-1 and the signs alternate around the hexagon of
# degree-3 survivors.

(F,) = report.witnesses
print(F)

# A random form does no better: the failure is not an artifact of the
# canonical element.

print(wlp_check(ideal, mode="random", seed=1, trials=5).verdict)
