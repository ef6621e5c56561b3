# # Binomial Toeplitz matrices
#
# T_{n,m,k} has (i, j) entry C(n, k + j - i). Its determinant counts plane
# partitions in an m x k x (n - k) box, so it never vanishes.

from monolef import toeplitz_invertible, toeplitz_matrix, two_var_cross_oracle
from monolef.toeplitz import two_variable_ideal, two_variable_matrix

for row in toeplitz_matrix(5, 3, 2):
    print(row)
print(toeplitz_invertible(5, 3, 2))

# ## The same matrix as a multiplication map
#
# x (x + y)^n between two graded pieces of a two-variable quotient. Graded-lex
# bases give the transpose; reading both bases backwards gives T itself.

print(two_variable_ideal(5, 3, 2))
for row in two_variable_matrix(5, 3, 2):
    print(row)

print(all(two_var_cross_oracle(n, m, k) for n in range(1, 9) for m in range(1, 9) for k in range(n + 1)))
