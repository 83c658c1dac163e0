"""
Exact integer linear algebra for Cartan matrices
=================================================

Every verdict is an exact comparison, so the matrix layer works over the
integers: Bareiss determinants, Sylvester's criterion and Smith forms.
"""

from blockverify import IntMatrix, det, hadamard_and_amgm_check, is_positive_definite, smith_normal_form
from blockverify.linalg import leading_principal_minors

# %%
# A Cartan matrix is DᵀD for the decomposition matrix D.  For A5 at p = 2:
decomposition = [[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1]]
c = IntMatrix.gram(decomposition)
print(c.to_lists())

# %%
# Positive definiteness from the leading principal minors, all computed in
# one fraction-free elimination.
print("minors:", leading_principal_minors(c), "PD:", is_positive_definite(c))
print("[[1,2],[2,1]] PD:", is_positive_definite(IntMatrix.from_rows([[1, 2], [2, 1]])))

# %%
# The determinant of a block's Cartan matrix is a power of p, and the
# largest elementary divisor is |D|.
print("det:", det(c), "elementary divisors:", smith_normal_form(c))

# %%
# Hadamard's inequality and AM-GM on the eigenvalues, both root-free.
for v in hadamard_and_amgm_check(c):
    print(v.check_id, v.lhs, "<=", v.rhs)

# %%
# Bareiss keeps intermediate entries bounded, so Kronecker powers stay cheap.
big = c.kron(c).kron(c)
print(big.n, "x", big.n, "det = 4^27:", det(big) == 4 ** 27)
