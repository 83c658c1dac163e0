"""
Direct products of blocks
=========================

B1 ⊗ B2 is a block of G1 × G2 with Kronecker-product Cartan matrix.
Tensor powers of the A5 block show why the l(B) factor in the local bound
cannot be dropped.
"""

from blockverify import block_product, load_corpus, tensor_power
from blockverify.checkers import local_conjecture, no_lb_factor
from blockverify.model import dim_b

a5 = load_corpus()["a5_p2"].record

# %%
print("A5 x A5: dim", dim_b(block_product(a5, a5)))

# %%
# dim B^(n) / |D^(n)| = 11^n, Σφ² = 9^n, so the bound without l(B) fails
# for every n while the local bound holds.
for n in range(1, 6):
    b = tensor_power(a5, n)
    bad, good = no_lb_factor(b), local_conjecture(b)
    print(f"n={n}: {bad.lhs} > {bad.rhs};  local {float(good.lhs):.2f} <= {good.rhs}")
