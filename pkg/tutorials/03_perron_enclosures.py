"""
Certified bounds on the Perron root
===================================

ρ(C) is usually irrational, so it only ever enters a verdict through a
rational interval that provably contains it.
"""

import numpy as np

from blockverify import IntMatrix, pf_enclosure, rayleigh, spectral_chain_check
from blockverify.records import load_corpus

c = IntMatrix.from_rows([[4, 2, 2], [2, 2, 1], [2, 1, 2]])

# %%
# Collatz-Wielandt bounds from exact integer power iteration.
enc = pf_enclosure(c)
print(f"rho in [{float(enc.lower):.9f}, {float(enc.upper):.9f}] after {enc.iterations} steps")

# %%
# A floating-point eigensolver agrees, but only the enclosure is a proof.
print("numpy:", np.linalg.eigvalsh(np.array(c.to_lists(), dtype=float)).max())
print("(7 + sqrt 33)/2 =", (7 + 33 ** 0.5) / 2)

# %%
# The Rayleigh quotient at the Brauer degrees is a lower bound for ρ.
# Its numerator is dim B.
print("Rayleigh at (1,2,2):", rayleigh(c, (1, 2, 2)))

# %%
# The spectral chain on a real record.  Each ρ that sits on the small side
# of an inequality is replaced by the upper end of the enclosure.
for v in spectral_chain_check(load_corpus()["a7_p3"].record):
    print(v.check_id, float(v.lhs), "<=", float(v.rhs))

# %%
# A coarser tolerance gives a wider interval containing the finer one.
coarse = pf_enclosure(c, tolerance=1)
print(coarse.lower <= enc.lower <= enc.upper <= coarse.upper)
