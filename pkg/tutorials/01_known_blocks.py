"""
Checking the local and global bounds on blocks from the literature
===================================================================

The bundled corpus holds a handful of blocks whose numbers are classical.
Here we load three of them and run the full inequality suite.
"""

from blockverify import assess, load_corpus, run_suite
from blockverify.cli import render_text

corpus = load_corpus()

# %%
# A 2-block of the symmetric group S10 with defect group of order 8 and
# Brauer degrees 128 and 160.  The local bound holds but the strong
# (max-degree) version fails: 26112 > 25600.
entry = corpus["s10_p2"]
report = run_suite(entry.record)
local = report.verdict("local_conjecture")
strong = report.verdict("strong_local")
print(f"local:  {local.lhs} <= {local.rhs}  ({local.holds})")
print(f"strong: {strong.lhs} vs {strong.rhs}  ({strong.holds})")

# %%
# Corpus entries carry the failures the literature documents, so an
# assessment separates those from surprises.
assessment = assess(report, entry.record.p, entry.expected)
print("no unexpected failures:", assessment.ok)

# %%
# The principal 2-block of A5: dropping the l(B) factor breaks the bound,
# 44/4 = 11 > 9.
a5 = corpus["a5_p2"]
print(render_text(assess(run_suite(a5.record), 2, a5.expected).report, 2))

# %%
# The principal 3-block of A7: the projective cover of the trivial module
# has dimension 99 > 81 = |D|^2.
a7 = run_suite(corpus["a7_p3"].record)
v = a7.verdict("brauer_problem.projective_bound[0]")
print(f"Phi(1) = {v.lhs} > {v.rhs}")

# %%
# Group-level bounds need every block.  A5 at p = 2 has the principal block
# and one block of defect zero.
group = run_suite(corpus["a5_p2_group"].record)
for check_id in ("global_conjecture", "weak_global"):
    v = group.verdict(check_id)
    print(check_id, v.lhs, "<=", v.rhs)
