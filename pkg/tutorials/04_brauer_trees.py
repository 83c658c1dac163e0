"""
Blocks with cyclic defect group
===============================

The Cartan matrix of a cyclic block is determined by its Brauer tree.
The star with exceptional centre dominates every other tree entrywise.
"""

from blockverify import BrauerTree, cartan_from_tree, cyclic_inequality, is_star, tree_suite
from blockverify.linalg import det

# %%
# Three edges at an exceptional vertex of multiplicity 2, so |D| = 7.
star = BrauerTree.star(3, 2)
print(cartan_from_tree(star).to_lists(), "det", det(cartan_from_tree(star)))

# %%
# A path with the exceptional vertex at one end has the same e and m.
path = BrauerTree.path(3, 2, exceptional_index=0)
print(cartan_from_tree(path).to_lists(), "star:", is_star(path))

# %%
# The cyclic bound dim B / |D| <= Σφ(1)² is tight for the star with equal
# degrees and strict otherwise.
for tree in (star, path):
    for degrees in ((1, 1, 1), (1, 2, 1)):
        v = cyclic_inequality(tree, degrees)
        print(f"star={is_star(tree)} degrees={degrees}: {v.lhs} <= {v.rhs}, equality={v.equality}")

# %%
# Trees can also be given as vertex and edge lists.  Edge order is the row
# order of the Cartan matrix.
tree = BrauerTree(("a", "b", "c", "d"), (("a", "b"), ("b", "c"), ("b", "d")), "b", 2)
for v in tree_suite(tree, (1, 1, 1)).verdicts:
    print(v.check_id, v.lhs, "<=", v.rhs)
