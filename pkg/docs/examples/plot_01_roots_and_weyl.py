"""
Root systems and Weyl groups
============================

Build a root system from its type, list the positive roots, and walk the
Weyl group.  Indices are Bourbaki labels, starting at 1.
"""

import numpy as np

from twistfiber import build
from twistfiber.weylgroup import enumerate_group, from_word, group_order, min_coset_reps

# B3: alpha_3 is the short simple root
rs = build("B", 3)
print(rs.label)
print(rs.cartan)
print("positive roots:", rs.num_positive_roots, "highest:", rs.highest_root)

# reduced words are canonical (lexicographically least)
w = from_word(rs, [3, 2, 3, 2])
print("s3 s2 s3 s2 =", w, "length", w.length)

# Poincare data: how many elements have each length
lengths = np.bincount([u.length for u in enumerate_group(rs)])
print("|W| =", group_order(rs), "by length:", lengths.tolist())

# minimal coset representatives of W / W_J
reps = min_coset_reps(rs, [1, 2])
print("|W^{1,2}| =", len(reps), [str(u) for u in reps])
