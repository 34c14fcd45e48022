"""
Slow generating sets
====================

The diameter of a generating set is the longest word needed to reach an
element of S_n, counting the identity as the empty word.  Here we look at
the slowest independent generating sets of S_4 and S_5 and at the word
length profile of two classical sets.
"""

from collections import Counter

from indgen import analyze_database, diameter, diameter_extremes, enumerate_classes, folklore, word_lengths

for n in (4, 5):
    ext = diameter_extremes(analyze_database(enumerate_classes(n)))
    print(f"S_{n}: diameters from {ext.min} to {ext.max}; slowest:", [str(A) for A in ext.argmax])

# Word-length profile: how many elements need k letters.
for kind in ("chain", "cycle_and_transposition"):
    A = folklore(kind, 5)
    profile = sorted(Counter(word_lengths(A.members, 5).values()).items())
    print(f"{kind:24s} diameter {diameter(A):2d}  profile {profile}")
