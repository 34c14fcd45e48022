"""
Semigroup closure and independence
==================================

Generating as a semigroup means multiplying only; inverses are never added
by hand.  In a finite group this still reaches the inverses, but the empty
set generates nothing at all, so even ``{()}`` counts as independent.
"""

from indgen import PermSet, close, classify, folklore, is_independent, order, parse_cycles

# A single 3-cycle generates the cyclic group of order 3.
m = close([parse_cycles("(1,2,3)", 3)], 3)
print("<(1,2,3)> has", order(m), "elements:", [str(p) for p in m.perms()])

# The empty set generates the empty semigroup.
print("<{}> has", order(close([], 3)), "elements")

# Independence: no member is generated by the others.
for texts in (["()"], ["()", "(1,2)"], ["(1,2)", "(1,2,3)"], ["(1,2)", "(2,3)", "(1,3)"]):
    print(f"{{{', '.join(texts)}}} independent: {is_independent(PermSet.parse(texts, 3))}")

# The classical generating sets of S_5.  All transpositions generate but
# are far from independent; the other three are independent generating sets.
for kind in ("all_transpositions", "base_point", "chain", "cycle_and_transposition"):
    A = folklore(kind, 5)
    c = classify(A)
    print(f"{kind:24s} size {len(A):2d}  independent={c.independent}  generating={c.generating}")

# A maximal independent set that fails to generate: a dead end of S_4.
c = classify(PermSet.parse(["(1,3)", "(1,2,3,4)"], 4))
print("{(1,3), (1,2,3,4)}:", c)
