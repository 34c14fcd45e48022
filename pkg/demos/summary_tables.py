"""
Summary tables for small degrees
================================

Enumerates S_1 .. S_N (default N = 5; pass 6 for the larger run, about
fifteen seconds) and prints every summary table: counts, dead ends, sizes,
diameters, symmetry groups and incremental sets.
"""

import sys
import time

from indgen import analyze_database, enumerate_classes
from indgen.render import all_tables, render

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 5

dbs = {}
for n in range(1, n_max + 1):
    t = time.perf_counter()
    dbs[n] = analyze_database(enumerate_classes(n))
    print(f"S_{n}: {dbs[n].class_count} classes in {time.perf_counter() - t:.1f}s")
print()

print(render(all_tables(dbs), "text"))
