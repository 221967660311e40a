"""
Counting AvN triples three ways
===============================

The column-pattern DP, the suffix-pruned listing, and the closed formula.
They agree for three and four qubits and split from five on.
"""

import time

from avnkit.triples import COLUMNS, count_formula, count_structured, enumerate_triples

# 40 columns have two equal letters; 18 of them move a parity count
print(len(COLUMNS), sum(1 for *_, bits in COLUMNS if bits))

for n in (3, 4, 5):
    start = time.perf_counter()
    listed = sum(1 for _ in enumerate_triples(n))
    elapsed = time.perf_counter() - start
    print(f"n={n}: listed={listed} ({elapsed:.2f}s) dp={count_structured(n)} formula={count_formula(n) // 8}")

# larger n: only the DP and the formula are feasible
for n in range(6, 11):
    dp, formula = count_structured(n), count_formula(n) // 8
    print(f"n={n}: dp={dp} formula={formula} ratio={dp / formula:.4f}")

# the first few triples in canonical order
for t in list(enumerate_triples(3))[:5]:
    print(t.format(), t.counts())
