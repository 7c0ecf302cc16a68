#!/usr/bin/env python3
"""Classify the 512 red/blue colourings of the 3+3 bipartite template.

Walks through the first capability of the library: enumerating every
colouring of the template, grouping them into isomorphism classes under the
72 underlying symmetries, and reading off automorphism counts and
multiplicities.  Also prints the involution that swapping the two colours
induces on class indices; note it is not a simple reversal of the ordering.
"""

from flagcert import builtin

table = builtin.class_table()

print(f"template pairs: {builtin.template().edge_count}")
print(f"colourings: {sum(e.multiplicity for e in table.classes)}")
print(f"classes up to isomorphism: {len(table)}")
print()
print("index  aut  multiplicity  blue edges")
for entry in table.classes:
    blues = sum(1 for _, _, c in entry.representative.edges if c.value == "B")
    print(f"  J{entry.index:<4} {entry.aut_count:>3}  {entry.multiplicity:>12}  {blues:>10}")

print()
print("colour-swap involution on class indices:")
involution = table.swap_involution()
for k in sorted(involution):
    if k <= involution[k]:
        print(f"  J{k} <-> J{involution[k]}")
