#!/usr/bin/env python3
"""Glue rooted flags and expand the products over the 26 classes.

Each family holds eight 4-vertex flags with two roots; gluing two flags
along their roots yields a 6-vertex pattern whose conditional density in
each class representative is an exact rational with denominator 72.  These
72 expansion tables are the combinatorial heart of the certificate.
"""

from flagcert import builtin
from flagcert.certificate import expand_in_classes, flag_product

table = builtin.class_table()
red = builtin.red_flags()
blue = builtin.blue_flags()

print("red family, selected products:")
for i, j in ((1, 1), (2, 7), (3, 5)):
    product = flag_product(red[i - 1], red[j - 1])
    expansion = expand_in_classes(product, table)
    terms = ", ".join(
        f"{int(72 * v)}/72 d(J{l})" for l, v in expansion.items() if v
    )
    print(f"  R{i}.R{j}  ({product.edge_count} edges):  {terms}")

print("\nblue family mirrors the red one through the colour swap:")
for i, j in ((8, 8), (2, 7)):
    product = flag_product(blue[i - 1], blue[j - 1])
    expansion = expand_in_classes(product, table)
    terms = ", ".join(
        f"{int(72 * v)}/72 d(J{l})" for l, v in expansion.items() if v
    )
    print(f"  B{i}.B{j}:  {terms}")

print("\ngluing flags with clashing root edges is refused:")
try:
    flag_product(red[0], blue[0])
except ValueError as exc:
    print(f"  ValueError: {exc}")
