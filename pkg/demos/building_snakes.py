#!/usr/bin/env python3
"""Build cyclic Chebyshev snakes and look at their structure.

A snake is a cyclic Gray code over permutations, driven entirely by
push-to-the-top moves, in which every pair of codewords differs by at
least 2 somewhere (max coordinate difference).  Such a code detects one
limited-magnitude spike error in a rank-modulated flash block.
"""
from permsnake import (
    size_table,
    snake_from_rmgc,
    snake_upper_bound,
    verify_code,
)

print("== sizes reachable by the RMGC-block construction ==")
print(f"{'n':>3} {'size':>8} {'bound':>8}   size/bound")
for n in range(6, 11):
    t = size_table(n)
    print(f"{n:>3} {t.m1:>8} {t.bound:>8}   {t.m1 / t.bound:.3f}")

print()
print("== n=6: the whole snake, block by block ==")
code = snake_from_rmgc(6)
print(f"size {code.size}, start {code.start}, cyclic={code.cyclic}")
cw = code.codewords()

# Blocks have size 3!+3 = 9.  Between blocks, one boundary push moves an
# odd value to the front; inside a block only the front evens move.
for l in range(6):
    first, last = cw[9 * l], cw[9 * l + 8]
    print(f"block {l}: {first} ... {last}")
print(f"closure: the final push returns to {code.start}")

print()
print("== full verification ==")
report = verify_code(code)
print(report.render())

print()
print("== every size stays under the packing bound ==")
for n in (6, 7, 8, 9):
    c = snake_from_rmgc(n)
    print(f"n={n}: size {c.size:>6} <= bound {snake_upper_bound(n)}")
