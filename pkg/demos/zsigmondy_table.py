"""Smallest primitive prime divisors of a^n - 1.

A dash marks the two kinds of exception: (2, 6), and n = 2 with a + 1 a
power of 2.
"""

from sylowgraph import zsigmondy

ns = range(2, 13)
print("a\\n " + "".join(f"{n:>8}" for n in ns))
for a in range(2, 11):
    row = [zsigmondy(a, n) for n in ns]
    print(f"{a:<4}" + "".join(f"{'-' if r is None else r:>8}" for r in row))

# bigger exponents go through a batched gcd and, when needed, ECM
for a, n in ((2, 101), (3, 60), (43, 23)):
    print(f"zsigmondy({a}, {n}) = {zsigmondy(a, n)}")
