"""The probabilistic existence argument, made quantitative.

Points are n-subsets of a (3n-4)-set; a random equitable 3-coloring fails to
represent 52_65 with probability at most C(3n-4,n)^2 * 4^3 * (2/3)^((n-2)^2).
The worst composition need has exactly (n-2)^2 candidate witnesses, and the
bound dips below one at n = 13.
"""

from math import lgamma, log

from relrep import (JohnsonUniverse, acc_witness_family, classify,
                    minimal_sufficient_n, partition_count, probability_bound,
                    random_equitable_partition)

print(f"{'n':>3} {'C(3n-4,n)':>14} {'log10 bound':>12}  below one?")
for n in range(3, 17):
    r = probability_bound(n)
    print(f"{n:>3} {r.binomial:>14} {r.log_value / 2.302585092994046:>12.3f}  "
          f"{r.below_one}")
print("minimal sufficient n:", minimal_sufficient_n())

n = 13
u = JohnsonUniverse(n)
print(f"\nat n = {n} the universe has {u.size:,} points")
# the exact split count is far too large to materialize; estimate its size
digits = (lgamma(u.size + 1) - 2 * lgamma(u.size // 3 + 1)
          - lgamma(u.size - 2 * (u.size // 3) + 1) - log(2)) / log(10)
print(f"  equitable splits: roughly 10^{digits:.3e}")

x = tuple(range(13))
y = tuple(range(11, 24))
family = acc_witness_family(u, u.rank(x), u.rank(y))
print(f"worst-case witness family for |x n y| = 2: {len(family)} = (n-2)^2 points")

# at desk scale everything is exact
small = JohnsonUniverse(5)
print(f"\nn = 5 universe: {small.size} points; "
      f"exactly {partition_count(small.size):.4e} equitable splits")
part = random_equitable_partition(small, seed=1)
xr, yr = 0, small.size - 1
print(f"pair (0, {yr}) classifies as {classify(small, part, xr, yr)!r}")
