"""The cyclotomic representation of 59_65 over Z/113 with m = 8 coset classes.

Powers of the smallest primitive root 3 sort the nonzero residues into eight
classes X_0..X_7 of fourteen elements.  Their sumsets are unions of whole
classes, the forbidden triples follow three simple index patterns, and the
grouping b = X_0, a = X_1..X_5, c = X_6 u X_7 verifies against 59_65.
"""

from relrep import (ElementSet, build_59_65_partition, build_scheme,
                    builtin_59_65, cayley_coloring, primitive_root, sumset,
                    verify_bruteforce, verify_sumsets)

print("smallest primitive root mod 113:", primitive_root(113))
scheme = build_scheme(113, 8)
print("coset sizes:", [len(c) for c in scheme.cosets],
      "| all symmetric:", scheme.symmetric)
print("X_0 =", sorted(scheme.cosets[0]))

forbidden = sorted(scheme.forbidden_multisets())
print(f"\nforbidden triples ({len(forbidden)}):")
print("  ", " ".join("".join(map(str, t)) for t in forbidden))
print("these are exactly [i,i,i], [i,i,i+6], [i,i,i+7] for each i mod 8")

part = build_59_65_partition(scheme)
g = scheme.group
a, b, c = (part.assignment[n] for n in ("a", "b", "c"))
full = ElementSet.full(g)
nonzero = full - ElementSet.singleton(g, 0)
print("\nthe six sumset identities:")
print("  A+A = Z/113:       ", sumset(a, a) == full)
print("  A+B = nonzero:     ", sumset(a, b) == nonzero)
print("  A+C = nonzero:     ", sumset(a, c) == nonzero)
print("  B+B = {0} u A:     ", sumset(b, b) == ElementSet.singleton(g, 0) | a)
print("  B+C = A u C:       ", sumset(b, c) == a | c)
print("  C+C = Z/113:       ", sumset(c, c) == full)

print("\nsumset verifier:   ", verify_sumsets(builtin_59_65(), part).verdict)
print("brute-force verifier:",
      verify_bruteforce(builtin_59_65(), cayley_coloring(part)).verdict)

other = build_scheme(113, 8, g=27)  # 27 = 3^3 is also primitive
print("\nwith generator 27 the indexing shifts but the shape count stays:",
      len(other.forbidden_multisets()), "forbidden triples")
