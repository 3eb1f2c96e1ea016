"""The two builtin algebras and what their cycles demand of any representation.

Each algebra has atoms 1', a, b, c with every atom symmetric, so a diversity
cycle is just a multiset over {a, b, c}.  The required-profile view turns the
cycle set into concrete sumset equations a group representation must satisfy.
"""

from itertools import combinations_with_replacement

from relrep import builtin_52_65, builtin_59_65

for spec in (builtin_52_65(), builtin_59_65()):
    print(f"=== algebra {spec.label} ===")
    print("allowed cycles:  ", " ".join("".join(t) for t in spec.cycle_names()))
    print("forbidden cycles:", " ".join("".join(t) for t in spec.forbidden_cycle_names()))
    print("sumset profile required of a group partition {0} | A | B | C:")
    for j, k in combinations_with_replacement("abc", 2):
        profile, include_zero = spec.required_sumset_profile(j, k)
        parts = [a.name.upper() for a in sorted(profile)]
        if include_zero:
            parts.append("{0}")
        print(f"  {j.upper()} + {k.upper()} = {' u '.join(parts) if parts else 'empty'}")
    print()

# the same triple is accepted in any order
spec = builtin_52_65()
print("52_65 accepts acc in every order:",
      all(spec.is_cycle(*p) for p in (("a", "c", "c"), ("c", "a", "c"), ("c", "c", "a"))))
print("52_65 rejects bab (canonicalizes to the forbidden abb):",
      not spec.is_cycle("b", "a", "b"))
