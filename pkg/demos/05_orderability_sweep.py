# Orderability along a sweep, and the examples where bi-orderability of the
# knot group and left-orderability of the double branched cover coexist.

from collections import Counter

from pretzelknots.classify import sweep_rows

counts = Counter()
both = []
for p in (-3, -4, -5):
    for q, r, rep in sweep_rows(p, 6, 12):
        counts[(p, rep.biorder.value)] += 1
        if rep.biorder.value == "BiOrderable" and rep.sigma2_lo.value == "Yes":
            both.append(rep.knot.name)

for key in sorted(counts):
    print(key, counts[key])
print("bi-orderable with left-orderable double branched cover:")
print("   ", ", ".join(both))
