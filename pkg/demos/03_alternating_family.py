# Higher genus: P(3,-3,...,3,-3,2r+1) with k copies of (3,-3).
#
# The Alexander polynomial is (t-2)^k (2t-1)^k for every r, so |Delta(0)| = 2^k
# is a prime power, and the roots 2 and 1/2 are real and positive.

import numpy as np

from pretzelknots import PretzelKnot, analyze

print(" k  r   index  Delta                      ffp        rtfn    biorder")
for k in (1, 2, 3):
    for r in (1, 2, 5):
        rep = analyze(PretzelKnot.alternating_family(k, r))
        print(f"{k:2d} {r:2d} {rep.index:6d}  {str(rep.alexander):26s} "
              f"{rep.ffp_overall.value:10s} {rep.rtfn.value:7s} {rep.biorder.value}")

# the roots, numerically
for k in (1, 2, 3):
    rep = analyze(PretzelKnot.alternating_family(k, 1))
    roots = np.roots(rep.alexander[::-1])
    print(k, np.round(np.sort(roots.real), 6))
