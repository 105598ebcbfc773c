# Walk through one positive certificate by hand: P(-5,7,9).
#
# The Seifert surface complement has free fundamental group X = <a, b>.
# Pushing the surface group off in the two normal directions gives two
# subgroups H and K of X.  Each lives inside the kernel of X -> H_1, and we
# want to know if it is a free factor of that kernel.

from pretzelknots import (
    analyze, boundary_generators, from_generators, parse_knot, rewrite, seifert_matrices,
)
from pretzelknots.freefactor import decide_in_ambient, replay

J = parse_knot("P(-5,7,9)")
print(J, "  (p, q, r) =", (J.p, J.q, J.r))

X, H, K = boundary_generators(J)
print("H generated by", [str(w) for w in H])
print("K generated by", [str(w) for w in K])

# the abelianized generators are the Seifert matrix rows
S, ST = seifert_matrices(J)
print("S+ =", S.tolist(), " S- =", ST.tolist())

# H[X,X] = kernel of X -> Z^2 / rowspace(S+), index |det S+| = 4
sys = from_generators(X, H)
print("index", sys.index, " rank", sys.rank)
for line in sys.describe():
    print("   ", line)

print("H in the Schreier basis:")
for w in H:
    print("   ", w, "->", rewrite(sys, w))

# decide: the witness names the basis letters H replaces
v = decide_in_ambient(H)
print(v.outcome.value, v.witness)
print("replays:", replay(v))

# and the whole chain of conclusions
rep = analyze(J)
print(rep.ffp_overall.value, rep.rtfn.value, rep.biorder.value)
print(rep.biorder_reason)
