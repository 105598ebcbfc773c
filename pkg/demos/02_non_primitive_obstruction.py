# A negative certificate: P(-5,7,25).
#
# If <u, v> were a free factor, every element of every Nielsen equivalent
# pair would be primitive in the free group on the letters it uses.  One
# Nielsen move on the rewritten H generators turns up x4^3 x0^-2.  Its
# abelianization (-2, 3) is unimodular, so homology cannot see the problem,
# but Whitehead reduction stalls at length 5 instead of reaching a letter.

from pretzelknots import WordPair, boundary_generators, parse_knot
from pretzelknots.freefactor import decide_in_ambient
from pretzelknots.nielsen import is_primitive_small, whitehead_minimize
from pretzelknots.words import Word

J = parse_knot("P(-5,7,25)")
X, H, K = boundary_generators(J)
v = decide_in_ambient(H)
print(J, v.outcome.value)
for k, val in v.witness.items():
    print("   ", k, "=", val)

u, w = v.gens
pair = WordPair(u, w).replay(v.witness["moves"])
el = pair.words()[v.witness["element_index"]]
print("element", el, " primitive?", is_primitive_small(el))
core, autos = whitehead_minimize(el.seq)
print("Whitehead minimal length", len(core))

# the same test on a few rank 2 words for comparison
B = el.alphabet
for s in ["x0 x4", "x4^2 x0", "x4 x0^5 x4 x0^6", "x4^3 x0^-2", "x4^2 x0^2"]:
    print(f"   {s:18s}", is_primitive_small(Word.parse(B, s)))
