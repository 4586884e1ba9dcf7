"""Skein-computed polynomial invariants of the underlying smooth links.

Homfly satisfies v^{-1} P(L+) - v P(L-) = z P(L0); the Dubrovnik flavor
of the Kauffman polynomial is reported in the same variable convention,
a = v^{-1}.  All arithmetic is exact.
"""

from legfronts import corpus, front_to_diagram, homfly, kauffman_dubrovnik, seifert_diagram_genus
from legfronts.laurent import conway, profile

for name in ("unknot", "trefoil", "51", "trefoil_sum"):
    d = front_to_diagram(corpus.load(name))
    p = homfly(d)
    prof = profile(p)
    print(f"{name}:")
    print(f"   homfly   = {p}")
    print(f"   kauffman = {kauffman_dubrovnik(d)}")
    print(f"   conway   = {conway(p)}")
    print(f"   e = {prof.e}, M = {prof.M}, Seifert genus of this diagram = "
          f"{seifert_diagram_genus(d)}")
    print()

d = front_to_diagram(corpus.load("unlink2"))
print("the 2-component unlink shows the base cases:")
print("   homfly   =", homfly(d), "  (this is (v^-1 - v)/z)")
print("   kauffman =", kauffman_dubrovnik(d))
print("   conway   =", conway(homfly(d)), "  (split links have vanishing Conway polynomial)")
