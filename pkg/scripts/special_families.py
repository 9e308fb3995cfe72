"""Closed-form families: large degree, d = rg, Catalan (r = 1), monotonicity in d."""

from tevrsk.closed_forms import catalan, lattice_paths_r1
from tevrsk.params import Params, is_valid
from tevrsk.words import tev_words

print("Catalan family r=1, d=g/2+1")
for g in range(2, 15, 2):
    p = Params(g, 1, g // 2 + 1)
    print(f"  g={g:>2}: tev={tev_words(p):>5}  C_{g // 2}={catalan(g // 2):>5}  paths={lattice_paths_r1(g, p.d):>5}")

print("\nd = rg: tev vs (r+1)^g - n")
for r in (1, 2, 3):
    for g in range(1, 7):
        p = Params(g, r, r * g)
        print(f"  r={r} g={g}: tev={tev_words(p):>5}  formula={(r + 1) ** g - p.n:>5}")

print("\nMonotone chains tev(g, n, d) <= tev(g, n+r+1, d+r), r=2, g=6")
g, r = 6, 2
chain = [(d, tev_words(Params(g, r, d))) for d in range(r, r * (g + 2) + 1, r) if is_valid(g, r, d)]
print("  " + "  ".join(f"d={d}:{t}" for d, t in chain))
