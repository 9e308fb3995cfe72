"""Walk the (g,r,d) = (11,2,12) L-tableau through width adjustment, purple tableau and RSK."""

from tevrsk.ltab import LTableau, L_to_word, phi, psi, validate_L
from tevrsk.params import Params
from tevrsk.rsk import rsk

p = Params(11, 2, 12)
L = LTableau(
    p,
    ((1, 1, 1, 2, 3), (2, 2), (3,)),
    ((8, 6, 5, 3, 2), (11, 10, 9, 7, 6, 4, 3, 1), (11, 10, 9, 8, 7, 5, 4, 2, 1)),
)
print("L-tableau (red entries primed):")
print(L)
print("constrained:", validate_L(L))
print("psi(B):", psi(L.blue_tableau(), p))
print("phi(R):", phi(L.red_tableau(), p.g, p.r))
w = L_to_word(L)
print("word:  ", ",".join(map(str, w)))
print("rsk:   ", rsk(w))
