"""Gorenstein quotients from four cubics with linear syzygies.

Walks through the H_1 construction on the Betti data 3^4 / 4^3, first in four
variables (Artinian A) and then in six (A defines a curve).
"""

from gorenstein_families import (
    Codim2Data,
    ConstructionSpec,
    artinian_profile,
    family_dim_h1_mu4,
    mapping_cone_resolution,
    minimality_flag,
    scheme_profile,
)
from gorenstein_families.families import stratum_codim_h1_mu4


def show_resolution(res):
    for k, row in enumerate(res.table()):
        print(f"  F{k}: " + " + ".join(f"R({a})^{n}" for a, n in row))


B4 = Codim2Data(4, (3,) * 4, (4,) * 3)
print("B = R/I in 4 variables, I generated by 4 cubics with 3 linear relations")
for s in range(-1, 4):
    r = family_dim_h1_mu4(B4, s)
    res = mapping_cone_resolution(B4, ConstructionSpec("h1_mu4", s))
    p = artinian_profile(res)
    print(f"s={s:>2}  dim={r.dimension:>3}  codim={r.stratum_codim}  "
          f"socle={p.socle_degree}  {minimality_flag(res)}")
    print("       h =", " ".join(map(str, p.h_vector)))

print("\nresolution of A at s=1")
show_resolution(mapping_cone_resolution(B4, ConstructionSpec("h1_mu4", 1)))

B6 = Codim2Data(6, (3,) * 4, (4,) * 3)
print("\nsame Betti data in 6 variables: A defines a curve")
for s in (-2, -1, 0, 1):
    r = family_dim_h1_mu4(B6, s)
    print(f"s={s:>2}  dim={r.dimension}  stratum codim={stratum_codim_h1_mu4(B6, s)}")
p = scheme_profile(mapping_cone_resolution(B6, ConstructionSpec("h1_mu4", 0)))
print(f"s=0: degree {p.degree}, arithmetic genus {p.genus}, Hilbert polynomial {p.hilbert_polynomial}")
