"""Sections of the normal module of three quadrics in six variables.

B has Betti data 2^3 / 3^2 (a threefold of degree 3).  Regular sections of
N_B(s) give AG curves; the exact formula needs s >= 5, below that the
dimension is only bounded unless ext^2 vanishing is assumed.
"""

from gorenstein_families import Codim2Data, ConstructionSpec, family_dim_nb, mapping_cone_resolution, scheme_profile
from gorenstein_families.errors import is_known

B = Codim2Data(6, (2, 2, 2), (3, 3))

for s in range(3, 9):
    r = family_dim_nb(B, s)
    if isinstance(r.dimension, tuple):
        lo, hi = r.dimension
        shown = f"<= {hi}" if not is_known(lo) else f"{lo}..{hi}"
    else:
        shown = str(r.dimension)
    p = scheme_profile(mapping_cone_resolution(B, ConstructionSpec("nb", s)))
    print(f"s={s}  dim {shown:>6}  (ext2=0: {family_dim_nb(B, s, assume_ext2_zero=True).dimension:>4})"
          f"  curve of degree {p.degree}, genus {p.genus}")

r = family_dim_nb(B, 4)
print("\nbreakdown at s=4")
for k, v in r.breakdown.items():
    print(f"  {k:<24} {v}")
for note in r.notes:
    print("  note:", note)
