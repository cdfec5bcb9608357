"""Dimensions of families of Gorenstein quotients A of B cut out by regular sections.

Four constructions are supported, keyed by :class:`Kind`:

* ``K_SECTION``  0 -> K_B(-s) -> B -> A -> 0                         (rank 1)
* ``H1_MU4``     0 -> K_B(t-2s) -> H_1(-s) -> B -> A -> 0, mu = 4     (rank 2)
* ``NB``         0 -> K_B(N-2s) -> N_B(-s) -> B -> A -> 0             (rank 2)
* ``H1_MU5``     0 -> K_B(t-3s) -> H_2(-2s) -> H_1(-s) -> B -> A -> 0, mu = 5

Each ``family_dim_*`` returns a :class:`FamilyReport` whose ``breakdown`` lists
every summand of the dimension formula.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import codim2 as c2
from .codim2 import Codim2Data
from .errors import ConstructionMuMismatch, Indeterminate, WrongMu, is_known
from .graded import dim_polyring


class Kind(str, enum.Enum):
    K_SECTION = "k_section"
    H1_MU4 = "h1_mu4"
    H1_MU5 = "h1_mu5"
    NB = "nb"


_GENERALITY = "B general with respect to 0hom_R(I_B, I_{A/B})"
_REQUIRED_MU = {Kind.H1_MU4: 4, Kind.H1_MU5: 5}


@dataclass(frozen=True)
class ConstructionSpec:
    kind: Kind
    s: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))

    @property
    def rank(self) -> int:
        return {Kind.K_SECTION: 1, Kind.H1_MU4: 2, Kind.NB: 2, Kind.H1_MU5: 3}[self.kind]

    def twist(self, D: Codim2Data) -> int:
        """The t with wedge^r M = K_B(t) on the smooth locus (0 for K_SECTION)."""
        if self.kind is Kind.NB:
            return D.t_nb
        if self.kind is Kind.K_SECTION:
            return 0
        return D.t_h1

    def socle_twist(self, D: Codim2Data) -> int:
        """j with K_A = A(j)."""
        return self.rank * self.s - self.twist(D)

    def resolution_twist(self, D: Codim2Data) -> int:
        """b such that the last term of the resolution of A is R(b)."""
        return -self.socle_twist(D) - D.N

    def check(self, D: Codim2Data) -> None:
        need = _REQUIRED_MU.get(self.kind)
        if need is not None and D.mu != need:
            raise ConstructionMuMismatch(f"{self.kind.value} needs mu = {need}, data has mu = {D.mu}")


@dataclass(frozen=True)
class RegimeFlags:
    simplified_h1: bool
    codim_range: bool
    nb_exact: bool
    h2_zero: bool

    @classmethod
    def of(cls, D: Codim2Data, s: int) -> "RegimeFlags":
        mx2, mn2, mn1 = max(D.n2), min(D.n2), min(D.n1)
        return cls(
            simplified_h1=s > mx2 - mn2,
            codim_range=mx2 - 2 * mn1 < s <= mx2 - mn2,
            nb_exact=s > 2 * mx2 - mn1,
            h2_zero=2 * s > mx2 - 2 * mn2,
        )


@dataclass
class FamilyReport:
    construction: ConstructionSpec
    dimension: object  # int | (lo, hi) tuple | Indeterminate
    stratum_codim: object  # int | Indeterminate
    regime: RegimeFlags
    breakdown: dict = field(default_factory=dict)
    assumptions: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return isinstance(self.dimension, int)


def _sum_known(breakdown, signs):
    """Signed sum of breakdown entries, or Indeterminate naming the unknown terms."""
    unknown = [k for k in signs if not is_known(breakdown[k])]
    if unknown:
        return Indeterminate("unresolved: " + ", ".join(unknown))
    return sum(sign * breakdown[k] for k, sign in signs.items())


# -- rank two, M = H_1 ----------------------------------------------------------


def _require_mu(D, mu, what):
    if D.mu != mu:
        raise WrongMu(f"{what} needs mu = {mu}, data has mu = {D.mu}")


def hom_ib_iab_vanishes(D: Codim2Data, s: int) -> bool:
    """True when 0hom(I_B, I_{A/B}) = 0 follows from degrees alone (M = H_1).

    I_{A/B} is generated by the image of G_2(-s), so it vanishes through
    degree min n2 + s - 1; if that covers every generator degree of I_B, no
    degree-0 map I_B -> I_{A/B} survives.
    """
    return min(D.n2) + s > max(D.n1)


def stratum_codim_h1_mu4(D: Codim2Data, s: int):
    _require_mu(D, 4, "stratum_codim_h1_mu4")
    flags = RegimeFlags.of(D, s)
    if flags.simplified_h1:
        return 0
    if flags.codim_range:
        return dim_polyring(D.N, -s)
    return Indeterminate(f"s = {s} is outside the range where im(beta) = 0 is known")


def family_dim_h1_mu4(D: Codim2Data, s: int) -> FamilyReport:
    _require_mu(D, 4, "family_dim_h1_mu4")
    t = D.t_h1
    bd = {
        "dim(N_B)_0": c2.normal_dims(D)(0),
        "dim(H_1*)_s": c2.h1_dual_dims(D)(s),
        "one": 1,
        "0hom(S2H_1,K_B(t))": c2.hom_s2h1_canonical_dims(D)(0),
        "dim(K_B)_{t-2s}": c2.canonical_dims(D)(t - 2 * s),
        "delta(K_B)_{t-2s}": c2.delta_canonical(D, t, -2 * s),
        "delta(H_1)_{-s}": c2.delta_h1(D, -s),
    }
    dim = _sum_known(
        bd,
        {
            "dim(N_B)_0": 1,
            "dim(H_1*)_s": 1,
            "one": -1,
            "0hom(S2H_1,K_B(t))": -1,
            "dim(K_B)_{t-2s}": 1,
            "delta(K_B)_{t-2s}": 1,
            "delta(H_1)_{-s}": -1,
        },
    )
    flags = RegimeFlags.of(D, s)
    report = FamilyReport(
        ConstructionSpec(Kind.H1_MU4, s), dim, stratum_codim_h1_mu4(D, s), flags, bd,
        ["U = Proj(B) - Z is l.c.i.", "depth_{I(Z)} B >= 2"],
    )
    if flags.simplified_h1:
        short = bd["dim(N_B)_0"] + bd["dim(H_1*)_s"] - 1 - bd["0hom(S2H_1,K_B(t))"]
        if short != dim:
            report.notes.append(f"short formula gives {short}, full formula {dim}")
    elif flags.codim_range and not hom_ib_iab_vanishes(D, s):
        report.assumptions.append(_GENERALITY)
    return report


# -- rank three, M = H_1 with mu = 5 ---------------------------------------------


def family_dim_h1_mu5(D: Codim2Data, s: int) -> FamilyReport:
    _require_mu(D, 5, "family_dim_h1_mu5")
    t = D.t_h1
    d_h1 = c2.delta_h1(D, -s)
    d_k = c2.delta_canonical(D, t, -3 * s)
    d_h2 = c2.delta_h2(D, -2 * s)
    bd = {
        "dim(N_B)_0": c2.normal_dims(D)(0),
        "dim(H_1*)_s": c2.h1_dual_dims(D)(s),
        "_{-s}hom(S2H_1,K_B(t))": c2.hom_s2h1_canonical_dims(D)(-s),
        "0hom(H_1,H_1)": c2.hom_h1_h1_deg0(D),
        "dim(K_B)_{t-3s}": c2.canonical_dims(D)(t - 3 * s),
        "delta(H_1)_{-s}": d_h1,
        "delta(K_B)_{t-3s}": d_k,
        "delta(H_2)_{-2s}": d_h2,
    }
    delta = _sum_known(bd, {"delta(H_1)_{-s}": 1, "delta(K_B)_{t-3s}": 1, "delta(H_2)_{-2s}": -1})
    bd["delta"] = delta
    dim = _sum_known(
        bd,
        {
            "dim(N_B)_0": 1,
            "dim(H_1*)_s": 1,
            "_{-s}hom(S2H_1,K_B(t))": 1,
            "0hom(H_1,H_1)": -1,
            "dim(K_B)_{t-3s}": -1,
            "delta": -1,
        },
    )
    flags = RegimeFlags.of(D, s)
    if flags.simplified_h1 or (flags.codim_range and flags.h2_zero):
        # Ext^1(I/I^2, H_2)_{-2s} = 0 here, so beta has zero image
        codim = c2.ext1_conormal_h1(D, s)
    else:
        codim = Indeterminate(f"stratum codimension undetermined at s = {s}")
    report = FamilyReport(
        ConstructionSpec(Kind.H1_MU5, s), dim, codim, flags, bd,
        ["U = Proj(B) - Z is l.c.i.", "depth_{I(Z)} B >= 3", "char k != 2"],
    )
    if is_known(codim) and not flags.simplified_h1 and not hom_ib_iab_vanishes(D, s):
        report.assumptions.append(_GENERALITY)
    return report


# -- rank two, M = N_B ----------------------------------------------------------


def nb_exact_value(D: Codim2Data, s: int) -> int:
    eta = c2.conormal_dims(D)
    return eta(s) + sum(eta(b) for b in D.n2) - sum(eta(a) for a in D.n1)


def nb_hom_value(D: Codim2Data, s: int) -> int:
    return c2.normal_dims(D)(0) + c2.conormal_dims(D)(s) - c2.hom_conormal_conormal_dims(D)(0)


def family_dim_nb(D: Codim2Data, s: int, assume_ext2_zero: bool = False) -> FamilyReport:
    flags = RegimeFlags.of(D, s)
    eps = nb_exact_value(D, s)
    eps_hom = nb_hom_value(D, s)
    if eps != eps_hom:
        raise ArithmeticError(f"conormal formulas disagree: {eps} != {eps_hom}")
    bd = {"epsilon": eps, "0hom(I/I^2,I/I^2)": c2.hom_conormal_conormal_dims(D)(0)}
    assumptions = ["U = Proj(B) - Z is l.c.i.", "depth_{I(Z)} B >= 4", "char k != 2"]
    spec = ConstructionSpec(Kind.NB, s)
    if flags.nb_exact:
        return FamilyReport(spec, eps, 0, flags, bd, assumptions)
    if D.mu != 3:
        raise WrongMu(f"NB sections with s <= {2 * max(D.n2) - min(D.n1)} need mu = 3")
    t = D.t_nb
    bd["dim(K_B)_{t-2s}"] = c2.canonical_dims(D)(t - 2 * s)
    bd["delta(K_B)_{t-2s}"] = c2.delta_canonical(D, t, -2 * s)
    bd["delta(N_B)_{-s}"] = c2.delta_normal_mu3(D, -s)
    bd["delta"] = bd["delta(K_B)_{t-2s}"] - bd["delta(N_B)_{-s}"]
    upper = eps + bd["delta"] + bd["dim(K_B)_{t-2s}"]
    bd["upper_bound"] = upper
    if assume_ext2_zero:
        assumptions.append("0ext^2(N_B,N_B) = 0 (user assertion)")
        dim = upper
    else:
        dim = (Indeterminate("upper bound minus 0ext^2(N_B,N_B)"), upper)
    return FamilyReport(spec, dim, Indeterminate("not covered by degree data"), flags, bd, assumptions)


# -- rank one, M = K_B ----------------------------------------------------------


def family_dim_canonical_section(D: Codim2Data, s: int) -> FamilyReport:
    if D.mu > 5:
        raise WrongMu("delta(K_B) needs mu in {3, 4, 5}")
    bd = {
        "dim(N_B)_0": c2.normal_dims(D)(0),
        "dim(K_B*)_s": c2.canonical_dual_dims(D)(s),
        "one": 1,
        "delta(K_B)_{-s}": c2.delta_canonical(D, 0, -s),
    }
    dim = bd["dim(N_B)_0"] + bd["dim(K_B*)_s"] - 1 - bd["delta(K_B)_{-s}"]
    vanishing = 2 * max(D.n2) - D.N  # delta(K_B)_{-s} = 0 beyond 2 reg(I) - n
    codim = 0 if s > vanishing else Indeterminate(f"_{{-s}}ext^1(I/I^2,K_B) undetermined for s <= {vanishing}")
    return FamilyReport(
        ConstructionSpec(Kind.K_SECTION, s), dim, codim, RegimeFlags.of(D, s), bd,
        ["B licci", "B generically Gorenstein"],
    )


def family_report(D: Codim2Data, spec: ConstructionSpec, assume_ext2_zero: bool = False) -> FamilyReport:
    spec.check(D)
    if spec.kind is Kind.H1_MU4:
        return family_dim_h1_mu4(D, spec.s)
    if spec.kind is Kind.H1_MU5:
        return family_dim_h1_mu5(D, spec.s)
    if spec.kind is Kind.NB:
        return family_dim_nb(D, spec.s, assume_ext2_zero)
    return family_dim_canonical_section(D, spec.s)
