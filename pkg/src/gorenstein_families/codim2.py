"""Graded pieces of the modules attached to a codimension two CM quotient B = R/I.

Every constructor returns a :class:`~gorenstein_families.graded.DimExpr` built
as the alternating sum of an exact sequence whose other terms are free modules
or previously constructed modules.  Notation: ``G1 = (+) R(-n1_i)`` and
``G2 = (+) R(-n2_j)`` are the terms of the Hilbert-Burch resolution
``0 -> G2 -> G1 -> I -> 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, combinations_with_replacement

from .errors import HilbertBurchViolation, Indeterminate, MinimalityViolation, WrongMu
from .graded import DimExpr, FreeModule, dim_polyring


@dataclass(frozen=True)
class Codim2Data:
    """Betti degrees of B: ``N`` variables, generator degrees ``n1``, relation degrees ``n2``."""

    N: int
    n1: tuple
    n2: tuple

    def __post_init__(self):
        object.__setattr__(self, "n1", tuple(sorted(int(a) for a in self.n1)))
        object.__setattr__(self, "n2", tuple(sorted(int(b) for b in self.n2)))
        if self.N < 1:
            raise ValueError("N must be positive")
        if len(self.n1) < 3:
            raise MinimalityViolation("need at least three minimal generators")
        if len(self.n2) != len(self.n1) - 1:
            raise HilbertBurchViolation(
                f"{len(self.n1)} generators need {len(self.n1) - 1} relations, got {len(self.n2)}"
            )
        if any(a <= 0 for a in self.n1 + self.n2):
            raise MinimalityViolation("degrees must be positive")
        if sum(self.n1) != sum(self.n2):
            raise HilbertBurchViolation(
                f"sum of relation degrees {sum(self.n2)} != sum of generator degrees {sum(self.n1)}"
            )
        if min(self.n2) <= min(self.n1) or max(self.n2) <= max(self.n1):
            raise MinimalityViolation(
                "every relation degree must exceed min(n1) and max(n2) must exceed every n1"
            )

    @property
    def mu(self) -> int:
        return len(self.n1)

    @property
    def n(self) -> int:
        """Krull dimension of B."""
        return self.N - 2

    @property
    def t_h1(self) -> int:
        return self.N - sum(self.n1)

    @property
    def t_nb(self) -> int:
        return self.N

    @property
    def r_h1(self) -> int:
        return self.mu - 2

    @cached_property
    def realizable(self) -> bool:
        """Gaeta's criterion: a general Hilbert-Burch matrix of these degrees has codimension 2.

        With both lists sorted ascending this means ``n2[j] > n1[j+1]`` for all j.
        Data failing it passes the basic checks but no actual B has it, and the
        module constructors may then go negative.
        """
        return all(b > a for b, a in zip(self.n2, self.n1[1:]))

    @property
    def reg_ideal(self) -> int:
        return max(self.n2) - 1

    # free modules of the resolution and their tensor constructions
    def free(self, twists) -> FreeModule:
        return FreeModule(self.N, tuple(twists))

    @cached_property
    def G1(self) -> FreeModule:
        return self.free(-a for a in self.n1)

    @cached_property
    def G2(self) -> FreeModule:
        return self.free(-b for b in self.n2)


@lru_cache(maxsize=4096)
def wedge(F: FreeModule, k: int) -> FreeModule:
    return FreeModule(F.ambient_vars, tuple(sum(c) for c in combinations(F.twists, k)))


@lru_cache(maxsize=4096)
def sym2(F: FreeModule) -> FreeModule:
    return FreeModule(F.ambient_vars, tuple(a + b for a, b in combinations_with_replacement(F.twists, 2)))


@lru_cache(maxsize=4096)
def tensor(F: FreeModule, G: FreeModule) -> FreeModule:
    return FreeModule(F.ambient_vars, tuple(a + b for a in F.twists for b in G.twists))


def _alt(D: Codim2Data, label: str, *modules) -> DimExpr:
    """F0 - F1 + F2 - ... for free modules F0, F1, ..."""
    return DimExpr.combine(D.N, [((-1) ** k, F, 0) for k, F in enumerate(modules)], label)


@lru_cache(maxsize=None)
def ring_dims(D: Codim2Data) -> DimExpr:
    return DimExpr.of(D.free([0]), "R")


@lru_cache(maxsize=None)
def ideal_dims(D: Codim2Data) -> DimExpr:
    return _alt(D, "I", D.G1, D.G2)


@lru_cache(maxsize=None)
def quotient_dims(D: Codim2Data) -> DimExpr:
    return (ring_dims(D) - ideal_dims(D)).named("H_B")


@lru_cache(maxsize=None)
def canonical_dims(D: Codim2Data) -> DimExpr:
    # dual resolution 0 -> R -> G1* -> G2* -> K_B(N) -> 0
    return _alt(D, "K_B", D.G2.dual().shifted(-D.N), D.G1.dual().shifted(-D.N), D.free([-D.N]))


@lru_cache(maxsize=None)
def ideal_square_dims(D: Codim2Data) -> DimExpr:
    return _alt(D, "I^2", sym2(D.G1), tensor(D.G1, D.G2), wedge(D.G2, 2))


@lru_cache(maxsize=None)
def conormal_dims(D: Codim2Data) -> DimExpr:
    return (ideal_dims(D) - ideal_square_dims(D)).named("I/I^2")


@lru_cache(maxsize=None)
def canonical_dual_dims(D: Codim2Data) -> DimExpr:
    # 0 -> K_B(N)* -> (+) B(-n2) -> (+) B(-n1) -> I/I^2 -> 0
    HB, eta = quotient_dims(D), conormal_dims(D)
    terms = [(1, HB, D.N - b) for b in D.n2]
    terms += [(-1, HB, D.N - a) for a in D.n1]
    terms.append((1, eta, D.N))
    return DimExpr.combine(D.N, terms, "K_B*")


@lru_cache(maxsize=None)
def normal_dims(D: Codim2Data) -> DimExpr:
    # 0 -> R -> (+) I(n1) -> (+) I(n2) -> N_B -> 0
    I = ideal_dims(D)
    terms = [(1, I, b) for b in D.n2] + [(-1, I, a) for a in D.n1]
    terms.append((1, ring_dims(D), 0))
    return DimExpr.combine(D.N, terms, "N_B")


@lru_cache(maxsize=None)
def koszul_h1_dims(D: Codim2Data) -> DimExpr:
    return _alt(D, "H_1", D.G2, wedge(D.G1, 2), wedge(D.G2, 2))


@lru_cache(maxsize=None)
def h1_dual_dims(D: Codim2Data) -> DimExpr:
    # 0 -> N_B -> (+) B(n1) -> H_1* -> 0
    terms = [(1, quotient_dims(D), a) for a in D.n1]
    terms.append((-1, normal_dims(D), 0))
    return DimExpr.combine(D.N, terms, "H_1*")


@lru_cache(maxsize=None)
def koszul_h2_dims(D: Codim2Data) -> DimExpr:
    return _alt(D, "H_2", wedge(D.G2, 2), wedge(D.G1, 3), wedge(D.G2, 3))


@lru_cache(maxsize=None)
def s2_canonical_dims(D: Codim2Data) -> DimExpr:
    # 0 -> wedge2 G1* -> G1* x G2* -> S2 G2* -> S2(K_B)(2N) -> 0, read at v - 2N
    G1d, G2d = D.G1.dual(), D.G2.dual()
    s = -2 * D.N
    return _alt(D, "S2K_B", sym2(G2d).shifted(s), tensor(G1d, G2d).shifted(s), wedge(G1d, 2).shifted(s))


@lru_cache(maxsize=None)
def hom_s2h1_canonical_dims(D: Codim2Data) -> DimExpr:
    """Degree-v pieces of Hom(S2 H_1, K_B(t)) with t = N - sum(n1).

    From 0 -> Hom(S2 H_1, K_B) -> K_B (x) S2((+) B(n2)) -> (+) S2(K_B)(n2 + N) -> 0,
    where the right map is onto.
    """
    t = D.t_h1
    K, S2K = canonical_dims(D), s2_canonical_dims(D)
    terms = [(1, K, t + b + c) for b, c in combinations_with_replacement(D.n2, 2)]
    terms += [(-1, S2K, t + b + D.N) for b in D.n2]
    return DimExpr.combine(D.N, terms, "Hom(S2H_1,K_B(t))")


@lru_cache(maxsize=None)
def hom_conormal_conormal_dims(D: Codim2Data) -> DimExpr:
    # 0 -> Hom(I/I^2, I/I^2) -> (+) I/I^2(n1) -> (+) I/I^2(n2) -> N_B -> 0
    eta = conormal_dims(D)
    terms = [(1, eta, a) for a in D.n1] + [(-1, eta, b) for b in D.n2]
    terms.append((1, normal_dims(D), 0))
    return DimExpr.combine(D.N, terms, "Hom(I/I^2,I/I^2)")


def module_constructors():
    """Name -> constructor for every module-valued DimExpr of this file."""
    return {
        "ideal": ideal_dims,
        "quotient": quotient_dims,
        "canonical": canonical_dims,
        "canonical_dual": canonical_dual_dims,
        "ideal_square": ideal_square_dims,
        "conormal": conormal_dims,
        "normal": normal_dims,
        "koszul_h1": koszul_h1_dims,
        "h1_dual": h1_dual_dims,
        "koszul_h2": koszul_h2_dims,
        "s2_canonical": s2_canonical_dims,
        "hom_s2h1_canonical": hom_s2h1_canonical_dims,
        "hom_conormal_conormal": hom_conormal_conormal_dims,
    }


# -- delta quantities: hom - ext^1 of I/I^2 into a module -----------------------


def delta_h1(D: Codim2Data, v: int) -> int:
    """hom(I/I^2, H_1)_v - ext^1(I/I^2, H_1)_v, from Hom(I/I^2, -) applied to
    0 -> H_1 -> (+) B(-n1) -> I/I^2 -> 0."""
    NB = normal_dims(D)
    return sum(NB(v - a) for a in D.n1) - hom_conormal_conormal_dims(D)(v)


def dual_koszul_dims(D: Codim2Data) -> DimExpr:
    """M_{r-1} with Hom(H_1, K_B) = M_{r-1}(-t): B, H_1 or H_2 for mu = 3, 4, 5."""
    if D.mu == 3:
        return quotient_dims(D)
    if D.mu == 4:
        return koszul_h1_dims(D)
    if D.mu == 5:
        return koszul_h2_dims(D)
    raise WrongMu(f"Hom(H_1, K_B) has no closed form for mu = {D.mu}")


def delta_canonical(D: Codim2Data, twist: int, v: int) -> int:
    """delta(K_B(twist))_v = delta(K_B)_{v + twist}.

    Hom(-, K_B(twist)) applied to 0 -> H_1 -> (+) B(-n1) -> I/I^2 -> 0 stops
    after ext^1 since K_B is injective against maximal CM modules.
    """
    M = dual_koszul_dims(D)
    K = canonical_dims(D)
    return sum(K(v + twist + a) for a in D.n1) - M(v + twist - D.t_h1)


def delta_h2(D: Codim2Data, v: int):
    """delta(H_2)_v for mu = 5: zero when -v > max n2 - 2 min n2, otherwise unknown."""
    if D.mu != 5:
        raise WrongMu("delta(H_2) is only provided for mu = 5")
    if -v > max(D.n2) - 2 * min(D.n2):
        return 0
    return Indeterminate(f"delta(H_2)_{v}: outside the vanishing range -v > {max(D.n2) - 2 * min(D.n2)}")


def delta_normal_mu3(D: Codim2Data, v: int) -> int:
    """delta(N_B)_v for mu = 3, where H_1 = K_B(t) and Hom(I/I^2, H_1*) = I/I^2(N - t)."""
    if D.mu != 3:
        raise WrongMu("delta(N_B) is only computable for mu = 3")
    NB = normal_dims(D)
    return sum(NB(v + a) for a in D.n1) - conormal_dims(D)(v + D.N - D.t_h1)


def hom_h1_h1_deg0(D: Codim2Data):
    """0hom(H_1, H_1); needs 2 min n1 > max n2 so that hom(I/I^2, H_1)_0 = 0."""
    if 2 * min(D.n1) <= max(D.n2):
        return Indeterminate("0hom(H_1,H_1) needs 2*min(n1) > max(n2)")
    H1 = koszul_h1_dims(D)
    return sum(H1(a) for a in D.n1) + dim_polyring(D.N, 0)


def ext1_conormal_h1(D: Codim2Data, s: int):
    """_{-s}ext^1(I/I^2, H_1) inside the ranges where degree data decides it."""
    lo = max(D.n2) - 2 * min(D.n1)
    hi = max(D.n2) - min(D.n2)
    if s > hi:
        return 0
    if lo < s:
        return dim_polyring(D.N, -s)
    return Indeterminate(f"_{{-s}}ext^1(I/I^2,H_1) undetermined for s = {s} <= {lo}")
