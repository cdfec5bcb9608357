"""Independent reference computations for the test suite.

Nothing here imports the package.  Hilbert series numerators are Laurent
polynomials in t stored as {exponent: coefficient}; a summand R(-d) is t**d.
Symmetric and exterior powers come from power sums, duals from t -> 1/t, and the
series is expanded by N rounds of prefix sums.  A second, fully concrete oracle
counts monomials in star configurations, squarefree monomial ideals whose
resolutions realise the linear fixture data.
"""

from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement
import random


# -- Laurent polynomials ----------------------------------------------------------


def lp(*exps, coeff=1):
    out = Counter()
    for e in exps:
        out[e] += coeff
    return out


def add(*ps):
    out = Counter()
    for p in ps:
        for e, c in p.items():
            out[e] += c
    return _clean(out)


def scale(p, k):
    if isinstance(k, Fraction):
        out = {e: c * k for e, c in p.items()}
        assert all(c.denominator == 1 for c in out.values())
        return _clean({e: int(c) for e, c in out.items()})
    return _clean({e: c * k for e, c in p.items()})


def sub(p, q):
    return add(p, scale(q, -1))


def mul(*ps):
    out = Counter({0: 1})
    for p in ps:
        nxt = Counter()
        for e1, c1 in out.items():
            for e2, c2 in p.items():
                nxt[e1 + e2] += c1 * c2
        out = nxt
    return _clean(out)


def mono(e):
    return Counter({e: 1})


def adams(p, k):
    """p(t**k)."""
    return Counter({e * k: c for e, c in p.items()})


def bar(p):
    """p(1/t): the dual free module."""
    return Counter({-e: c for e, c in p.items()})


def sym2(p):
    return scale(add(mul(p, p), adams(p, 2)), Fraction(1, 2))


def ext2(p):
    return scale(sub(mul(p, p), adams(p, 2)), Fraction(1, 2))


def ext3(p):
    p1, p2, p3 = p, adams(p, 2), adams(p, 3)
    return scale(add(mul(p1, p1, p1), scale(mul(p2, p1), -3), scale(p3, 2)), Fraction(1, 6))


def _clean(p):
    return Counter({e: c for e, c in p.items() if c})


def expand(p, num_vars, lo, hi):
    """Coefficients of t**lo .. t**hi in p / (1 - t)**num_vars."""
    start = min(list(p) + [lo])
    series = [0] * (hi - start + 1)
    for e, c in p.items():
        if e <= hi:
            series[e - start] += c
    for _ in range(num_vars):
        acc = 0
        for i in range(len(series)):
            acc += series[i]
            series[i] = acc
    return series[lo - start:]


# -- module numerators for Betti data (N, n1, n2) ------------------------------------


def numerators(N, n1, n2):
    one = mono(0)
    g1, g2 = lp(*n1), lp(*n2)
    G1, G2 = bar(g1), bar(g2)  # duals
    I = sub(g1, g2)
    HB = sub(one, I)
    K = mul(mono(N), add(G2, scale(G1, -1), one))
    I2 = add(sym2(g1), scale(mul(g1, g2), -1), ext2(g2))
    eta = sub(I, I2)
    NB = add(mul(sub(G2, G1), I), one)
    Kd = add(mul(mono(-N), sub(g2, g1), HB), mul(mono(-N), eta))
    H1 = add(g2, scale(ext2(g1), -1), ext2(g2))
    H1d = sub(mul(G1, HB), NB)
    H2 = add(ext2(g2), scale(ext3(g1), -1), ext3(g2))
    S2K = mul(mono(2 * N), add(sym2(G2), scale(mul(G1, G2), -1), ext2(G1)))
    t = N - sum(n1)
    homS2 = mul(mono(-t), sub(mul(sym2(G2), K), mul(mono(-N), G2, S2K)))
    homcc = add(mul(sub(G1, G2), eta), NB)
    return {
        "ideal": I,
        "quotient": HB,
        "canonical": K,
        "canonical_dual": Kd,
        "ideal_square": I2,
        "conormal": eta,
        "normal": NB,
        "koszul_h1": H1,
        "h1_dual": H1d,
        "koszul_h2": H2,
        "s2_canonical": S2K,
        "hom_s2h1_canonical": homS2,
        "hom_conormal_conormal": homcc,
    }


def dims(N, n1, n2, name, lo, hi):
    return expand(numerators(N, n1, n2)[name], N, lo, hi)


def dim_at(N, n1, n2, name, v):
    return dims(N, n1, n2, name, v, v)[0]


# -- concrete monomial counts ------------------------------------------------------


def count_monomials(num_vars, v, keep=lambda exps: True):
    """Number of degree-v monomials in num_vars variables whose exponent vector passes keep."""
    if v < 0:
        return 0
    n = 0
    for combo in combinations_with_replacement(range(num_vars), v):
        e = [0] * num_vars
        for i in combo:
            e[i] += 1
        if keep(e):
            n += 1
    return n


def star_generators(m):
    """Exponent vectors of the products of m-1 of the first m variables.

    This star configuration is the reduced union of the codimension two planes
    x_i = x_j = 0 (i < j < m); its Betti degrees are (m-1)**m / m**(m-1).
    """
    return [tuple(0 if i == k else 1 for i in range(m)) for k in range(m)]


def _divisible(e, gens):
    return any(all(e[i] >= g[i] for i in range(len(g))) for g in gens)


def monomial_ideal_dims(num_vars, gens, v):
    """dim of the degree-v piece of the monomial ideal generated by gens."""
    return count_monomials(num_vars, v, lambda e: _divisible(e, gens))


def star_dims(num_vars, m, v):
    """(dim I_v, dim (I/I^2)_v) for the star configuration on m variables."""
    g = star_generators(m)
    g2 = [tuple(a + b for a, b in zip(x, y)) for x, y in combinations_with_replacement(g, 2)]
    i1 = monomial_ideal_dims(num_vars, g, v)
    return i1, i1 - monomial_ideal_dims(num_vars, g2, v)


# -- random realisable Betti data --------------------------------------------------


def random_betti_data(rng: random.Random, mu=None, N=None, max_degree=9):
    """Sorted (N, n1, n2) satisfying Sum n1 = Sum n2 and n2[j] > n1[j+1].

    The last condition (with both lists ascending) is exactly when some
    codimension two CM quotient has these Betti degrees.
    """
    mu = mu or rng.choice((3, 4, 5))
    N = N or rng.choice((4, 5, 6))
    while True:
        n1 = sorted(rng.randint(1, max_degree - 1) for _ in range(mu))
        left, n2 = sum(n1), []
        for j in range(mu - 1):
            m = mu - 1 - j  # entries still to place, this one included
            lo = max(n1[j + 1] + 1, n2[-1] if n2 else 0, left - (m - 1) * max_degree)
            hi = min(max_degree, left // m)
            if lo > hi:
                break
            n2.append(left if m == 1 else rng.randint(lo, hi))
            left -= n2[-1]
        if len(n2) == mu - 1 and left == 0 and n2[-1] <= max_degree:
            return N, tuple(n1), tuple(n2)
