"""Independent reference computations used to cross-check the character engine.

None of these share code with the Freudenthal recursion:

* :func:`kac_weyl_multiplicities` evaluates the Weyl-Kac formula by brute force
  as an alternating sum of affine Kostant partition functions (Verma module
  subtraction), for simply-laced types at small depth.
* :func:`theta_over_eta` and friends expand lattice theta series divided by
  eta^rank, which gives graded dimensions of level-one vacuum modules.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .lie import signed_orbit


def _gram(rs, a, b):
    """<a, b> for vectors in simple-root coordinates."""
    n = rs.rank
    c = rs.cartan
    h = rs.root_lengths
    return sum(Fraction(a[i] * b[j] * c[i][j]) * h[j] / 2 for i in range(n) for j in range(n))


def _affine_partitions(rs, depth):
    """g[d] = {finite part: count} of multisets of positive affine roots of
    positive grade with total grade exactly d."""
    n = rs.rank
    finite = [tuple(c) for c in rs.positive_root_coords]
    items = []
    for m in range(1, depth + 1):
        for c in finite:
            items.append((c, m))
            items.append((tuple(-x for x in c), m))
        items.extend([((0,) * n, m)] * n)
    g = [dict() for _ in range(depth + 1)]
    g[0][(0,) * n] = 1
    for vec, m in items:
        for d in range(m, depth + 1):
            for v, c in list(g[d - m].items()):
                key = tuple(x + y for x, y in zip(v, vec))
                g[d][key] = g[d].get(key, 0) + c
    return g


def _kostant(rs):
    roots = [tuple(c) for c in rs.positive_root_coords]

    @lru_cache(maxsize=None)
    def count(beta, i=0):
        if any(x < 0 for x in beta):
            return 0
        if i == len(roots):
            return int(not any(beta))
        total = 0
        a = roots[i]
        while not any(x < 0 for x in beta):
            total += count(beta, i + 1)
            beta = tuple(x - y for x, y in zip(beta, a))
        return total

    return count


def kac_weyl_multiplicities(rs, k, top, depth, weights):
    """Multiplicity of each (grade, weight) pair in L(k, top), brute force.

    ``weights`` is an iterable of finite weights (Dynkin labels); the result
    is a list over grades 0..depth of {weight: multiplicity}.
    """
    if not rs.simply_laced:
        raise DomainError("the brute-force oracle handles simply-laced types only")
    kk = k + rs.dual_coxeter
    parts = _affine_partitions(rs, depth)
    kostant = _kostant(rs)
    radius = depth + 3
    # affine Weyl images t_gamma w (top + rho): finite part and delta coefficient
    terms = []
    for v, sign in signed_orbit(rs, tuple(x + 1 for x in top)).items():
        vc = rs.root_coordinates(v)
        for gamma in itertools.product(range(-radius, radius + 1), repeat=rs.rank):
            e = -_gram(rs, vc, gamma) - Fraction(kk, 2) * _gram(rs, gamma, gamma)
            if e >= -depth and e.denominator == 1:
                terms.append((tuple(a + kk * g for a, g in zip(vc, gamma)), int(e), sign))
    out = [dict() for _ in range(depth + 1)]
    for lam in weights:
        lam_rho = rs.root_coordinates(tuple(x + 1 for x in lam))
        for n in range(depth + 1):
            total = 0
            for fin, e, sign in terms:
                shift = n + e
                if shift < 0:
                    continue
                beta = tuple(a - b for a, b in zip(fin, lam_rho))
                if any(x.denominator != 1 for x in beta):
                    continue
                beta = tuple(int(x) for x in beta)
                for sigma, c in parts[shift].items():
                    p = kostant(tuple(x - y for x, y in zip(beta, sigma)))
                    if p:
                        total += sign * c * p
            if total:
                out[n][lam] = total
    return out


def partition_powers(rank, depth):
    """Coefficients of 1/prod_{n>=1} (1-q^n)^rank through q^depth."""
    poly = [0] * (depth + 1)
    poly[0] = 1
    for _ in range(rank):
        for part in range(1, depth + 1):
            for e in range(part, depth + 1):
                poly[e] += poly[e - part]
    return poly


def theta_over_eta(theta, rank, depth):
    """Graded dimensions theta(q) / prod (1-q^n)^rank through q^depth."""
    inv = partition_powers(rank, depth)
    theta = list(theta) + [0] * (depth + 1)
    return [sum(theta[i] * inv[n - i] for i in range(n + 1)) for n in range(depth + 1)]


def a1_level_one_vacuum_dims(depth):
    """sum_{m in Z} q^{m^2} / prod (1-q^n)."""
    theta = [0] * (depth + 1)
    m = 0
    while m * m <= depth:
        theta[m * m] += 1 if m == 0 else 2
        m += 1
    return theta_over_eta(theta, 1, depth)


def e8_theta(depth):
    """Theta series of the E8 lattice, via the weight-4 Eisenstein series."""
    return [1] + [240 * sum(d ** 3 for d in range(1, m + 1) if m % d == 0)
                  for m in range(1, depth + 1)]


def e8_level_one_vacuum_dims(depth):
    return theta_over_eta(e8_theta(depth), 8, depth)
