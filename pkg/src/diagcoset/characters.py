"""Graded characters of integrable highest-weight modules, their tensor
products, and branching functions of the diagonal embedding.

A graded character of L(k, lam) is stored truncated at some depth N: grade n
holds the decomposition of the L_0 = h + n eigenspace into irreducible
g-modules.  Weight multiplicities come from the affine Freudenthal recursion,
with real affine roots alpha + m delta of multiplicity one and imaginary roots
m delta of multiplicity rank.  Everything here is integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .affine import check_level_weight, level_weights, sugawara_weight
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .finite import by_height, decompose, decomposition_dim, dominant_weights_below, \
    tensor_decompose
from .lie import add, scale_weight, to_dominant

DEFAULT_MAX_WEIGHTS = 50_000


@dataclass(frozen=True)
class GradedCharacter:
    algebra: str
    level: int
    base: tuple
    depth: int
    grades: tuple   # grades[n] = {highest weight: multiplicity}

    def dims(self, rs):
        return [decomposition_dim(rs, g) for g in self.grades]

    def truncate(self, depth):
        if depth > self.depth:
            raise ResourceLimitError(f"character known to depth {self.depth}, "
                                     f"{depth} requested", grade=self.depth + 1)
        return GradedCharacter(self.algebra, self.level, self.base, depth,
                               self.grades[:depth + 1])


@dataclass(frozen=True)
class QSeries:
    """q^offset * sum_n coeffs[n] q^n."""
    offset: Fraction
    coeffs: tuple

    @property
    def is_zero(self):
        return not any(self.coeffs)

    @property
    def first_grade(self):
        return next((n for n, c in enumerate(self.coeffs) if c), None)

    @property
    def lowest_exponent(self):
        n = self.first_grade
        return None if n is None else self.offset + n

    def stripped(self):
        """Re-index from the first nonzero coefficient."""
        n = self.first_grade
        if n is None:
            return QSeries(self.offset, ())
        return QSeries(self.offset + n, self.coeffs[n:])

    def shifted(self, by):
        return QSeries(self.offset + Fraction(by), self.coeffs)


# -- affine Freudenthal -----------------------------------------------------

def _grade_candidates(rs, top, n, bound):
    """Dominant weights that may occur at grade n of L(k, top)."""
    cands = dominant_weights_below(rs, add(top, scale_weight(n, rs.highest_root)))
    return [mu for mu in cands if rs.norm_int(tuple(x + 1 for x in mu)) <= bound]


def affine_weight_multiplicities(rs, k, top, depth, max_weights=DEFAULT_MAX_WEIGHTS):
    """Per grade, {dominant weight: weight multiplicity} of L(k, top)."""
    top = check_level_weight(rs, k, top)
    if depth < 0:
        raise DomainError("depth must be >= 0")
    s = rs.scale
    kk = k + rs.dual_coxeter
    target = rs.norm_int(tuple(x + 1 for x in top))
    roots = list(zip(rs.positive_root_coords, rs.positive_roots, rs.root_norms_int))
    signed = roots + [(tuple(-c for c in co), tuple(-x for x in lab), nm)
                      for co, lab, nm in roots]
    grades = []
    seen = 0

    def lookup(g, mu):
        return grades[g].get(to_dominant(rs, mu)[0], 0) if g < len(grades) else 0

    for n in range(depth + 1):
        bound = target + 2 * kk * n * s
        cands = _grade_candidates(rs, top, n, bound)
        seen += len(cands)
        if seen > max_weights:
            raise ResourceLimitError(
                f"{rs.name} level {k} weight {top}: more than {max_weights} dominant "
                f"weights by grade {n}", grade=n)
        cur = {}
        grades.append(cur)
        for mu in by_height(rs, cands):
            if n == 0 and mu == top:
                cur[mu] = 1
                continue
            denom = bound - rs.norm_int(tuple(x + 1 for x in mu))
            if denom <= 0:
                continue
            total = 0
            # imaginary roots m delta, multiplicity rank
            for m in range(1, n + 1):
                for j in range(1, n // m + 1):
                    c = grades[n - j * m].get(mu, 0)
                    if c:
                        total += rs.rank * m * k * s * c
            for co, lab, norm in signed:
                ip = rs.pair_root_int(mu, co)
                # real roots alpha + m delta, m >= 1
                for m in range(1, n + 1):
                    nu = mu
                    for j in range(1, n // m + 1):
                        nu = tuple(x + y for x, y in zip(nu, lab))
                        c = lookup(n - j * m, nu)
                        if c:
                            total += (ip + j * norm + k * m * s) * c
            for co, lab, norm in roots:
                # finite positive roots: unbroken strings within grade n
                ip = rs.pair_root_int(mu, co)
                nu = mu
                j = 1
                while True:
                    nu = tuple(x + y for x, y in zip(nu, lab))
                    c = cur.get(to_dominant(rs, nu)[0], 0)
                    if not c:
                        break
                    total += (ip + j * norm) * c
                    j += 1
            if total:
                q, r = divmod(2 * total, denom)
                if r:
                    raise ConsistencyError(f"inexact Freudenthal step at grade {n}, {mu}")
                cur[mu] = q
    return grades


_MEMO = {}


def graded_character(rs, k, lam, depth, cache=None, max_weights=DEFAULT_MAX_WEIGHTS):
    """Graded character of L(k, lam) through grade ``depth``.

    ``cache`` is an optional persistent store with ``get(rs, k, lam, depth)``
    and ``put(character)``; see :mod:`diagcoset.cache`.
    """
    lam = check_level_weight(rs, k, lam)
    key = (rs.name, k, lam)
    hit = _MEMO.get(key)
    if hit is not None and hit.depth >= depth:
        return hit.truncate(depth)
    if cache is not None:
        hit = cache.get(rs, k, lam, depth)
        if hit is not None:
            _MEMO[key] = hit
            return hit.truncate(depth)
    mults = affine_weight_multiplicities(rs, k, lam, depth, max_weights)
    ch = GradedCharacter(rs.name, k, lam, depth, tuple(decompose(rs, g) for g in mults))
    if hit is None or hit.depth < depth:
        _MEMO[key] = ch
    if cache is not None:
        cache.put(ch)
    return ch


def clear_memo():
    _MEMO.clear()


# -- tensor products and branching -------------------------------------------

def _accumulate(out, decomp, c):
    for lam, m in decomp.items():
        out[lam] = out.get(lam, 0) + c * m


def tensor_grade(rs, a, b, depth):
    """Grade-by-grade decomposition of the tensor product of two graded characters."""
    if a.depth < depth or b.depth < depth:
        raise ResourceLimitError(f"tensor_grade needs depth {depth}, have "
                                 f"{a.depth} and {b.depth}",
                                 grade=min(a.depth, b.depth) + 1)
    grades = []
    for n in range(depth + 1):
        out = {}
        for i in range(n + 1):
            for x, mx in a.grades[i].items():
                for y, my in b.grades[n - i].items():
                    _accumulate(out, tensor_decompose(rs, x, y), mx * my)
        grades.append({lam: m for lam, m in sorted(out.items()) if m})
    return GradedCharacter(rs.name, a.level + b.level, add(a.base, b.base), depth,
                           tuple(grades))


def branch(rs, k, l, top, mid, depth, cache=None, reverse_peel=False,
           max_weights=DEFAULT_MAX_WEIGHTS):
    """Branching functions of L(k, top) x L(l, mid) under the diagonal L(k+l, 0).

    Returns {lam in P_+^{k+l}: QSeries}.  The offset of each series is the
    baseline h_top + h_mid - h_lam and coeffs[n] counts highest-weight vectors
    of L(k+l, lam) at tensor grade n.  Weights violating the selection rule
    get the zero series.
    """
    top = check_level_weight(rs, k, top)
    mid = check_level_weight(rs, l, mid)
    kl = k + l
    allowed = level_weights(rs, kl)
    tensor = tensor_grade(rs, graded_character(rs, k, top, depth, cache, max_weights),
                          graded_character(rs, l, mid, depth, cache, max_weights), depth)
    coeffs = {lam: [0] * (depth + 1) for lam in allowed}
    found = []   # (lam, first grade), in discovery order
    for n in range(depth + 1):
        rest = dict(tensor.grades[n])
        order = list(reversed(found)) if reverse_peel else found
        for lam, first in order:
            ch = graded_character(rs, kl, lam, depth - first, cache, max_weights)
            for d in range(first, n):
                c = coeffs[lam][d]
                if c:
                    _accumulate(rest, ch.grades[n - d], -c)
        for mu, c in sorted(rest.items()):
            if c < 0:
                raise ConsistencyError(f"negative residual {c} at grade {n}, weight {mu}")
            if c and mu not in coeffs:
                raise ConsistencyError(f"residual {mu} at grade {n} is not in P_+^{kl}")
            if c:
                if not any(coeffs[mu]):
                    found.append((mu, n))
                coeffs[mu][n] = c
    h_top = sugawara_weight(rs, k, top)
    h_mid = sugawara_weight(rs, l, mid)
    return {lam: QSeries(h_top + h_mid - sugawara_weight(rs, kl, lam), tuple(coeffs[lam]))
            for lam in allowed}


# -- independent Ising oracle ------------------------------------------------

def _distinct_parts(parts, limit):
    """Coefficients of prod_{p in parts} (1 + x^p) up to x^limit."""
    poly = [0] * (limit + 1)
    poly[0] = 1
    for p in parts:
        for e in range(limit, p - 1, -1):
            poly[e] += poly[e - p]
    return poly


def ising_character_oracle(h, depth):
    """Free-fermion q-series of the Ising module L(1/2, h), h in {0, 1/2, 1/16}."""
    h = Fraction(h)
    offset = h - Fraction(1, 48)
    if h == Fraction(1, 16):
        return QSeries(offset, tuple(_distinct_parts(range(1, depth + 1), depth)))
    if h not in (0, Fraction(1, 2)):
        raise DomainError(f"not an Ising weight: {h}")
    # exponents doubled: prod (1 + x^(2n-1)), x = q^(1/2)
    poly = _distinct_parts(range(1, 2 * depth + 2, 2), 2 * depth + 1)
    start = 0 if h == 0 else 1
    return QSeries(offset, tuple(poly[start::2][:depth + 1]))
