"""Root systems and weight-lattice arithmetic for the finite simple Lie algebras.

Nodes are numbered 1..rank following Bourbaki.  Weights are plain tuples of
Dynkin labels, i.e. coordinates in the basis of fundamental weights.  The
invariant form is normalised so that long roots have squared length 2, and
all arithmetic on it is exact.

Mark tables (coefficients of the highest root) under this numbering::

    A_n   1 1 ... 1
    B_n   1 2 2 ... 2
    C_n   2 2 ... 2 1
    D_n   1 2 ... 2 1 1
    E6    1 2 2 3 2 1
    E7    2 2 3 4 3 2 1
    E8    2 3 4 6 5 4 3 2
    F4    2 3 4 2
    G2    3 2

For E8 the two nonzero level-2 weights are Lambda_1 (dim 3875) and
Lambda_8 (the adjoint, 248).  Older literature that orders the E8 diagram
differently calls these Lambda_7 and Lambda_1 respectively.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import DimensionError, DomainError

Weight = tuple

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, eq=False)
class RootSystem:
    type_label: str
    rank: int
    cartan: tuple
    root_lengths: tuple          # squared lengths of the simple roots
    simple_roots: tuple          # Dynkin labels of alpha_i (= rows of cartan)
    positive_roots: tuple        # Dynkin labels, ordered by (height, labels)
    positive_root_coords: tuple  # same roots in the simple-root basis
    highest_root: tuple
    marks: tuple
    comarks: tuple
    dual_coxeter: int
    weyl_vector: tuple
    dim_g: int
    fundamental_group_order: int
    long_index: int
    simple_current_indices: tuple
    inverse_cartan: tuple = field(repr=False)
    form: tuple = field(repr=False)  # (Lambda_i, Lambda_j)
    # Integer versions of the form, scaled by `scale`, used by the hot loops.
    scale: int = field(repr=False)
    form_int: tuple = field(repr=False)
    half_lengths_int: tuple = field(repr=False)
    root_norms_int: tuple = field(repr=False)

    @property
    def name(self):
        return f"{self.type_label}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    @property
    def simply_laced(self):
        return self.type_label in "ADE"

    # -- scaled integer helpers -------------------------------------------

    def norm_int(self, lam):
        """scale * <lam, lam> for an integral weight."""
        f = self.form_int
        n = self.rank
        total = 0
        for i in range(n):
            li = lam[i]
            if li:
                row = f[i]
                total += li * sum(row[j] * lam[j] for j in range(n))
        return total

    def pair_root_int(self, lam, coords):
        """scale * <lam, alpha> where alpha is given in simple-root coordinates."""
        h = self.half_lengths_int
        return sum(c * l * d for c, l, d in zip(coords, lam, h))

    def root_coordinates(self, lam):
        """Exact coordinates of ``lam`` in the basis of simple roots."""
        inv = self.inverse_cartan
        n = self.rank
        return tuple(sum(Fraction(lam[i]) * inv[i][j] for i in range(n)) for j in range(n))

    def height(self, lam):
        return sum(self.root_coordinates(lam))

    def level(self, lam):
        """<lam, theta>, the level at which ``lam`` first becomes integrable."""
        return sum(a * x for a, x in zip(self.comarks, lam))


def parse_algebra(text):
    """'E8' -> ('E', 8)."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", str(text))
    if not m:
        raise DomainError(f"cannot parse algebra name {text!r}")
    return m.group(1).upper(), int(m.group(2))


def _validate(type_label, rank):
    if type_label in _MIN_RANK:
        ok = rank >= _MIN_RANK[type_label]
    else:
        ok = rank in _EXCEPTIONAL.get(type_label, ())
    if not ok:
        raise DomainError(f"invalid simple type ({type_label}, {rank})")


def _diagram(t, n):
    """Edges (0-based) and squared lengths of the simple roots."""
    chain = [(i, i + 1) for i in range(n - 1)]
    if t == "A":
        return chain, [2] * n
    if t == "B":
        return chain, [2] * (n - 1) + [1]
    if t == "C":
        return chain, [1] * (n - 1) + [2]
    if t == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)], [2] * n
    if t == "E":
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return edges, [2] * n
    if t == "F":
        return chain, [2, 2, 1, 1]
    if t == "G":
        return [(0, 1)], [Fraction(2, 3), 2]
    raise DomainError(f"unknown type {t!r}")


def _det(matrix):
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def _inverse(matrix):
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        pivot = m[c][c]
        m[c] = [x / pivot for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def lattice_index(vectors, rank):
    """Index in Z^rank of the lattice spanned by integer ``vectors``.

    Integer row echelon form by repeated gcd elimination; returns 0 when
    the vectors do not span a full-rank sublattice.
    """
    rows = [list(v) for v in vectors if any(v)]
    index = 1
    for col in range(rank):
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not live:
            return 0
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            nxt = [pivot]
            for r in live[1:]:
                q = r[col] // pivot[col]
                r = [a - q * b for a, b in zip(r, pivot)]
                (nxt if r[col] else rest).append(r)
            live = nxt
        index *= abs(live[0][col])
        rows = rest
    return index


def _positive_roots(cartan):
    """Positive roots in simple-root coordinates, by alpha-string closure."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    roots = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            labels = [sum(beta[j] * cartan[j][i] for j in range(n)) for i in range(n)]
            for i in range(n):
                # length of the alpha_i string below beta
                r = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        r += 1
                    else:
                        break
                if r - labels[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort()
        roots.extend(nxt)
        layer = nxt
    return roots


@lru_cache(maxsize=None)
def build_root_system(type_label, rank=None):
    """Construct the root system of the simple Lie algebra ``type_label`` + ``rank``.

    ``build_root_system("E8")`` and ``build_root_system("E", 8)`` are
    equivalent.  Raises :class:`DomainError` for pairs such as ('B', 1) or
    ('E', 5) that do not name a simple type.
    """
    if rank is None:
        type_label, rank = parse_algebra(type_label)
    type_label = str(type_label).upper()
    rank = int(rank)
    _validate(type_label, rank)

    edges, lengths = _diagram(type_label, rank)
    lengths = [Fraction(x) for x in lengths]
    gram = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        gram[i][i] = lengths[i]
    for i, j in edges:
        gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) / 2
    cartan = tuple(tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(rank))
                   for i in range(rank))

    coords = _positive_roots(cartan)
    half = [x / 2 for x in lengths]

    def labels_of(c):
        return tuple(sum(c[j] * cartan[j][i] for j in range(rank)) for i in range(rank))

    order = sorted(coords, key=lambda c: (sum(c), labels_of(c)))
    pos_labels = tuple(labels_of(c) for c in order)
    top = max(order, key=sum)
    theta = labels_of(top)
    marks = tuple(top)
    comarks = tuple(int(a * h) for a, h in zip(marks, half))
    inv = _inverse(cartan)
    form = tuple(tuple(inv[i][j] * half[j] for j in range(rank)) for i in range(rank))

    denoms = [x.denominator for row in form for x in row] + [h.denominator for h in half]
    scale = reduce(lambda a, b: a * b // math.gcd(a, b), denoms, 1)
    form_int = tuple(tuple(int(x * scale) for x in row) for row in form)
    half_int = tuple(int(h * scale) for h in half)

    def norm_coords(c):
        return sum(c[i] * c[j] * gram[i][j] for i in range(rank) for j in range(rank))

    root_norms = tuple(int(norm_coords(c) * scale) for c in order)
    long_roots = [lab for lab, c in zip(pos_labels, order) if norm_coords(c) == 2]

    return RootSystem(
        type_label=type_label,
        rank=rank,
        cartan=cartan,
        root_lengths=tuple(lengths),
        simple_roots=cartan,
        positive_roots=pos_labels,
        positive_root_coords=tuple(order),
        highest_root=theta,
        marks=marks,
        comarks=comarks,
        dual_coxeter=1 + sum(comarks),
        weyl_vector=(1,) * rank,
        dim_g=rank + 2 * len(order),
        fundamental_group_order=int(_det(cartan)),
        long_index=lattice_index(long_roots, rank),
        simple_current_indices=(0,) + tuple(i + 1 for i, a in enumerate(marks) if a == 1),
        inverse_cartan=inv,
        form=form,
        scale=scale,
        form_int=form_int,
        half_lengths_int=half_int,
        root_norms_int=root_norms,
    )


def _check_length(rs, *weights):
    for w in weights:
        if len(w) != rs.rank:
            raise DimensionError(f"{rs.name} weights have {rs.rank} labels, got {len(w)}")


def integral_labels(rs, lam):
    """Return ``lam`` as a tuple of ints, or raise if a label is not integral."""
    _check_length(rs, lam)
    out = []
    for x in lam:
        f = Fraction(x)
        if f.denominator != 1:
            raise DomainError(f"weight {tuple(lam)} is not integral")
        out.append(int(f))
    return tuple(out)


def is_dominant(lam):
    return all(x >= 0 for x in lam)


def dominant_labels(rs, lam):
    lam = integral_labels(rs, lam)
    if not is_dominant(lam):
        raise DomainError(f"weight {lam} is not dominant")
    return lam


def inner_product(rs, lam, mu):
    """Exact normalised invariant form <lam, mu> on weights in Dynkin labels."""
    _check_length(rs, lam, mu)
    n = rs.rank
    f = rs.form
    return sum((Fraction(lam[i]) * Fraction(mu[j]) * f[i][j]
                for i in range(n) for j in range(n)), Fraction(0))


def is_in_root_lattice(rs, lam):
    """True iff the integral weight ``lam`` lies in the root lattice Q."""
    lam = integral_labels(rs, lam)
    return all(c.denominator == 1 for c in rs.root_coordinates(lam))


def weyl_dim(rs, lam):
    """Dimension of the irreducible g-module with highest weight ``lam``."""
    lam = dominant_labels(rs, lam)
    num = 1
    den = 1
    h = rs.half_lengths_int
    for c in rs.positive_root_coords:
        rho_a = sum(ci * hi for ci, hi in zip(c, h))
        num *= rho_a + sum(ci * li * hi for ci, li, hi in zip(c, lam, h))
        den *= rho_a
    q, r = divmod(num, den)
    assert r == 0
    return q


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale_weight(c, a):
    return tuple(c * x for x in a)


def reflect(rs, lam, i):
    """Simple reflection s_i (0-based node)."""
    c = lam[i]
    if not c:
        return tuple(lam)
    row = rs.cartan[i]
    return tuple(x - c * r for x, r in zip(lam, row))


def to_dominant(rs, lam):
    """Dominant Weyl conjugate of ``lam`` and the parity of the reflections used."""
    lam = list(lam)
    cartan = rs.cartan
    n = rs.rank
    sign = 1
    while True:
        for i in range(n):
            c = lam[i]
            if c < 0:
                row = cartan[i]
                for j in range(n):
                    lam[j] -= c * row[j]
                sign = -sign
                break
        else:
            return tuple(lam), sign


def to_antidominant(rs, lam, nodes=None):
    """Reflect until every label on ``nodes`` (0-based; default all) is <= 0."""
    lam = list(lam)
    nodes = range(rs.rank) if nodes is None else list(nodes)
    cartan = rs.cartan
    while True:
        for i in nodes:
            c = lam[i]
            if c > 0:
                row = cartan[i]
                lam = [x - c * r for x, r in zip(lam, row)]
                break
        else:
            return tuple(lam)


def weyl_orbit(rs, lam):
    """All weights in the Weyl orbit of ``lam``.

    Generated by descending simple reflections from the dominant
    representative, so the group itself is never materialised.
    """
    lam = to_dominant(rs, lam)[0]
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(rs.rank):
                if mu[i] > 0:
                    nu = reflect(rs, mu, i)
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
        frontier = nxt
    return seen


def orbit_size(rs, lam):
    return len(weyl_orbit(rs, lam))


def signed_orbit(rs, lam):
    """{w(lam): sign(w)} for a regular dominant ``lam`` (all labels > 0)."""
    lam = tuple(lam)
    if not all(x > 0 for x in lam):
        raise DomainError("signed_orbit needs a regular dominant weight")
    out = {lam: 1}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            s = out[mu]
            for i in range(rs.rank):
                if mu[i] > 0:
                    nu = reflect(rs, mu, i)
                    if nu not in out:
                        out[nu] = -s
                        nxt.append(nu)
        frontier = nxt
    return out
