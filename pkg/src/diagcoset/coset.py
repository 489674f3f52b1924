"""Coset modules of C(L(k+l,0), L(k,0) x L(l,0)): labels, quantum dimensions,
simple-current identifications and the counting criterion for a complete list
of irreducible modules.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .affine import affine_qdim, central_charge, check_level_weight, level_weights, \
    sugawara_weight, vacuum_s_entry
from .errors import DomainError
from .lie import add, is_in_root_lattice, sub, to_antidominant

DEFAULT_TOL = 1e-8


@dataclass(frozen=True, order=True)
class CosetTriple:
    """Label (top, mid, bot) of the multiplicity space of L(k+l, bot) in
    L(k, top) x L(l, mid)."""
    top: tuple
    mid: tuple
    bot: tuple
    k: int = field(compare=False)
    l: int = field(compare=False)


def coset_central_charge(rs, k, l):
    return central_charge(rs, k) + central_charge(rs, l) - central_charge(rs, k + l)


def satisfies_selection_rule(rs, top, mid, bot):
    return is_in_root_lattice(rs, sub(add(top, mid), bot))


def selection_triples(rs, k, l):
    """All label triples allowed by the root-lattice selection rule."""
    tops, mids, bots = level_weights(rs, k), level_weights(rs, l), level_weights(rs, k + l)
    return [CosetTriple(a, b, c, k, l)
            for a in tops for b in mids for c in bots
            if satisfies_selection_rule(rs, a, b, c)]


def _checked(rs, t):
    top = check_level_weight(rs, t.k, t.top)
    mid = check_level_weight(rs, t.l, t.mid)
    bot = check_level_weight(rs, t.k + t.l, t.bot)
    if not satisfies_selection_rule(rs, top, mid, bot):
        raise DomainError(f"{(top, mid, bot)} violates the selection rule")
    return top, mid, bot


def coset_qdim(rs, t):
    top, mid, bot = _checked(rs, t)
    return affine_qdim(rs, t.k, top) * affine_qdim(rs, t.l, mid) * affine_qdim(rs, t.k + t.l, bot)


def baseline_weight(rs, t):
    """h_top + h_mid - h_bot.  The true lowest weight adds the first nonzero
    grade of the branching function."""
    return (sugawara_weight(rs, t.k, t.top) + sugawara_weight(rs, t.l, t.mid)
            - sugawara_weight(rs, t.k + t.l, t.bot))


def coset_global_dim(rs, k, l):
    zero = (0,) * rs.rank
    s = vacuum_s_entry(rs, k, zero) * vacuum_s_entry(rs, l, zero) * vacuum_s_entry(rs, k + l, zero)
    return 1.0 / (rs.fundamental_group_order ** 2 * s * s)


def affine_labels(rs, k, lam):
    """[k - <lam, theta>; lam_1, ..., lam_n]."""
    return (k - rs.level(lam),) + tuple(lam)


def simple_current_image(rs, k, lam, i):
    """Image of lam in P_+^k under the simple current indexed by i in J.

    Realised as lam -> k Lambda_i + w_i w_0 (lam), where w_0 is the longest
    Weyl element and w_i the longest element of the parabolic subgroup
    fixing Lambda_i.  On affine labels this is the extended-diagram
    symmetry taking node 0 to node i.
    """
    lam = check_level_weight(rs, k, lam)
    if i not in rs.simple_current_indices:
        raise DomainError(f"{i} is not a simple-current index of {rs.name} "
                          f"(J = {rs.simple_current_indices})")
    if i == 0:
        return lam
    mu = to_antidominant(rs, lam)
    # w_i maps the antidominant chamber of its parabolic to the dominant one
    mu = tuple(-x for x in to_antidominant(rs, tuple(-x for x in mu),
                                           [j for j in range(rs.rank) if j != i - 1]))
    mu = tuple(x + (k if j == i - 1 else 0) for j, x in enumerate(mu))
    return check_level_weight(rs, k, mu)


def triple_image(rs, t, i):
    return CosetTriple(simple_current_image(rs, t.k, t.top, i),
                       simple_current_image(rs, t.l, t.mid, i),
                       simple_current_image(rs, t.k + t.l, t.bot, i), t.k, t.l)


@dataclass(frozen=True)
class Orbit:
    representative: CosetTriple
    members: tuple

    @property
    def size(self):
        return len(self.members)


def dedup_orbits(rs, k, l, triples=None):
    """Partition triples into simple-current orbits, least member first."""
    if triples is None:
        triples = selection_triples(rs, k, l)
    todo = set(triples)
    orbits = []
    for t in sorted(triples):
        if t not in todo:
            continue
        orbit = {t}
        frontier = [t]
        while frontier:
            nxt = []
            for u in frontier:
                for i in rs.simple_current_indices[1:]:
                    v = triple_image(rs, u, i)
                    if v not in orbit:
                        orbit.add(v)
                        nxt.append(v)
            frontier = nxt
        todo -= orbit
        members = tuple(sorted(orbit))
        orbits.append(Orbit(members[0], members))
    return orbits


@dataclass(frozen=True)
class TripleRow:
    triple: CosetTriple
    qdim: float
    baseline: Fraction


@dataclass(frozen=True)
class ClassificationReport:
    algebra: str
    k: int
    l: int
    central_charge: Fraction
    triples: tuple          # TripleRow for every selection triple
    orbits: tuple           # Orbit
    candidates: tuple       # TripleRow for the candidate list being tested
    glob: float
    sum_sq_all: float
    sum_sq_candidates: float
    tolerance: float
    short_orbits: tuple     # orbit representatives with size < |J|

    @property
    def residual(self):
        return abs(self.sum_sq_candidates - self.glob) / self.glob

    @property
    def ratio_all(self):
        return self.sum_sq_all / self.glob

    @property
    def passed(self):
        return self.residual <= self.tolerance


def verify_classification(rs, k, l, candidates=None, tol=DEFAULT_TOL):
    """Test whether the candidates' squared quantum dimensions sum to Glob.

    ``candidates`` defaults to one representative per simple-current orbit.
    Failing the test is reported through ``passed``; it is not an error.
    """
    triples = selection_triples(rs, k, l)
    rows = {t: TripleRow(t, coset_qdim(rs, t), baseline_weight(rs, t)) for t in triples}
    orbits = dedup_orbits(rs, k, l, triples)
    if candidates is None:
        candidates = [o.representative for o in orbits]
    cand_rows = tuple(rows[t] if t in rows else TripleRow(t, coset_qdim(rs, t),
                                                          baseline_weight(rs, t))
                      for t in candidates)
    nj = len(rs.simple_current_indices)
    return ClassificationReport(
        algebra=rs.name, k=k, l=l,
        central_charge=coset_central_charge(rs, k, l),
        triples=tuple(rows.values()),
        orbits=tuple(orbits),
        candidates=cand_rows,
        glob=coset_global_dim(rs, k, l),
        sum_sq_all=math.fsum(r.qdim ** 2 for r in rows.values()),
        sum_sq_candidates=math.fsum(r.qdim ** 2 for r in cand_rows),
        tolerance=tol,
        short_orbits=tuple(o.representative for o in orbits if o.size < nj),
    )
