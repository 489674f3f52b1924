"""Finite-dimensional g-modules: dominant weight multiplicities (Freudenthal),
decomposition of characters into irreducibles, and tensor products by the
Racah-Speiser (Klimyk) signed-reflection rule.

Characters are "orbit-compressed": a dict from dominant weight to the
multiplicity of that weight (and hence of every weight in its Weyl orbit).
Decompositions are dicts from highest weight to the number of copies.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import ConsistencyError
from .lie import dominant_labels, is_dominant, to_dominant, weyl_dim, weyl_orbit


def dominant_weights_below(rs, top):
    """Dominant weights mu <= top in the dominance order.

    Each such mu is reachable from top by subtracting positive roots one at a
    time while staying dominant.
    """
    top = tuple(top)
    seen = {top}
    frontier = [top]
    roots = rs.positive_roots
    while frontier:
        nxt = []
        for mu in frontier:
            for a in roots:
                nu = tuple(x - y for x, y in zip(mu, a))
                if nu not in seen and is_dominant(nu):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return seen


def by_height(rs, weights, reverse=True):
    """Sort weights by height in the root basis (highest first by default)."""
    return sorted(weights, key=lambda w: (rs.height(w), w), reverse=reverse)


@lru_cache(maxsize=4096)
def _multiplicities(rs, top):
    shifted_top = tuple(x + 1 for x in top)
    target = rs.norm_int(shifted_top)
    mults = {top: 1}
    for mu in by_height(rs, dominant_weights_below(rs, top))[1:]:
        denom = target - rs.norm_int(tuple(x + 1 for x in mu))
        total = 0
        for coords, root, norm in zip(rs.positive_root_coords, rs.positive_roots,
                                      rs.root_norms_int):
            ip = rs.pair_root_int(mu, coords)
            nu = mu
            j = 1
            while True:
                nu = tuple(x + y for x, y in zip(nu, root))
                m = mults.get(to_dominant(rs, nu)[0], 0)
                if not m:
                    break
                total += (ip + j * norm) * m
                j += 1
        if total:
            m, r = divmod(2 * total, denom)
            if r or m < 0:
                raise ConsistencyError(f"Freudenthal division failed at {mu} in V({top})")
            mults[mu] = m
    return mults


def weight_multiplicities(rs, top):
    """{dominant mu: dim V(top)_mu} for the irreducible module V(top)."""
    return dict(_multiplicities(rs, dominant_labels(rs, top)))


def character_dim(rs, mults):
    return sum(m * len(weyl_orbit(rs, mu)) for mu, m in mults.items())


def decompose(rs, mults):
    """Split an orbit-compressed character into irreducible constituents."""
    rest = {mu: m for mu, m in mults.items() if m}
    out = {}
    while rest:
        top = by_height(rs, rest)[0]
        c = rest[top]
        if c < 0:
            raise ConsistencyError(f"negative multiplicity {c} at {top}")
        out[top] = c
        for mu, m in _multiplicities(rs, top).items():
            left = rest.get(mu, 0) - c * m
            if left:
                rest[mu] = left
            else:
                rest.pop(mu, None)
    return out


def decomposition_dim(rs, decomp):
    return sum(m * weyl_dim(rs, lam) for lam, m in decomp.items())


def _all_weights(rs, top):
    for mu, m in _multiplicities(rs, top).items():
        for nu in weyl_orbit(rs, mu):
            yield nu, m


@lru_cache(maxsize=65536)
def _tensor(rs, a, b):
    if weyl_dim(rs, a) < weyl_dim(rs, b):
        a, b = b, a
    out = {}
    shifted = tuple(x + 1 for x in a)
    for nu, m in _all_weights(rs, b):
        dom, sign = to_dominant(rs, tuple(x + y for x, y in zip(shifted, nu)))
        if 0 in dom:
            continue
        lam = tuple(x - 1 for x in dom)
        out[lam] = out.get(lam, 0) + sign * m
    return {lam: m for lam, m in sorted(out.items()) if m}


def tensor_decompose(rs, a, b):
    """Irreducible decomposition of V(a) x V(b)."""
    out = _tensor(rs, dominant_labels(rs, a), dominant_labels(rs, b))
    if any(m < 0 for m in out.values()):
        raise ConsistencyError(f"negative Racah-Speiser coefficient in V({a}) x V({b})")
    return dict(out)
