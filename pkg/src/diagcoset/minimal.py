"""Virasoro minimal models: central charges, conformal weights, Ising fusion."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


def _check(p, q):
    if int(p) != p or int(q) != q or p < 2 or q < 2 or math.gcd(int(p), int(q)) != 1:
        raise DomainError(f"(p, q) = ({p}, {q}) must be coprime integers >= 2")
    return int(p), int(q)


def minimal_central_charge(p, q):
    p, q = _check(p, q)
    return 1 - Fraction(6 * (p - q) ** 2, p * q)


def kac_weight(p, q, r, s):
    return Fraction((r * p - s * q) ** 2 - (p - q) ** 2, 4 * p * q)


def minimal_weights(p, q):
    """One ((r, s), h) per irreducible module, sorted by h.

    The Kac table 1 <= r <= q-1, 1 <= s <= p-1 carries each module twice,
    via (r, s) ~ (q-r, p-s).  From each pair the member with r + s even is
    kept; if both members have the same parity, the one with smaller r.
    """
    p, q = _check(p, q)
    reps = {}
    for r in range(1, q):
        for s in range(1, p):
            key = min((r, s), (q - r, p - s))
            cand = (r, s)
            old = reps.get(key)
            if old is None or _prefer(cand, old):
                reps[key] = cand
    rows = [((r, s), kac_weight(p, q, r, s)) for r, s in reps.values()]
    rows.sort(key=lambda row: (row[1], row[0]))
    return rows


def _prefer(a, b):
    ea, eb = sum(a) % 2 == 0, sum(b) % 2 == 0
    if ea != eb:
        return ea
    return a < b


@dataclass(frozen=True)
class MinimalModel:
    p: int
    q: int
    central_charge: Fraction
    spectrum: tuple


def minimal_model(p, q):
    return MinimalModel(p, q, minimal_central_charge(p, q), tuple(minimal_weights(p, q)))


ISING_LABELS = (Fraction(0), Fraction(1, 2), Fraction(1, 16))

_HALF, _SIGMA = Fraction(1, 2), Fraction(1, 16)
_ISING = {
    (_HALF, _HALF): (Fraction(0),),
    (_SIGMA, _HALF): (_SIGMA,),
    (_SIGMA, _SIGMA): (Fraction(0), _HALF),
}


def _ising_label(x):
    try:
        f = Fraction(x)
    except (TypeError, ValueError):
        raise DomainError(f"not an Ising label: {x!r}") from None
    if f not in ISING_LABELS:
        raise DomainError(f"not an Ising label: {x!r}")
    return f


def ising_fuse(a, b):
    """Fusion product of two irreducible L(1/2, 0)-modules, as a Counter of labels."""
    a, b = _ising_label(a), _ising_label(b)
    if a == 0:
        return Counter([b])
    if b == 0:
        return Counter([a])
    out = _ISING.get((a, b)) or _ISING[(b, a)]
    return Counter(out)
