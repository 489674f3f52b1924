"""Level-k integrable weights and the vacuum row of the Kac-Peterson S-matrix."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .lie import dominant_labels, inner_product, is_in_root_lattice, sub

DEFAULT_TOL = 1e-9


def check_level_weight(rs, k, lam):
    """Validate ``lam`` as an element of P_+^k and return it as an int tuple."""
    if int(k) != k or k < 1:
        raise DomainError(f"level must be a positive integer, got {k}")
    lam = dominant_labels(rs, lam)
    if rs.level(lam) > k:
        raise DomainError(f"{lam} has level {rs.level(lam)} > {k} for {rs.name}")
    return lam


def level_weights(rs, k):
    """P_+^k in lexicographic order of the Dynkin labels (vacuum first)."""
    if int(k) != k or k < 1:
        raise DomainError(f"level must be a positive integer, got {k}")
    out = []
    comarks = rs.comarks

    def extend(prefix, budget):
        i = len(prefix)
        if i == rs.rank:
            out.append(tuple(prefix))
            return
        for m in range(budget // comarks[i] + 1):
            extend(prefix + [m], budget - m * comarks[i])

    extend([], int(k))
    out.sort()
    return out


def _sine_factors(rs, k, lam):
    """The exact rationals r = <lam+rho, alpha>/(k+h) for alpha > 0, each in (0, 1)."""
    n = (k + rs.dual_coxeter) * rs.scale
    shifted = tuple(x + 1 for x in lam)
    return [Fraction(rs.pair_root_int(shifted, c), n) for c in rs.positive_root_coords]


def _sin_pi(r):
    # sin(pi r) for r in (0, 1); fold to (0, 1/2] to keep the argument small
    if r > Fraction(1, 2):
        r = 1 - r
    return math.sin(math.pi * float(r))


def vacuum_s_entry(rs, k, lam):
    """S_{0,lam} for the level-k affine algebra.

    |P/(k+h)Q_L|^(-1/2) * prod_{alpha>0} 2 sin(pi <lam+rho, alpha>/(k+h)),
    with |P/(k+h)Q_L| = (k+h)^rank |P/Q_L|.
    """
    lam = check_level_weight(rs, k, lam)
    n = k + rs.dual_coxeter
    prod = 1.0
    for r in _sine_factors(rs, k, lam):
        prod *= 2.0 * _sin_pi(r)
    return prod / math.sqrt(float(n) ** rs.rank * rs.long_index)


def affine_qdim(rs, k, lam):
    """Quantum dimension S_{0,lam}/S_{0,0}, formed factor by factor."""
    lam = check_level_weight(rs, k, lam)
    zero = (0,) * rs.rank
    q = 1.0
    for a, b in zip(_sine_factors(rs, k, lam), _sine_factors(rs, k, zero)):
        q *= _sin_pi(a) / _sin_pi(b)
    return q


def sugawara_weight(rs, k, lam):
    """Lowest L_0 eigenvalue <lam, lam+2rho>/(2(k+h)) of L(k, lam)."""
    lam = check_level_weight(rs, k, lam)
    two_rho = tuple(2 for _ in lam)
    return inner_product(rs, lam, tuple(a + b for a, b in zip(lam, two_rho))) / (
        2 * (k + rs.dual_coxeter))


def central_charge(rs, k):
    if int(k) != k or k < 1:
        raise DomainError(f"level must be a positive integer, got {k}")
    return Fraction(rs.dim_g * k, k + rs.dual_coxeter)


@dataclass(frozen=True)
class SRow:
    algebra: str
    level: int
    entries: dict      # weight -> S_{0,weight}, in level_weights order
    precision: float


def s_row(rs, k, tol=DEFAULT_TOL):
    return SRow(rs.name, k, {lam: vacuum_s_entry(rs, k, lam) for lam in level_weights(rs, k)}, tol)


def congruence_classes(rs, weights):
    """Group integral weights by their class in P/Q, preserving input order."""
    classes = []
    for lam in weights:
        for cls in classes:
            if is_in_root_lattice(rs, sub(lam, cls[0])):
                cls.append(lam)
                break
        else:
            classes.append([lam])
    return classes


@dataclass(frozen=True)
class ClassResidual:
    representative: tuple
    size: int
    total: float
    residual: float


@dataclass(frozen=True)
class SumRuleReport:
    algebra: str
    level: int
    row: SRow
    total: float
    residual: float
    classes: tuple
    tolerance: float

    @property
    def passed(self):
        return self.residual <= self.tolerance and all(
            c.residual <= self.tolerance for c in self.classes)


def sum_rule_report(rs, k, tol=DEFAULT_TOL):
    """Check sum S_{0,lam}^2 = 1 and its refinement 1/|P/Q| per class mod Q."""
    row = s_row(rs, k, tol)
    total = math.fsum(s * s for s in row.entries.values())
    target = 1.0 / rs.fundamental_group_order
    classes = []
    for cls in congruence_classes(rs, list(row.entries)):
        t = math.fsum(row.entries[lam] ** 2 for lam in cls)
        classes.append(ClassResidual(cls[0], len(cls), t, abs(t - target)))
    return SumRuleReport(rs.name, k, row, total, abs(total - 1.0), tuple(classes), tol)
