"""Invariant grid run by ``diagcoset selfcheck``.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
property, so a single run reports every failure at once.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .affine import affine_qdim, level_weights, sugawara_weight, sum_rule_report
from .characters import (affine_weight_multiplicities, branch, graded_character,
                         ising_character_oracle, tensor_grade)
from .coset import (coset_central_charge, satisfies_selection_rule,
                    selection_triples, triple_image, verify_classification)
from .lie import build_root_system, weyl_dim
from .minimal import ISING_LABELS, minimal_model
from .oracles import (a1_level_one_vacuum_dims, e8_level_one_vacuum_dims,
                      kac_weyl_multiplicities)

QDIM_FLOOR = 1 - 1e-9

ALGEBRAS = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5",
            "E6", "E7", "E8", "F4", "G2")

# (algebra, max level) for the S-row sum rules and quantum dimension floor
SUM_RULE_GRID = (("A1", 12), ("A2", 8), ("B2", 4), ("G2", 4), ("D4", 3), ("E8", 3))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _root_system_invariants():
    bad = []
    for name in ALGEBRAS:
        rs = build_root_system(name)
        theta = rs.highest_root
        ok = (
            rs.norm_int(theta) == 2 * rs.scale
            and rs.dual_coxeter == 1 + sum(rs.comarks)
            and len(rs.positive_roots) * 2 + rs.rank == rs.dim_g
            and len(rs.simple_current_indices) == rs.fundamental_group_order
            and weyl_dim(rs, theta) == rs.dim_g
            and rs.level(theta) == 2
        )
        if not ok:
            bad.append(name)
    return not bad, f"{len(ALGEBRAS)} algebras" + (f"; failed {bad}" if bad else "")


def _sum_rules():
    bad = []
    count = 0
    for name, kmax in SUM_RULE_GRID:
        rs = build_root_system(name)
        for k in range(1, kmax + 1):
            count += 1
            if not sum_rule_report(rs, k).passed:
                bad.append((name, k))
    return not bad, f"{count} (algebra, level) pairs" + (f"; failed {bad}" if bad else "")


def _qdim_floor():
    worst = None
    for name, kmax in SUM_RULE_GRID:
        rs = build_root_system(name)
        for k in range(1, kmax + 1):
            for lam in level_weights(rs, k):
                d = affine_qdim(rs, k, lam)
                if worst is None or d < worst[0]:
                    worst = (d, name, k, lam)
    ok = worst[0] >= QDIM_FLOOR
    return ok, f"minimum qdim {worst[0]:.12g} at {worst[1]} k={worst[2]} {list(worst[3])}"


def _sugawara_positive():
    bad = []
    for name, kmax in SUM_RULE_GRID:
        rs = build_root_system(name)
        for k in range(1, kmax + 1):
            for lam in level_weights(rs, k)[1:]:
                if sugawara_weight(rs, k, lam) <= 0:
                    bad.append((name, k, lam))
    return not bad, "h > 0 away from the vacuum" + (f"; failed {bad[:3]}" if bad else "")


# (algebra, level, depth) instances for the brute-force comparison
FREUDENTHAL_GRID = (("A1", 1, 4), ("A1", 2, 4), ("A2", 1, 4), ("A2", 2, 4))


def _freudenthal_vs_bruteforce():
    bad = []
    count = 0
    for name, k, depth in FREUDENTHAL_GRID:
        rs = build_root_system(name)
        for top in level_weights(rs, k):
            fast = affine_weight_multiplicities(rs, k, top, depth)
            weights = set().union(*fast)
            slow = kac_weyl_multiplicities(rs, k, top, depth, weights)
            count += 1
            if [{w: m for w, m in g.items() if m} for g in fast] != slow:
                bad.append((name, k, top))
    return not bad, f"{count} modules" + (f"; failed {bad}" if bad else "")


def _level_one_theta():
    a1 = build_root_system("A1")
    e8 = build_root_system("E8")
    ok_a1 = graded_character(a1, 1, (0,), 6).dims(a1) == a1_level_one_vacuum_dims(6)
    ok_e8 = graded_character(e8, 1, (0,) * 8, 2).dims(e8) == e8_level_one_vacuum_dims(2)
    return ok_a1 and ok_e8, f"A1 depth 6 {'ok' if ok_a1 else 'FAIL'}, " \
                            f"E8 depth 2 {'ok' if ok_e8 else 'FAIL'}"


# (algebra, k, l, depth) for tensor and branching checks
BRANCH_GRID = (("A1", 1, 1, 6), ("A1", 1, 2, 5), ("A1", 2, 2, 4), ("A1", 1, 3, 4),
               ("A2", 1, 1, 3), ("B2", 1, 1, 2), ("G2", 1, 1, 2))


def _convolve(a, b, depth):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(depth + 1)]


def _tensor_conservation():
    bad = []
    count = 0
    for name, k, l, depth in BRANCH_GRID:
        rs = build_root_system(name)
        for top in level_weights(rs, k):
            for mid in level_weights(rs, l):
                a = graded_character(rs, k, top, depth)
                b = graded_character(rs, l, mid, depth)
                t = tensor_grade(rs, a, b, depth)
                count += 1
                if t.dims(rs) != _convolve(a.dims(rs), b.dims(rs), depth):
                    bad.append((name, k, l, top, mid))
    return not bad, f"{count} products" + (f"; failed {bad[:3]}" if bad else "")


def _branching():
    bad = []
    count = 0
    for name, k, l, depth in BRANCH_GRID:
        rs = build_root_system(name)
        for top in level_weights(rs, k):
            for mid in level_weights(rs, l):
                count += 1
                series = branch(rs, k, l, top, mid, depth)
                lhs = _convolve(graded_character(rs, k, top, depth).dims(rs),
                                graded_character(rs, l, mid, depth).dims(rs), depth)
                rhs = [0] * (depth + 1)
                nonneg = True
                for lam, b in series.items():
                    nonneg &= all(c >= 0 for c in b.coeffs)
                    if b.is_zero:
                        continue
                    if not satisfies_selection_rule(rs, top, mid, lam):
                        nonneg = False
                    dims = graded_character(rs, k + l, lam, depth).dims(rs)
                    rhs = [x + y for x, y in zip(rhs, _convolve(b.coeffs, dims, depth))]
                if not nonneg or lhs != rhs:
                    bad.append((name, k, l, top, mid))
    return not bad, f"{count} branchings nonnegative, selection-compatible and " \
                    f"dimension-conserving" + (f"; failed {bad[:3]}" if bad else "")


def _simple_current_closure():
    bad = []
    count = 0
    for name, kmax in (("A1", 4), ("A2", 3), ("A3", 2), ("D4", 2), ("D5", 1), ("E6", 2),
                       ("E7", 2), ("B3", 2), ("C3", 2)):
        rs = build_root_system(name)
        for k in range(1, kmax + 1):
            for l in range(1, kmax + 1):
                triples = set(selection_triples(rs, k, l))
                count += 1
                for t in triples:
                    if any(triple_image(rs, t, i) not in triples
                           for i in rs.simple_current_indices[1:]):
                        bad.append((name, k, l, t))
                        break
    return not bad, f"{count} (algebra, k, l) grids" + (f"; failed {bad[:3]}" if bad else "")


def _classification():
    bad = []
    grid = [("E8", k, 2) for k in (1, 2, 3)] + [("A1", k, l) for k in range(1, 4)
                                                 for l in range(1, 4)]
    grid += [("A2", 1, 1), ("A2", 1, 2), ("B2", 1, 1), ("G2", 1, 1), ("D4", 1, 1)]
    for name, k, l in grid:
        rs = build_root_system(name)
        rep = verify_classification(rs, k, l)
        # the full sum over triples is |P/Q| times the global dimension
        full = abs(rep.ratio_all - rs.fundamental_group_order) <= 1e-8 * rs.fundamental_group_order
        if not full or (not rep.short_orbits and not rep.passed):
            bad.append((name, k, l))
    return not bad, f"{len(grid)} cosets: full sum = |P/Q| Glob, " \
                    f"orbit sum = Glob without fixed points" + (f"; failed {bad}" if bad else "")


def _ising():
    rs = build_root_system("A1")
    ok = coset_central_charge(rs, 1, 1) == Fraction(1, 2)
    mm = minimal_model(3, 4)
    ok &= mm.central_charge == Fraction(1, 2)
    ok &= sorted(h for _, h in mm.spectrum) == sorted(ISING_LABELS)
    for mid in ((0,), (1,)):
        for lam, b in branch(rs, 1, 1, (0,), mid, 8).items():
            if b.is_zero:
                ok &= not satisfies_selection_rule(rs, (0,), mid, lam)
                continue
            s = b.stripped()
            h = s.offset
            ref = ising_character_oracle(h, 8 - b.first_grade)
            ok &= h in ISING_LABELS and s.coeffs == ref.coeffs
    return ok, "A1 (1,1) branching functions equal the free-fermion characters"


CHECKS = (
    ("root-system invariants", _root_system_invariants),
    ("S-row sum rules", _sum_rules),
    ("quantum dimension floor", _qdim_floor),
    ("conformal weight positivity", _sugawara_positive),
    ("Freudenthal vs brute force", _freudenthal_vs_bruteforce),
    ("level-one theta series", _level_one_theta),
    ("tensor dimension conservation", _tensor_conservation),
    ("branching nonnegativity", _branching),
    ("simple-current closure", _simple_current_closure),
    ("classification sums", _classification),
    ("Ising reproduction", _ising),
)


def run_selfcheck(names=None):
    results = []
    for name, fn in CHECKS:
        if names is not None and name not in names:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:   # report, do not abort the grid
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - t0))
    return results
