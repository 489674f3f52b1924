import math
from fractions import Fraction

import pytest

from diagcoset.affine import (affine_qdim, central_charge, check_level_weight, level_weights,
                              s_row, sugawara_weight, sum_rule_report, vacuum_s_entry)
from diagcoset.errors import DimensionError, DomainError
from diagcoset.lie import build_root_system, inner_product

A1 = build_root_system("A1")
A2 = build_root_system("A2")
E8 = build_root_system("E8")

GRID = [("A1", 12), ("A2", 8), ("B2", 4), ("G2", 4), ("D4", 4), ("E8", 3)]
GRID_CASES = [(name, k) for name, kmax in GRID for k in range(1, kmax + 1)]


def test_level_weights_examples():
    assert level_weights(A1, 2) == [(0,), (1,), (2,)]
    assert level_weights(E8, 1) == [(0,) * 8]
    assert level_weights(E8, 2) == [(0,) * 8, (0, 0, 0, 0, 0, 0, 0, 1), (1, 0, 0, 0, 0, 0, 0, 0)]


@pytest.mark.parametrize("k", range(1, 6))
def test_level_weights_a2_count(k):
    # pairs (a, b) with a + b <= k
    assert len(level_weights(A2, k)) == (k + 1) * (k + 2) // 2


def test_level_weights_sorted_and_bounded():
    rs = build_root_system("B3")
    ws = level_weights(rs, 3)
    assert ws == sorted(ws)
    assert all(rs.level(w) <= 3 for w in ws)
    assert len(ws) == len(set(ws))


def test_check_level_weight_errors():
    with pytest.raises(DomainError):
        check_level_weight(A1, 1, (2,))
    with pytest.raises(DomainError):
        check_level_weight(A1, 0, (0,))
    with pytest.raises(DimensionError):
        check_level_weight(A2, 1, (0,))


def _a1_s(k, m):
    return math.sqrt(2 / (k + 2)) * math.sin(math.pi * (m + 1) / (k + 2))


def test_a1_s_examples():
    assert vacuum_s_entry(A1, 1, (0,)) == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    assert vacuum_s_entry(A1, 1, (1,)) == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    row = [vacuum_s_entry(A1, 2, (m,)) for m in range(3)]
    assert row == pytest.approx([0.5, 1 / math.sqrt(2), 0.5], abs=1e-12)


@pytest.mark.parametrize("k", range(1, 13))
def test_a1_s_closed_form(k):
    for (m,) in level_weights(A1, k):
        assert vacuum_s_entry(A1, k, (m,)) == pytest.approx(_a1_s(k, m), abs=1e-13)


def _qnum(n, kk):
    return math.sin(n * math.pi / kk) / math.sin(math.pi / kk)


@pytest.mark.parametrize("k", range(1, 9))
def test_a2_qdim_closed_form(k):
    kk = k + 3
    for a, b in level_weights(A2, k):
        want = _qnum(a + 1, kk) * _qnum(b + 1, kk) * _qnum(a + b + 2, kk) / _qnum(2, kk)
        assert affine_qdim(A2, k, (a, b)) == pytest.approx(want, rel=1e-12)


def test_qdim_examples():
    assert affine_qdim(A1, 2, (1,)) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert affine_qdim(A1, 2, (2,)) == pytest.approx(1, abs=1e-12)
    assert affine_qdim(E8, 2, (0, 0, 0, 0, 0, 0, 0, 1)) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert affine_qdim(E8, 2, (1, 0, 0, 0, 0, 0, 0, 0)) == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize("name,k", GRID_CASES)
def test_s_row_positive_and_qdim_floor(name, k):
    rs = build_root_system(name)
    row = s_row(rs, k)
    s0 = row.entries[(0,) * rs.rank]
    for lam, s in row.entries.items():
        assert s > 0
        assert affine_qdim(rs, k, lam) >= 1 - 1e-9
        assert affine_qdim(rs, k, lam) == pytest.approx(s / s0, rel=1e-12)
    assert affine_qdim(rs, k, (0,) * rs.rank) == 1


@pytest.mark.parametrize("name,k", GRID_CASES)
def test_sum_rules(name, k):
    rs = build_root_system(name)
    rep = sum_rule_report(rs, k)
    assert rep.residual <= 1e-9
    assert len(rep.classes) == rs.fundamental_group_order
    for c in rep.classes:
        assert c.total == pytest.approx(1 / rs.fundamental_group_order, abs=1e-9)
    assert rep.passed


def test_sum_rule_a1_classes():
    rep = sum_rule_report(A1, 2)
    assert [(c.representative, c.size) for c in rep.classes] == [((0,), 2), ((1,), 1)]
    assert [c.total for c in rep.classes] == pytest.approx([0.5, 0.5], abs=1e-12)
    assert sum_rule_report(A1, 1).residual < 1e-10
    assert sum_rule_report(E8, 2).residual < 1e-9


@pytest.mark.parametrize("name", ["B3", "C3", "F4", "E6", "E7"])
def test_sum_rules_other_types(name):
    rs = build_root_system(name)
    for k in (1, 2):
        assert sum_rule_report(rs, k).passed


def test_sugawara_examples():
    assert sugawara_weight(A1, 1, (0,)) == 0
    assert sugawara_weight(A1, 1, (1,)) == Fraction(1, 4)
    assert sugawara_weight(A1, 2, (2,)) == Fraction(1, 2)
    assert sugawara_weight(E8, 2, (0, 0, 0, 0, 0, 0, 0, 1)) == Fraction(15, 16)
    assert sugawara_weight(E8, 2, (1, 0, 0, 0, 0, 0, 0, 0)) == Fraction(3, 2)


@pytest.mark.parametrize("name,k", GRID_CASES)
def test_sugawara_formula_and_positivity(name, k):
    rs = build_root_system(name)
    for lam in level_weights(rs, k):
        two_rho = tuple(x + 2 for x in lam)
        h = inner_product(rs, lam, two_rho) / (2 * (k + rs.dual_coxeter))
        assert sugawara_weight(rs, k, lam) == h
        if any(lam):
            assert h > 0


def test_central_charge_examples():
    assert central_charge(A1, 1) == 1
    assert central_charge(E8, 1) == 8
    assert central_charge(E8, 2) == Fraction(31, 2)
    assert isinstance(central_charge(A2, 4), Fraction)
