import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclezeta.errors import DomainError, SizeCapExceeded
from cyclezeta.field_census import point_count
from cyclezeta.height_lab import (
    FunctionFieldPoint,
    RationalFunctionPoint,
    count_ff_points,
    height_ff,
    height_nv,
    sh_set_census,
)
from cyclezeta.multipoly import MultiPoly, parse_affine_polynomial
from cyclezeta.quadrature import QuadratureConfig
from cyclezeta.spaces import PrimePower, ProjSpace

Q2 = PrimePower(2)
Q3 = PrimePower(3)
CFG = QuadratureConfig(nodes_per_dim=128, tolerance=1e-3)


def poly(text, nvars=None):
    return parse_affine_polynomial(text, nvars=nvars)


def test_height_ff_examples():
    assert height_ff(FunctionFieldPoint.make(Q2, [(1,), (1, 0, 1)])) == 2
    pt = FunctionFieldPoint.make(Q2, [(0, 1), (0, 0, 1)])  # (t : t^2)
    assert pt.coords == ((1,), (0, 1))
    assert height_ff(pt) == 1
    assert height_ff(FunctionFieldPoint.make(Q2, [(1,), (1,)])) == 0
    with pytest.raises(DomainError):
        FunctionFieldPoint.make(Q2, [(), ()])


def test_height_ff_scaling_invariance():
    # scaling all coordinates by a common polynomial leaves the point fixed
    base = FunctionFieldPoint.make(Q3, [(1, 1), (0, 0, 1)])
    scaled = FunctionFieldPoint.make(Q3, [(2, 2), (0, 0, 2)])
    assert base == scaled
    common = FunctionFieldPoint.make(Q3, [(1, 1, 1), (0, 1)])
    times_t = FunctionFieldPoint.make(Q3, [(0, 1, 1, 1), (0, 0, 1)])
    assert common == times_t and height_ff(common) == height_ff(times_t)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_height_ff_randomized_rescaling(data):
    q = data.draw(st.sampled_from([Q2, Q3]))
    coords = []
    for _ in range(2):
        coeffs = data.draw(
            st.lists(st.integers(0, q.q - 1), min_size=1, max_size=3)
        )
        coords.append(tuple(coeffs))
    if all(not any(c) for c in coords):
        return
    pt = FunctionFieldPoint.make(q, coords)
    unit = data.draw(st.integers(1, q.q - 1))
    rescaled = FunctionFieldPoint.make(
        q, [tuple((c * unit) % q.p for c in coord) if q.e == 1 else coord
            for coord in coords]
    )
    if q.e == 1:
        assert height_ff(pt) == height_ff(rescaled)


def test_count_ff_points_examples():
    assert count_ff_points(Q2, 1, 0) == 3
    assert count_ff_points(Q2, 1, 1) == 9
    assert count_ff_points(Q3, 1, 0) == 4


def test_count_ff_height_zero_is_rational_points():
    for q in (Q2, Q3):
        for n in (1, 2):
            assert count_ff_points(q, n, 0) == point_count(ProjSpace(n), q, 1)


def test_count_ff_growth_regression():
    # pinned from the oracle; count(h) = 2^(2h+1) + 1, so log2(count)/h
    # decreases from ~3.17 toward 2
    counts = [count_ff_points(Q2, 1, h) for h in range(5)]
    assert counts == [3, 9, 33, 129, 513]
    ratios = [math.log2(counts[h]) / h for h in range(1, 5)]
    assert ratios == sorted(ratios, reverse=True)
    assert all(r <= 3.2 for r in ratios)


def test_count_ff_cap():
    with pytest.raises(SizeCapExceeded):
        count_ff_points(Q3, 3, 4)


def test_height_nv_examples():
    x = RationalFunctionPoint.make(1, [poly("1"), poly("z1")])
    assert height_nv(x, CFG) == pytest.approx(1 + 0.5 * math.log(2), abs=1e-3)
    for m in (1, 2, 7):
        xm = RationalFunctionPoint.make(1, [poly("1"), poly(str(m))])
        assert height_nv(xm, CFG) == pytest.approx(math.log(m), abs=1e-9)
    with pytest.raises(DomainError):
        RationalFunctionPoint.make(1, [MultiPoly(1), MultiPoly(1)])


def test_rational_point_normalization():
    # common univariate factor and content are removed, sign fixed
    x = RationalFunctionPoint.make(1, [poly("2*z1"), poly("2*z1^2")])
    assert [str(c) for c in x.coords] == ["1", "z1"]
    y = RationalFunctionPoint.make(1, [poly("-1"), poly("-z1")])
    assert [str(c) for c in y.coords] == ["1", "z1"]


def test_height_nv_nonnegative_and_permutation_invariant():
    cfg = QuadratureConfig(nodes_per_dim=64, tolerance=1e-3)
    pts = [
        [poly("1"), poly("z1 + 2")],
        [poly("z1"), poly("3*z1 - 1")],
        [poly("z1^2 + 1"), poly("2")],
    ]
    for coords in pts:
        x = RationalFunctionPoint.make(1, coords)
        h = height_nv(x, cfg)
        assert h >= -1e-6
        x_swapped = RationalFunctionPoint.make(1, coords[::-1])
        assert height_nv(x_swapped, cfg) == pytest.approx(h, abs=1e-9)
        x_neg = RationalFunctionPoint.make(1, [-c for c in coords])
        assert height_nv(x_neg, cfg) == pytest.approx(h, abs=1e-9)


def test_sh_set_census_pinned_case():
    census = sh_set_census(1, 0.25, 4.0, QuadratureConfig(nodes_per_dim=64))
    assert census.count == 841
    assert census.coeff_box == 14
    assert census.degree_cap == 1
    assert census.all_heights_ok
    assert census.max_height <= 4.0 + 1e-3
    assert census.analytic_lower_bound == pytest.approx(math.e)
    assert census.count >= census.analytic_lower_bound


def test_sh_set_census_degenerate_box():
    census = sh_set_census(1, 0.25, 0.3, QuadratureConfig(nodes_per_dim=64))
    assert census.coeff_box == 0 and census.count == 1
    assert census.all_heights_ok


def test_sh_set_census_monotone_in_h():
    cfg = QuadratureConfig(nodes_per_dim=32)
    c4 = sh_set_census(1, 0.25, 4.0, cfg, search_cap=10 ** 6)
    c5 = sh_set_census(1, 0.25, 5.0, cfg, search_cap=10 ** 6)
    assert c5.count >= c4.count


def test_sh_set_census_rejects_bad_parameters():
    cfg = QuadratureConfig(nodes_per_dim=32)
    with pytest.raises(DomainError):
        sh_set_census(1, 0.5, 2.0, cfg)  # 1 - 2da = 0
    with pytest.raises(SizeCapExceeded):
        sh_set_census(1, 0.25, 9.0, cfg, search_cap=100)
