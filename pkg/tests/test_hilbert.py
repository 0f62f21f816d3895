import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from segrecalc.hilbert import (
    SignedSeries,
    add_series,
    graded_dual,
    gw_segre_cohomology,
    hadamard,
    local_cohomology_poly,
    make_series,
    module_series,
    rational_form_str,
    ring,
    ring_series,
    segre_report,
    twist,
    verify_exact_form,
    veronese,
    window,
    zero_series,
)

A2 = ring(("x0", "x1"), (1, 1))
B3 = ring(("y0", "y1", "y2"), (1, 1, 1))
UV = ring(("u", "v"), (1, 2))
XYZ = ring(("x", "y", "z"), (1, 1, 1))


def count_monomials(weights, d):
    """Enumeration oracle: exponent tuples with the given weighted degree."""
    total = 0
    ranges = [range(0, d // w + 1) for w in weights]
    for expo in itertools.product(*ranges):
        if sum(e * w for e, w in zip(expo, weights)) == d:
            total += 1
    return total


def test_ring_series_standard():
    s = ring_series(A2, window(0, 4))
    assert [s.coeff(d) for d in range(5)] == [1, 2, 3, 4, 5]


def test_ring_series_weighted_oracle():
    s = ring_series(UV, window(0, 5))
    assert [s.coeff(d) for d in range(6)] == [
        count_monomials((1, 2), d) for d in range(6)
    ]
    assert [s.coeff(d) for d in range(6)] == [1, 1, 2, 2, 3, 3]


def test_ring_series_binomial():
    assert ring_series(B3, window(0, 3)).coeff(3) == 10


def test_ring_series_negative_window():
    s = ring_series(A2, window(-3, 2))
    assert s.coeff(-2) == 0 and s.coeff(1) == 2


def test_exact_form_matches_expansion():
    for spec in (A2, UV, B3):
        assert verify_exact_form(ring_series(spec, window(0, 6)))
    assert rational_form_str(ring_series(UV, window(0, 3))) == "1/((1-t)(1-t^2))"


small_rings = st.builds(
    lambda ws: ring(tuple(f"v{i}" for i in range(len(ws))), tuple(ws)),
    st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=3),
)


@settings(max_examples=40, deadline=None)
@given(small_rings, small_rings)
def test_hadamard_counts_monomial_pairs(a_spec, b_spec):
    win = window(0, 5)
    prod = hadamard(ring_series(a_spec, win), ring_series(b_spec, win))
    wa = [w[0] for w in a_spec.weights]
    wb = [w[0] for w in b_spec.weights]
    for d in range(6):
        pairs = count_monomials(wa, d) * count_monomials(wb, d)
        assert prod.coeff(d) == pairs


def test_hadamard_examples():
    got = hadamard(ring_series(A2, window(0, 3)), ring_series(B3, window(0, 3)))
    assert [got.coeff(j) for j in range(4)] == [1, 6, 18, 40]


def test_hadamard_zero_and_disjoint_support():
    win = window(-5, 5)
    z = zero_series(1, win, certified=True)
    assert hadamard(ring_series(A2, win), z).zero_certified
    upper = make_series(1, win, {(-3,): 1, (-5,): 2}, support_upper=(-3,))
    lower = ring_series(A2, win)
    assert hadamard(upper, lower).zero_certified


def test_hadamard_rank_mismatch():
    with pytest.raises(ValueError):
        hadamard(
            ring_series(A2, window(0, 2)),
            ring_series(ring(("a", "b"), ((1, 0), (0, 1))), window((0, 0), (2, 2))),
        )


def test_veronese_diagonal():
    s = ring_series(ring(tuple("xyzw"), (1, 1, 1, 1)), window(0, 5))
    v = veronese(s, [(2,)], (0,))
    assert [v.coeff(j) for j in range(3)] == [1, 10, 35]


def test_veronese_shift_outside_support():
    s = ring_series(A2, window(0, 4))
    v = veronese(s, [(2,)], (1,))
    # odd degrees of a rank-one lattice shifted by 1: dims 2, 4
    assert [v.coeff(j) for j in range(2)] == [2, 4]
    # a shift landing between the supported degrees gives the zero series
    even = ring_series(ring(("x",), (2,)), window(0, 6))
    assert veronese(even, [(2,)], (1,)).is_zero_on_window()


def test_veronese_bigraded_diagonal():
    spec = ring(("x", "y", "u", "v"), ((1, 0), (1, 0), (0, 1), (0, 1)))
    s = ring_series(spec, window((0, 0), (4, 4)))
    v = veronese(s, [(1, 1)], (1, 0))
    assert [v.coeff(j) for j in range(3)] == [2, 6, 12]


def test_veronese_dependent_generators():
    s = ring_series(A2, window(0, 4))
    with pytest.raises(ValueError):
        veronese(ring_series(ring(("a", "b"), ((1, 0), (0, 1))), window((0, 0), (3, 3))),
                 [(1, 1), (2, 2)], (0, 0))


def test_graded_dual_reflection():
    d = graded_dual(ring_series(A2, window(0, 4)))
    assert d.coeff(-2) == 3


@settings(max_examples=40, deadline=None)
@given(small_rings)
def test_graded_dual_involution(spec):
    s = ring_series(spec, window(0, 5))
    assert graded_dual(graded_dual(s)).coeffs == s.coeffs


def cech_style_top_dims(spec, j):
    """Independent oracle: monomials with every exponent >= 1."""
    weights = [w[0] for w in spec.weights]
    target = -j - sum(weights)
    return count_monomials(weights, target)


def test_local_cohomology_against_socle_oracle():
    win = window(-8, 8)
    for spec in (A2, B3, UV):
        prof = local_cohomology_poly(spec, win)
        d = len(spec.variables)
        top = prof.per_degree[d]
        for j in range(-8, 1):
            weights = [w[0] for w in spec.weights]
            # monomials with all exponents >= 1 in degree -j
            total = 0
            for expo in itertools.product(*[range(1, 9) for _ in weights]):
                if sum(e * w for e, w in zip(expo, weights)) == -j:
                    total += 1
            assert top.coeff(j) == total
        for p in range(d):
            assert prof.per_degree[p].zero_certified


def test_local_cohomology_examples():
    win = window(-8, 8)
    prof = local_cohomology_poly(A2, win)
    assert prof.per_degree[2].coeff(-2) == 1 and prof.per_degree[2].coeff(-3) == 2
    puv = local_cohomology_poly(UV, win)
    assert max(d[0] for d, _ in puv.per_degree[2].coeffs) == -3
    single = local_cohomology_poly(ring(("x",), (1,)), win)
    assert all(single.per_degree[1].coeff(j) == 1 for j in range(-8, 0))
    # dual of the three-variable ring series, shifted by the weight sum
    dual = twist(graded_dual(ring_series(B3, window(0, 8))), (3,))
    assert dual.coeff(-4) == 3


def test_gw_segre_cohomology():
    win = window(-8, 8)
    profA = local_cohomology_poly(A2, win)
    profB = local_cohomology_poly(B3, win)
    sa, sb = module_series(A2, win), module_series(B3, win)
    gw = gw_segre_cohomology(sa, profA, sb, profB)
    assert gw.ring_dim == 4
    assert all(gw.per_degree[p].zero_certified for p in range(4))
    assert [gw.per_degree[4].coeff(j) for j in (-3, -4, -5)] == [2, 9, 24]
    # shifted module: M_3 has nonzero H^3 in degree -3
    prof3 = local_cohomology_poly(A2, win, shift=(3,))
    s3 = module_series(A2, win, shift=(3,))
    gw3 = gw_segre_cohomology(s3, prof3, sb, profB)
    assert gw3.per_degree[3].coeff(-3) == 1
    # CM shifts -1..2
    for s in (-1, 0, 1, 2):
        profS = local_cohomology_poly(A2, win, shift=(s,))
        gws = gw_segre_cohomology(module_series(A2, win, shift=(s,)), profS, sb, profB)
        assert all(gws.per_degree[p].zero_certified for p in range(4))


def test_gw_hypothesis_rejected():
    win = window(-6, 6)
    bad = local_cohomology_poly(ring(("x",), (1,)), win)
    sa = module_series(ring(("x",), (1,)), win)
    with pytest.raises(ValueError):
        gw_segre_cohomology(sa, bad, sa, bad)


def test_segre_reports():
    rep = segre_report(XYZ, UV, shifts=(0,))
    assert rep.gorenstein and rep.a_invariant == -3 and rep.dimension == 4
    rep5 = segre_report(XYZ, XYZ, shifts=(0,))
    assert rep5.gorenstein and rep5.a_invariant == -3 and rep5.dimension == 5
    rep4 = segre_report(A2, B3, shifts=(0, 3))
    assert not rep4.gorenstein and rep4.a_invariant == -3 and rep4.dimension == 4
    assert rep4.shifts[0]["cm"] and not rep4.shifts[3]["cm"]


def test_segre_report_rejects_small_first_factor():
    with pytest.raises(ValueError):
        segre_report(ring(("x",), (1,)), UV, shifts=(0,))


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=2), min_size=2, max_size=3),
    st.lists(st.integers(min_value=1, max_value=2), min_size=1, max_size=3),
)
def test_gorenstein_criterion_implies_series_test(wa, wb):
    a = ring(tuple(f"a{i}" for i in range(len(wa))), tuple(wa))
    b = ring(tuple(f"b{i}" for i in range(len(wb))), tuple(wb))
    rep = segre_report(a, b, shifts=(0,))
    if rep.gorenstein_criterion_test:
        assert rep.gorenstein_series_test


def test_signed_series_allows_negative():
    s = make_series(1, window(0, 2), {(1,): -2}, signed=True)
    assert isinstance(s, SignedSeries) and s.coeff(1) == -2
    t = add_series([twist(s, (0,))])
    assert t.coeff(1) == -2
