import pytest

from segrecalc.hilbert import ring
from segrecalc.gradedlin.modules import DiagonalModule, FreeModule
from segrecalc.gradedlin.resolution import (
    CertificationError,
    HomCalculator,
    ext_dims,
    free_resolution,
    generation_degrees,
    hom_segre_check,
    hom_space,
    stable_hom_dims,
)

A2 = ring(("x0", "x1"), (1, 1))
B3 = ring(("y0", "y1", "y2"), (1, 1, 1))
XYZ = ring(("x", "y", "z"), (1, 1, 1))
UV = ring(("u", "v"), (1, 2))


def M(i, pair=(A2, B3)):
    return DiagonalModule(pair[0], pair[1], i)


def test_generation_degrees():
    assert generation_degrees(M(-1), 0, 4) == {1: 3}
    assert generation_degrees(M(0), 0, 4) == {0: 1}
    assert generation_degrees(M(2), 0, 4) == {0: 3}
    assert generation_degrees(M(-3), 0, 5) == {3: 10}
    # weighted second factor: extra generators appear above the bottom degree
    wm = DiagonalModule(XYZ, UV, -1)
    assert generation_degrees(wm, 0, 4) == {1: 1, 2: 3}


def test_generation_certification_error():
    with pytest.raises(CertificationError):
        generation_degrees(M(-3), 0, 2)  # bound above the window top


def test_generation_degrees_of_deep_syzygy():
    # the third syzygy of the canonical module has twelve generators in
    # degree 3; its twist by 3 is the degree-0-generated representative
    res = free_resolution(M(1), 3, 0, 6)
    assert generation_degrees(res.syzygy(3), 0, 6) == {3: 12}
    # the twisted summand M_2(-1) is concentrated in degrees >= 1 with a
    # three-dimensional bottom piece
    twisted = DiagonalModule(A2, B3, 2, twist=1)
    assert twisted.min_degree == 1 and twisted.dim(1) == 3
    assert generation_degrees(twisted, 0, 4) == {1: 3}


def test_free_resolution_betti():
    res = free_resolution(M(1), 4, 0, 7)
    assert res.betti_table() == [
        [0, 0],
        [1, 1, 1],
        [2] * 6,
        [3] * 12,
        [4] * 24,
    ]
    # first syzygy is the twisted diagonal module
    syz1 = res.syzygy(1)
    for j in range(0, 8):
        assert syz1.dim(j) == M(-1).dim(j)
    # second syzygy dims agree with the image in the second-factor
    # Koszul diagonal
    om2 = res.syzygy(2)
    assert [om2.dim(j) for j in range(0, 8)] == [0, 0, 6, 24, 60, 120, 210, 336]


def test_resolution_of_free_module():
    res = free_resolution(M(0), 2, 0, 5)
    assert res.betti_table()[0] == [0]
    assert res.betti_table()[1] == []


def test_ext_values():
    res = free_resolution(M(1), 5, 0, 8)
    om2, om3 = res.syzygy(2), res.syzygy(3)
    tab = ext_dims(om2, M(2), [1], range(-5, 3), 0, 8)
    assert {d: v for (i, d), v in tab.items() if v} == {-3: 1}
    tab = ext_dims(om2, M(3), [1], range(-5, 3), 0, 8)
    assert {d: v for (i, d), v in tab.items() if v} == {-3: 2}
    tab = ext_dims(M(1), M(0), [1, 2, 3], range(-4, 3), 0, 8, resolution=res)
    assert not any(tab.values())
    tab = ext_dims(om3, om3, [1], range(-2, 2), 0, 8)
    assert sum(tab.values()) > 0


def test_ext_depth_certification():
    res = free_resolution(M(1), 1, 0, 5)
    with pytest.raises(CertificationError):
        ext_dims(M(1), M(0), [2], [0], 0, 5, resolution=res)


def test_hom_identifications():
    # Hom(M_i, M_j) matches M_(j-i) degreewise for |i|, |j| <= 3
    for pair_key in ((A2, B3), (XYZ, UV)):
        for i in range(-3, 4):
            for j in range(-3, 4):
                Mi = DiagonalModule(pair_key[0], pair_key[1], i)
                Mj = DiagonalModule(pair_key[0], pair_key[1], j)
                assert hom_segre_check(Mi, Mj, range(0, 2), 0, 7), (pair_key, i, j)


def test_hom_space_free_source():
    hs = hom_space(M(0), M(1), 0, 0, 5)
    assert len(hs.basis) == M(1).dim(0)


def test_stable_end_omega():
    calc = HomCalculator(A2, B3, 0, 7)
    sh = stable_hom_dims(calc, M(1), M(1), range(0, 4))
    assert sh[0] == (1, 1)
    assert all(v[1] == 0 for d, v in sh.items() if d > 0)


def test_resolution_window_exactness():
    # cover maps are exact per degree: kernel dims match the alternating sums
    res = free_resolution(M(1), 2, 0, 6)
    om1 = res.syzygy(1)
    for j in range(0, 7):
        f0_dim = FreeModule(A2, B3, res.frees[0].gens).dim(j)
        assert f0_dim - om1.dim(j) == M(1).dim(j)


def test_syzygy_requires_window():
    res = free_resolution(M(1), 2, 0, 5)
    with pytest.raises(KeyError):
        res.syzygy(1).dim(9)
