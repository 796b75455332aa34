import math

import numpy as np
import pytest

from lienardqm.eigensolver import (TridiagonalOperator, YGrid, build_operator,
                                   default_y_max, eigenvector,
                                   lowest_eigenvalues, sign_changes,
                                   verify_spectrum)
from lienardqm.params import AmbiguityParams, PhysicalParams, derive_params
from lienardqm.susy import spectrum

PHYS = PhysicalParams(omega=1.0, k=1.0)
AMB0 = AmbiguityParams(alpha=0.0, gamma=0.0)
AMB19 = AmbiguityParams(alpha=19.0, gamma=1.0)


def test_ygrid_geometry():
    grid = YGrid(y_max=150.0, n_points=6000)
    assert grid.spacing == pytest.approx(150.0 / 6001.0, rel=1e-15)
    pts = grid.points
    assert pts[0] == pytest.approx(grid.spacing)
    assert pts[-1] < 150.0
    fine = grid.refined()
    assert fine.spacing == pytest.approx(grid.spacing / 2.0, rel=1e-12)
    with pytest.raises(ValueError):
        YGrid(y_max=150.0, n_points=400)
    with pytest.raises(ValueError):
        YGrid(y_max=-1.0, n_points=1000)


def test_default_domain_formula():
    assert default_y_max(9.0, 3) == 206.0
    assert default_y_max(10.0, 0) == 90.0


def test_operator_structure():
    grid = YGrid(y_max=150.0, n_points=600 + 400)
    derived = derive_params(PHYS, AMB19)
    op = build_operator(PHYS, derived, grid)
    assert np.all(op.off_diagonal < 0.0)
    assert op.dim == 1000
    # spot-check the stencil against its definition at an interior index
    h = grid.spacing
    y = grid.points
    i = 137
    expected_diag = ((y[i] - h / 2 + y[i] + h / 2) / h ** 2
                     + derived.lam ** 2 / y[i] + y[i] / 4.0 - derived.a_script)
    assert op.diagonal[i] == pytest.approx(expected_diag, rel=1e-14)
    assert op.off_diagonal[i] == pytest.approx(-(y[i] + h / 2) / h ** 2, rel=1e-14)


def test_two_by_two_diagonal_matrix():
    op = TridiagonalOperator(diagonal=np.array([1.0, 3.0]),
                             off_diagonal=np.array([0.0]), scale=1.0)
    np.testing.assert_allclose(lowest_eigenvalues(op, 2), [1.0, 3.0],
                               atol=1e-9)


def test_dirichlet_laplacian_lowest_eigenvalue():
    # -u'' on (0, 1): lowest eigenvalue pi^2, classical closed form
    n = 1000
    h = 1.0 / (n + 1)
    op = TridiagonalOperator(diagonal=np.full(n, 2.0 / h ** 2),
                             off_diagonal=np.full(n - 1, -1.0 / h ** 2),
                             scale=1.0)
    lowest = lowest_eigenvalues(op, 1)[0]
    assert abs(lowest - math.pi ** 2) / math.pi ** 2 < 1e-3


def test_sturm_count_between_levels():
    grid = YGrid(y_max=150.0, n_points=2000)
    op = build_operator(PHYS, derive_params(PHYS, AMB0), grid)
    energies = spectrum(PHYS, AMB0, 1).energies
    assert op.count_below(0.5 * (energies[0] + energies[1])) == 1


def test_count_validation():
    op = TridiagonalOperator(diagonal=np.arange(12.0),
                             off_diagonal=np.full(11, -0.1), scale=1.0)
    with pytest.raises(ValueError):
        lowest_eigenvalues(op, 0)
    with pytest.raises(ValueError):
        lowest_eigenvalues(op, 11)


def test_verify_spectrum_against_algebraic_levels():
    grid = YGrid(y_max=150.0, n_points=6000)
    for amb, e0 in ((AMB0, 0.5), (AMB19, 1.5)):
        cmp = verify_spectrum(PHYS, amb, 2, grid)
        assert cmp.numeric[0] == pytest.approx(e0, abs=1e-5)
        assert np.max(cmp.errors) < 1e-5
        assert np.all((cmp.convergence_ratios > 3.5)
                      & (cmp.convergence_ratios < 4.5))


def test_numeric_spacings_approach_hbar_omega():
    grid = YGrid(y_max=150.0, n_points=6000)
    cmp = verify_spectrum(PHYS, AMB19, 3, grid)
    coarse = np.max(np.abs(np.diff(cmp.numeric) - 1.0))
    fine = np.max(np.abs(np.diff(cmp.refined_numeric) - 1.0))
    assert coarse < 1e-5
    assert fine < coarse


def test_eigenvalues_increasing_and_simple():
    grid = YGrid(y_max=150.0, n_points=3000)
    op = build_operator(PHYS, derive_params(PHYS, AMB19), grid)
    vals = lowest_eigenvalues(op, 6)
    gaps = np.diff(vals)
    assert np.all(gaps > 0.9)  # simple, separated by ~hbar omega


def test_truncation_insensitivity_at_fixed_spacing():
    # widen the domain by 50% at identical spacing: pure truncation effect
    base = YGrid(y_max=150.0, n_points=2999)       # h = 150/3000
    wide = YGrid(y_max=225.0, n_points=4499)       # h = 225/4500, identical
    assert base.spacing == wide.spacing
    derived = derive_params(PHYS, AMB19)
    v_base = lowest_eigenvalues(build_operator(PHYS, derived, base), 4)
    v_wide = lowest_eigenvalues(build_operator(PHYS, derived, wide), 4)
    assert np.max(np.abs(v_base - v_wide)) < 1e-8


def test_eigenvector_node_counts():
    grid = YGrid(y_max=150.0, n_points=1500)
    op = build_operator(PHYS, derive_params(PHYS, AMB0), grid)
    vals = lowest_eigenvalues(op, 4)
    for n in range(4):
        vec = eigenvector(op, vals[n])
        assert sign_changes(vec) == n


def test_verify_spectrum_validation():
    grid = YGrid(y_max=150.0, n_points=1000)
    with pytest.raises(ValueError):
        verify_spectrum(PHYS, AMB0, 6, grid)
