"""Verification suite behind the `verify` CLI subcommand.

Each check compares a measured quantity against its expected value at a
fixed tolerance and yields a ReportRecord; the suite passing as a whole is
the artifact's single user-facing health gate. Everything here is
deterministic: sample points and parameter tables are fixed, never drawn
from a seeded generator, so repeated runs emit identical bytes.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import classical, eigensolver, quantize, susy, wavefn
from .params import AmbiguityParams, PhysicalParams, derive_params

# Phase-space states for the Legendre-transform identity; states that fall
# outside the phase constraint for the given parameters are skipped.
_STATES = ((0.0, 0.0), (0.3, -0.2), (1.1, 0.4), (-0.7, 0.9), (0.5, 1.7))


def _product_table(a_script, user_product):
    """Admissible ambiguity products spanning the bound, scaled to a_script."""
    aa = a_script ** 2
    return (0.0, 0.04 * aa, 0.23 * aa, -0.5 * aa, 2.0 * aa, user_product)


@dataclass(frozen=True)
class ReportRecord:
    """One verification line: what was measured, what was expected, verdict."""

    name: str
    params: str
    measured: float
    expected: float
    tolerance: float
    passed: bool

    @classmethod
    def from_absolute(cls, name, params, measured, expected, tolerance):
        return cls(name=name, params=params, measured=float(measured),
                   expected=float(expected), tolerance=float(tolerance),
                   passed=bool(abs(measured - expected) <= tolerance))


def _echo(phys, amb):
    return (f"omega={phys.omega:g} k={phys.k:g} hbar={phys.hbar:g} "
            f"alpha={amb.alpha:g} gamma={amb.gamma:g}")


def _classical_checks(phys, amb):
    echo = _echo(phys, amb)
    rows = []
    amplitude = min(1.0, 0.5 * 3.0 * phys.omega / phys.k)
    period = 2.0 * math.pi / phys.omega
    step = 1e-3
    initial = classical.OscillatorState(
        x=classical.analytic_solution(phys, amplitude, 0.0, 0.0),
        v=classical.analytic_velocity(phys, amplitude, 0.0, 0.0))
    traj = classical.integrate_lienard(phys, initial, period, step)
    exact = classical.analytic_solution(phys, amplitude, 0.0, traj.times)
    rows.append(ReportRecord.from_absolute(
        "classical.rk4-vs-closed-form", echo,
        np.max(np.abs(traj.positions - exact)), 0.0, 1e-6))

    momenta = np.array([classical.conjugate_momentum(
        phys, classical.OscillatorState(x, v))
        for x, v in zip(traj.positions, traj.velocities)])
    energy = np.array([classical.hamiltonian_classical(phys, x, p)
                       for x, p in zip(traj.positions, momenta)])
    rows.append(ReportRecord.from_absolute(
        "classical.energy-drift", echo,
        np.max(np.abs(energy - energy[0])) / abs(energy[0]), 0.0, 1e-8))

    worst = 0.0
    for x, v in _STATES:
        if classical.phase_constraint_value(phys, x, v) <= 0.05:
            continue
        state = classical.OscillatorState(x, v)
        lag = classical.lagrangian(phys, state)
        p = classical.conjugate_momentum(phys, state)
        ham = classical.hamiltonian_classical(phys, x, p)
        worst = max(worst, abs(ham - (p * v - lag)))
    rows.append(ReportRecord.from_absolute(
        "classical.legendre-identity", echo, worst, 0.0, 1e-12))

    xs = np.linspace(0.25, 2.0, 33)
    rows.append(ReportRecord.from_absolute(
        "classical.jlm-condition", echo,
        max(classical.jlm_condition_residual(phys, s, xs)
            for s in classical.jlm_sigma_roots(phys)), 0.0, 1e-10))
    return rows


def _potential_checks(phys, amb):
    echo = _echo(phys, amb)
    p_max = 3.0 * phys.omega ** 2 / phys.k
    p = np.linspace(p_max - 8.0 * phys.omega ** 2 / phys.k, p_max * 0.96, 1000)
    profile = quantize.mass(phys, p)
    u_val = quantize.potential_U(phys, p)
    generic = quantize.von_roos_potential(profile, u_val, amb, phys.hbar)
    closed = quantize.effective_potential(phys, amb, p)
    scale = np.maximum(np.abs(closed), 1.0)
    return [ReportRecord.from_absolute(
        "quantize.closed-vs-generic-potential", echo,
        np.max(np.abs(generic - closed) / scale), 0.0, 1e-12)]


def _susy_checks(phys, amb):
    echo = _echo(phys, amb)
    rows = []
    p_max = 3.0 * phys.omega ** 2 / phys.k
    grid = np.linspace(p_max - 8.0 * phys.omega ** 2 / phys.k, p_max * 0.96, 1000)
    products = _product_table(derive_params(phys, amb).a_script, amb.product)

    worst = 0.0
    for product in products:
        worst = max(worst, susy.riccati_residual(
            phys, AmbiguityParams(alpha=product, gamma=1.0), grid))
    rows.append(ReportRecord.from_absolute(
        "susy.riccati-identity", echo, worst, 0.0, 1e-10))

    worst_std = 0.0
    worst_mean = 0.0
    for product in products:
        derived = derive_params(phys, AmbiguityParams(alpha=product, gamma=1.0))
        mean, std = susy.shape_invariance_remainder(phys, derived, grid)
        worst_std = max(worst_std, std)
        worst_mean = max(worst_mean, abs(mean - phys.hbar_omega))
    rows.append(ReportRecord.from_absolute(
        "susy.shape-invariance-stddev", echo, worst_std, 0.0, 1e-12))
    rows.append(ReportRecord.from_absolute(
        "susy.shape-invariance-mean", echo, worst_mean, 0.0, 1e-9))

    table = susy.spectrum(phys, amb, 5)
    rows.append(ReportRecord.from_absolute(
        "susy.spectrum-spacing", echo,
        np.max(np.abs(table.spacings - phys.hbar_omega)), 0.0, 1e-12))

    derived = derive_params(phys, amb)
    defs = susy.partner_potentials_from_definitions(phys, derived, grid)
    compact = susy.partner_potentials(phys, derived, grid)
    rows.append(ReportRecord.from_absolute(
        "susy.partner-compact-vs-definitions", echo,
        max(np.max(np.abs(defs[0] - compact[0])),
            np.max(np.abs(defs[1] - compact[1]))), 0.0, 1e-10))
    return rows


def _operator_checks(phys, amb, h_p):
    echo = _echo(phys, amb)
    rows = []
    derived = derive_params(phys, amb)
    table = susy.spectrum(phys, amb, 2)

    lo, hi = wavefn.support_window(phys, derived, 2)
    grid = quantize.MomentumGrid.with_spacing(phys, lo, hi, h_p)
    worst = 0.0
    for n in range(3):
        values = wavefn.psi(phys, derived, n, grid.points)
        h_psi = quantize.apply_hamiltonian_fd(phys, amb, grid,
                                              quantize.SampledFunction(grid, values))
        resid = np.max(np.abs(h_psi.values - table.energies[n] * values[1:-1]))
        worst = max(worst, resid)
    rows.append(ReportRecord.from_absolute(
        "quantize.eigenrelation-residual", echo, worst, 0.0, 1e-5))

    sp = susy.Superpotential.from_derived(phys, derived)
    psi0 = quantize.SampledFunction(
        grid, wavefn.psi(phys, derived, 0, grid.points))
    lowered = susy.apply_lowering(sp, psi0)
    rows.append(ReportRecord.from_absolute(
        "susy.ground-state-annihilation", echo,
        np.max(np.abs(lowered.values)), 0.0, 1e-5))
    return rows


def _eigensolver_checks(phys, amb, grid_n, y_max):
    echo = _echo(phys, amb)
    derived = derive_params(phys, amb)
    if y_max is None:
        # keep the spacing near 0.02 when the default domain grows with lam
        y_max = eigensolver.default_y_max(derived.lam, 2)
        grid_n = max(grid_n, int(round(y_max / 0.02)))
    grid = eigensolver.YGrid(y_max=y_max, n_points=grid_n)
    comparison = eigensolver.verify_spectrum(phys, amb, 2, grid)
    rows = [ReportRecord.from_absolute(
        "eigensolver.levels-vs-algebraic", echo,
        float(np.max(comparison.errors)), 0.0, 1e-5)]
    rows.append(ReportRecord.from_absolute(
        "eigensolver.h2-convergence-ratio", echo,
        float(np.mean(comparison.convergence_ratios)), 4.0, 2.0))
    rows.append(ReportRecord.from_absolute(
        "eigensolver.level-spacing", echo,
        float(np.max(np.abs(np.diff(comparison.numeric) - phys.hbar_omega))),
        0.0, 1e-5))
    return rows


def _wavefn_checks(phys, amb):
    echo = _echo(phys, amb)
    rows = []
    derived = derive_params(phys, amb)
    gram = wavefn.overlap_matrix(phys, derived, 4)
    rows.append(ReportRecord.from_absolute(
        "wavefn.orthonormality-defect", echo,
        np.max(np.abs(gram - np.eye(5))), 0.0, 1e-8))

    mismatches = 0
    for n in range(5):
        lo, hi = wavefn.support_window(phys, derived, n)
        p = np.linspace(lo, hi, 4001)
        if eigensolver.sign_changes(wavefn.psi(phys, derived, n, p)) != n:
            mismatches += 1
    rows.append(ReportRecord.from_absolute(
        "wavefn.node-counts", echo, mismatches, 0, 0))

    base = PhysicalParams(omega=phys.omega, k=0.0, hbar=phys.hbar)
    # largest k whose momentum domain still contains the sampling window
    k_top = min(0.1, 0.5 * 3.0 * phys.omega ** 2
                / (4.0 * math.sqrt(phys.hbar_omega)))
    k_seq = (k_top, k_top / 10.0, k_top / 100.0)
    worst_ratio = 0.0
    for n in (0, 1):
        devs = [d for _, d in wavefn.limit_deviation(n, k_seq, base)]
        worst_ratio = max(worst_ratio,
                          max(b / a for a, b in zip(devs, devs[1:])))
    record = ReportRecord(
        name="wavefn.harmonic-limit-monotone", params=echo,
        measured=worst_ratio, expected=1.0, tolerance=0.0,
        passed=bool(worst_ratio < 1.0))
    rows.append(record)

    gamma_rows = wavefn.gamma_asymptotic_check([1e3])
    rows.append(ReportRecord.from_absolute(
        "wavefn.gamma-asymptotic-accuracy", echo,
        max(err for _, _, err in gamma_rows), 0.0, 1e-4))
    return rows


def run_suite(phys, amb, grid_n=6000, y_max=None, h_p=1e-3):
    """Run every module's fast invariant checks; returns ReportRecords."""
    records = []
    records.extend(_classical_checks(phys, amb))
    records.extend(_potential_checks(phys, amb))
    records.extend(_susy_checks(phys, amb))
    records.extend(_operator_checks(phys, amb, h_p))
    records.extend(_eigensolver_checks(phys, amb, grid_n, y_max))
    records.extend(_wavefn_checks(phys, amb))
    return records
