"""Independent spectral oracle on the half-line.

The variable change y = 2 a_script (1 - p / sqrt(a_script hbar omega)) maps
the momentum domain onto y in (0, inf) and brings the Hamiltonian to

    H = -hbar omega (y d^2/dy^2 + d/dy - lam^2/y - y/4 + a_script),

whose divergence form -hbar omega [d/dy (y d/dy) - lam^2/y - y/4 + a_script]
is discretized conservatively on a uniform grid with Dirichlet ends:

    off_i  = -hbar omega * y_{i+1/2} / h^2
    diag_i =  hbar omega * [(y_{i-1/2} + y_{i+1/2}) / h^2
                            + lam^2 / y_i + y_i / 4 - a_script]

The matrix is symmetric by construction with negative off-diagonals; its
lowest eigenvalues are extracted by Sturm-count bisection and compared with
the algebraic levels (n + 1/2 + lam - a_script) hbar omega.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConvergenceError
from .susy import spectrum

BISECTION_TOL = 1e-10
_MAX_BISECTIONS = 200


@dataclass(frozen=True)
class YGrid:
    """Uniform interior points i*h, i = 1..n_points, h = y_max/(n_points+1).

    y = 0 and y = y_max are the Dirichlet endpoints and are excluded.
    """

    y_max: float
    n_points: int

    def __post_init__(self):
        if not self.y_max > 0.0:
            raise ValueError(f"y_max must be > 0, got {self.y_max}")
        if self.n_points < 500:
            raise ValueError(f"need at least 500 grid points, got {self.n_points}")

    @property
    def spacing(self):
        return self.y_max / (self.n_points + 1)

    @property
    def points(self):
        return self.spacing * np.arange(1, self.n_points + 1)

    def refined(self):
        """Grid with exactly half the spacing (n -> 2n + 1)."""
        return YGrid(y_max=self.y_max, n_points=2 * self.n_points + 1)


def default_y_max(lam, n_target):
    """Domain size enclosing the support of y^(2 lam) e^-y L_n^2 safely."""
    return 4.0 * lam + 40.0 * n_target + 50.0


@dataclass(frozen=True)
class TridiagonalOperator:
    """Symmetric tridiagonal matrix with its energy scale."""

    diagonal: np.ndarray
    off_diagonal: np.ndarray
    scale: float

    def __post_init__(self):
        if len(self.off_diagonal) != len(self.diagonal) - 1:
            raise ValueError("off-diagonal must be one entry shorter than diagonal")
        self.diagonal.flags.writeable = False
        self.off_diagonal.flags.writeable = False

    @property
    def dim(self):
        return len(self.diagonal)

    def count_below(self, shift):
        """Number of eigenvalues strictly below shift (Sturm sign count)."""
        return kernels.sturm_count(self.diagonal, self.off_diagonal, shift)

    def gershgorin(self):
        radius = np.zeros(self.dim)
        radius[:-1] += np.abs(self.off_diagonal)
        radius[1:] += np.abs(self.off_diagonal)
        return (float(np.min(self.diagonal - radius)),
                float(np.max(self.diagonal + radius)))


def build_operator(phys, derived, grid):
    """Discretize the y-space Hamiltonian on the grid (requires lam > 0)."""
    if not derived.lam > 0.0:
        raise ValueError(f"lam must be > 0, got {derived.lam}")
    hw = phys.hbar_omega
    h = grid.spacing
    y = grid.points
    half_lo = y - 0.5 * h
    half_hi = y + 0.5 * h
    diag = hw * ((half_lo + half_hi) / h ** 2
                 + derived.lam ** 2 / y + y / 4.0 - derived.a_script)
    off = -hw * half_hi[:-1] / h ** 2
    return TridiagonalOperator(diagonal=diag, off_diagonal=off, scale=hw)


def lowest_eigenvalues(op, count):
    """The `count` smallest eigenvalues, each bisected to 1e-10 absolute.

    Bisection on the Sturm count is deterministic and needs no dense
    factorization; brackets start from the Gershgorin bounds and reuse the
    previously located eigenvalue as the lower end.
    """
    if not 1 <= count <= 10:
        raise ValueError(f"count must be in 1..10, got {count}")
    lo_all, hi_all = op.gershgorin()
    out = np.empty(count)
    lo_start = lo_all
    for k in range(count):
        lo, hi = lo_start, hi_all
        iterations = 0
        while hi - lo > BISECTION_TOL:
            iterations += 1
            if iterations > _MAX_BISECTIONS:
                raise ConvergenceError(
                    f"bisection for eigenvalue {k} did not reach "
                    f"{BISECTION_TOL} in {_MAX_BISECTIONS} iterations")
            mid = 0.5 * (lo + hi)
            if op.count_below(mid) >= k + 1:
                hi = mid
            else:
                lo = mid
        out[k] = 0.5 * (lo + hi)
        lo_start = out[k] - BISECTION_TOL
    return out


def _solve_shifted(diag, off, mu, rhs):
    """Solve (T - mu I) x = rhs for symmetric tridiagonal T, with partial
    pivoting (fill-in limited to a second superdiagonal)."""
    n = len(diag)
    a = np.asarray(diag, dtype=float) - mu   # main
    b = np.empty(n)                          # first super
    b[:-1] = off
    b[-1] = 0.0
    c = np.zeros(n)                          # second super (fill-in)
    sub = np.asarray(off, dtype=float).copy()
    x = np.asarray(rhs, dtype=float).copy()
    for i in range(n - 1):
        if abs(sub[i]) > abs(a[i]):
            # swap rows i and i+1
            a[i], sub[i] = sub[i], a[i]
            b[i], a[i + 1] = a[i + 1], b[i]
            if i + 1 < n - 1:
                c[i], b[i + 1] = b[i + 1], c[i]
            x[i], x[i + 1] = x[i + 1], x[i]
        if a[i] == 0.0:
            a[i] = 1e-300
        m = sub[i] / a[i]
        a[i + 1] -= m * b[i]
        if i + 1 < n - 1:
            b[i + 1] -= m * c[i]
        x[i + 1] -= m * x[i]
    if a[-1] == 0.0:
        a[-1] = 1e-300
    x[-1] /= a[-1]
    x[-2] = (x[-2] - b[-2] * x[-1]) / a[-2]
    for i in range(n - 3, -1, -1):
        x[i] = (x[i] - b[i] * x[i + 1] - c[i] * x[i + 2]) / a[i]
    return x


def eigenvector(op, eigenvalue, sweeps=3):
    """Unit eigenvector by inverse iteration at a converged eigenvalue.

    Deterministic: starts from the all-ones vector, shifts slightly off the
    eigenvalue to keep the factorization regular.
    """
    mu = eigenvalue + 100.0 * BISECTION_TOL
    v = np.ones(op.dim)
    v /= np.linalg.norm(v)
    for _ in range(sweeps):
        v = _solve_shifted(op.diagonal, op.off_diagonal, mu, v)
        v /= np.linalg.norm(v)
    return v


def sign_changes(values, floor=1e-8):
    """Count strict sign alternations, ignoring entries below floor*sup."""
    v = np.asarray(values)
    v = v[np.abs(v) > floor * np.max(np.abs(v))]
    return int(np.sum(np.sign(v[1:]) * np.sign(v[:-1]) < 0))


@dataclass(frozen=True)
class SpectrumComparison:
    """Solver-vs-algebraic comparison on a grid and its refinement."""

    grid: YGrid
    analytic: np.ndarray
    numeric: np.ndarray
    refined_numeric: np.ndarray

    @property
    def errors(self):
        return np.abs(self.numeric - self.analytic)

    @property
    def refined_errors(self):
        return np.abs(self.refined_numeric - self.analytic)

    @property
    def convergence_ratios(self):
        return self.errors / self.refined_errors

    def rows(self):
        return [(n, float(a), float(v), float(e))
                for n, (a, v, e) in enumerate(zip(self.analytic, self.numeric,
                                                  self.errors))]


def verify_spectrum(phys, amb, n_max, grid):
    """Pair solver eigenvalues with the algebraic spectrum for n = 0..n_max.

    Also solves on the half-spacing grid so the quadratic convergence of
    the discretization is observable from the error ratios.
    """
    if not 0 <= n_max <= 5:
        raise ValueError(f"n_max must be in 0..5, got {n_max}")
    table = spectrum(phys, amb, n_max)
    op = build_operator(phys, table.derived, grid)
    numeric = lowest_eigenvalues(op, n_max + 1)
    op_fine = build_operator(phys, table.derived, grid.refined())
    refined = lowest_eigenvalues(op_fine, n_max + 1)
    return SpectrumComparison(grid=grid, analytic=table.energies,
                              numeric=numeric, refined_numeric=refined)
