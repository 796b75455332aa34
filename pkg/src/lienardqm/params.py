"""Physical, ambiguity and derived parameters of the deformed oscillator.

Conventions
-----------
The oscillator x'' + k x x' + (k^2/9) x^3 + omega^2 x = 0 carries a
deformation strength k >= 0 and a frequency omega > 0; hbar sets the action
scale (default 1, plain reals throughout, no unit system). Quantization in
momentum space introduces two real ordering exponents alpha and gamma whose
product alone enters the physics. The derived dimensionless quantities are

    a_script = 9 omega^3 / (hbar k^2)
    lam      = sqrt(a_script^2 + alpha*gamma)        (requires alpha*gamma > -a_script^2)
    shift    = lam - a_script                        (spectral offset in hbar*omega units)
    a_coef   = 1/sqrt(2)                             (superpotential slope)
    b_coef   = hbar k / (3 sqrt(2) omega) * shift    (superpotential offset)
    p_max    = 3 omega^2 / k                         (momentum domain bound)

k = 0 has no derived parameter set (a_script diverges); callers dispatch to
the analytic harmonic-oscillator branch instead.
"""

import math
from dataclasses import dataclass

from .errors import ConstraintViolationError

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class PhysicalParams:
    """Deformation strength k, angular frequency omega, action scale hbar."""

    omega: float
    k: float
    hbar: float = 1.0

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ConstraintViolationError(f"omega must be > 0, got {self.omega}")
        if not self.hbar > 0.0:
            raise ConstraintViolationError(f"hbar must be > 0, got {self.hbar}")
        if self.k < 0.0:
            raise ConstraintViolationError(f"k must be >= 0, got {self.k}")

    @property
    def is_deformed(self):
        return self.k > 0.0

    @property
    def hbar_omega(self):
        return self.hbar * self.omega


@dataclass(frozen=True)
class AmbiguityParams:
    """Ordering exponents alpha and gamma (both real, stored separately).

    Only the product alpha*gamma enters any physical result; keeping the
    factors separate supports reporting, and the equality of physics across
    factorizations is asserted by tests rather than by collapsing the type.
    The admissibility bound on the product is checked in derive_params.
    """

    alpha: float
    gamma: float

    @property
    def product(self):
        return self.alpha * self.gamma


@dataclass(frozen=True)
class DerivedParams:
    """Dimensionless scales of the quantized problem (see module docstring)."""

    a_script: float
    lam: float
    shift: float
    a_coef: float
    b_coef: float
    p_max: float


def momentum_domain(phys):
    """Upper bound of the momentum domain: 3*omega**2/k, or +inf when k = 0."""
    if not phys.is_deformed:
        return math.inf
    return 3.0 * phys.omega ** 2 / phys.k


def derive_params(phys, amb):
    """Build DerivedParams; requires k > 0 and alpha*gamma > -a_script^2.

    The admissibility bound is strict: at alpha*gamma = -a_script^2 the
    exponent lam vanishes and the ground state no longer vanishes at the
    momentum bound, so the boundary case is rejected together with the
    region below it.
    """
    if not phys.is_deformed:
        raise ConstraintViolationError(
            "k = 0 has no deformed parameter set; use the harmonic-limit branch")
    a_script = 9.0 * phys.omega ** 3 / (phys.hbar * phys.k ** 2)
    product = amb.product
    if product <= -(a_script ** 2):
        raise ConstraintViolationError(
            f"ambiguity product alpha*gamma = {product} violates the bound "
            f"alpha*gamma > {-(a_script ** 2)}")
    lam = math.sqrt(a_script ** 2 + product)
    shift = lam - a_script
    b_coef = phys.hbar * phys.k / (3.0 * SQRT2 * phys.omega) * shift
    return DerivedParams(
        a_script=a_script,
        lam=lam,
        shift=shift,
        a_coef=1.0 / SQRT2,
        b_coef=b_coef,
        p_max=momentum_domain(phys),
    )
