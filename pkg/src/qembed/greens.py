"""Bare Green functions for one polarization component.

Three environments are covered: a single-mode Lorentzian resonance, the
free-space coincidence-limit imaginary part, and the scattering Green
function at the center of a planar Fabry-Perot cavity, evaluated by adaptive
quadrature over the transverse wavevector (propagating and evanescent
plane waves).
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .units import C


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance.

    Carries the achieved estimate and the residual error bound.
    """

    def __init__(self, message, estimate, residual):
        super().__init__(message)
        self.estimate = estimate
        self.residual = residual


@dataclass(frozen=True)
class LorentzianMode:
    """Single-mode cavity resonance: frequency omega_c, half-width gamma_c,
    amplitude constant f1."""

    omega_c: float
    gamma_c: float
    f1: float

    def __post_init__(self):
        if self.omega_c <= 0:
            raise ValueError("mode frequency must be > 0")
        if self.gamma_c < 0:
            raise ValueError("decay rate must be >= 0")

    @property
    def quality_factor(self):
        return self.omega_c / self.gamma_c


def single_mode_green(m: LorentzianMode, omega):
    """Gbar(omega) = f1^2/(omega_c - omega - i*gamma_c)."""
    omega = np.asarray(omega, dtype=float)
    if m.gamma_c == 0.0 and np.any(omega == m.omega_c):
        raise ValueError("pole: omega == omega_c with gamma_c = 0")
    out = m.f1**2 / (m.omega_c - omega - 1j * m.gamma_c)
    return out[()] if out.ndim == 0 else out


def free_space_im_green(omega):
    """Im of the free-space Green function in the coincidence limit: omega/(6*pi*c)."""
    omega = np.asarray(omega, dtype=float)
    out = omega / (6.0 * math.pi * C)
    return out[()] if out.ndim == 0 else out


def _sqrt_im_pos(z):
    """Square root on the branch with Im >= 0."""
    w = np.sqrt(np.asarray(z, dtype=complex))
    return np.where(w.imag < 0, -w, w)[()]


def fresnel_coefficients(k_par, omega, eps_fill, eps_mirror):
    """Fresnel reflection coefficients (r_TE, r_TM) at a fill/mirror interface.

    r_TE = (kz - kz_mir)/(kz + kz_mir)
    r_TM = (eps_mir*kz - eps_fill*kz_mir)/(eps_mir*kz + eps_fill*kz_mir)

    with kz = sqrt(eps_fill*omega^2/c^2 - k_par^2) and kz_mir the analogue
    in the mirror, both on the branch Im >= 0.
    """
    kz = _sqrt_im_pos(eps_fill * (omega / C) ** 2 - k_par**2)
    kz_m = _sqrt_im_pos(eps_mirror * (omega / C) ** 2 - k_par**2)
    r_te = (kz - kz_m) / (kz + kz_m)
    r_tm = (eps_mirror * kz - eps_fill * kz_m) / (eps_mirror * kz + eps_fill * kz_m)
    return r_te, r_tm


@dataclass(frozen=True)
class PlanarCavity:
    """Planar Fabry-Perot cavity: mirror separation L (bohr) and the mirror
    and fill permittivities.  Evaluation point is the cavity center."""

    length: float
    eps_mirror: object
    eps_fill: object

    def __post_init__(self):
        if self.length <= 0:
            raise ValueError("mirror separation must be > 0")


@dataclass(frozen=True)
class QuadratureSettings:
    """Adaptive-quadrature controls for the wavevector integral.

    rtol: relative tolerance, in (0, 1e-3].
    limit: maximum number of subdivisions per segment.
    fill_im_offset: small positive imaginary part added to eps_fill to move
    guided-mode poles off the real k_par axis.
    """

    rtol: float = 1e-8
    limit: int = 200
    fill_im_offset: float = 1e-6

    def __post_init__(self):
        if not 0.0 < self.rtol <= 1e-3:
            raise ValueError("rtol must be in (0, 1e-3]")
        if self.fill_im_offset < 0:
            raise ValueError("pole-avoidance offset must be >= 0")


def _fp_reflection_sum(k_par, omega, eps_f, eps_m, length):
    """Multiple-reflection bracket of the G1_xx integrand at the cavity center.

    Polarization weights after the analytic angular integral:
    w_s = 1/2 (TE), w_p = kz^2/(2 k^2) (TM); D_sigma = 1 - r^2 e^{2 i kz L}
    resums multiple reflections.  The measure k_par/kz dk_par is applied by
    the caller.
    """
    k2 = eps_f * (omega / C) ** 2
    kz = _sqrt_im_pos(k2 - k_par**2)
    r_te, r_tm = fresnel_coefficients(k_par, omega, eps_f, eps_m)
    w_s = 0.5
    w_p = kz**2 / (2.0 * k2)
    e1 = np.exp(1j * kz * length)
    e2 = e1 * e1
    d_s = 1.0 - r_te**2 * e2
    d_p = 1.0 - r_tm**2 * e2
    return (
        e2 * (r_te**2 * w_s / d_s + r_tm**2 * w_p / d_p)
        + e1 * (r_te * w_s / d_s - r_tm * w_p / d_p)
    )


def _fp_integrand(k_par, omega, eps_f, eps_m, length):
    """Integrand of the plain k_par integral for G1_xx (measure included)."""
    k2 = eps_f * (omega / C) ** 2
    kz = _sqrt_im_pos(k2 - k_par**2)
    return (k_par / kz) * _fp_reflection_sum(k_par, omega, eps_f, eps_m, length)


def _quad_complex(f, a, b, epsrel, epsabs, limit):
    re, re_err = quad(lambda x: f(x).real, a, b, epsrel=epsrel, epsabs=epsabs,
                      limit=limit, full_output=1)[:2]
    im, im_err = quad(lambda x: f(x).imag, a, b, epsrel=epsrel, epsabs=epsabs,
                      limit=limit, full_output=1)[:2]
    return re + 1j * im, re_err + im_err


def fp_scattering_green_xx(cavity: PlanarCavity, omega,
                           settings: QuadratureSettings = QuadratureSettings()):
    """Scattering Green function G1_xx(omega) at the cavity center.

    G1_xx = (i/4pi) * int_0^inf dk_par (k_par/kz) [
        e^{2 i kz L} (r_TE^2 w_s / D_s + r_TM^2 w_p / D_p)
      + e^{i kz L}   (r_TE   w_s / D_s - r_TM   w_p / D_p) ]

    The integral is split at Re|k| into a propagating and an evanescent
    segment.  Each segment is mapped to a variable in which the branch-point
    singularity of 1/kz at k_par = |k| cancels against the measure:
    k_par^2 = k_re^2 - u^2 (propagating) and k_par^2 = k_re^2 + v^2
    (evanescent), with k_par dk_par / kz = -(u/kz) du resp. (v/kz) dv.
    The evanescent tail is truncated where the single-pass factor
    e^{i kz L} has decayed below 1e-26.
    """
    if omega <= 0:
        raise ValueError("omega must be > 0")
    eps_f = complex(cavity.eps_fill(omega)) + 1j * settings.fill_im_offset
    eps_m = complex(cavity.eps_mirror(omega))
    length = cavity.length

    if eps_m == eps_f:
        return 0.0 + 0.0j

    k2 = eps_f * (omega / C) ** 2
    k_re = float(np.real(_sqrt_im_pos(eps_f) * omega / C))
    v_max = 60.0 / length
    scale = free_space_im_green(omega)  # sets the absolute-error floor
    epsabs = settings.rtol * scale

    def f_prop(u):
        k_par = math.sqrt(max(k_re**2 - u**2, 0.0))
        kz = _sqrt_im_pos(k2 - k_par**2)
        return (u / kz) * _fp_reflection_sum(k_par, omega, eps_f, eps_m,
                                             length)

    def f_evan(v):
        k_par = math.sqrt(k_re**2 + v**2)
        kz = _sqrt_im_pos(k2 - k_par**2)
        return (v / kz) * _fp_reflection_sum(k_par, omega, eps_f, eps_m,
                                             length)

    total = 0.0 + 0.0j
    err = 0.0
    for f, a, b in ((f_prop, 0.0, k_re), (f_evan, 0.0, v_max)):
        if b <= a:
            continue
        val, seg_err = _quad_complex(f, a, b, settings.rtol, epsabs,
                                     settings.limit)
        total += val
        err += seg_err

    result = (1j / (4.0 * math.pi)) * total
    residual = err / (4.0 * math.pi)
    tol = max(10.0 * settings.rtol * abs(result), 10.0 * epsabs)
    if residual > tol:
        raise QuadratureError(
            f"wavevector quadrature did not converge at omega={omega}: "
            f"residual {residual:.3e} exceeds {tol:.3e}",
            estimate=result, residual=residual,
        )
    return result
