"""Dressing pipelines for the cavity Green function.

Two routes from bare response to the dressed G seen by the singled-out
emitter: the radiation-reaction closure of the dipole-approximated
Lippmann-Schwinger equation (`qerra_dress`), and the full macroscopic
embedding with real-cavity local-field correction (`local_field_correct`).
Spectral densities are assembled with `spectral_density` and split into
scattering and bulk parts with `split_bulk_scattering`.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .units import C, EPS0
from .greens import free_space_im_green


def _value(x, omega):
    return x(omega) if callable(x) else x


def qerra_dress(bare, chi_mol, v_mic, omega):
    """Dressed Green function G = 1/(1/Gbar - V_mic*(omega^2/c^2)*chi_mol).

    `bare` and `chi_mol` may be complex values at `omega` or callables.
    Only the product V_mic*chi_mol enters, so the arbitrary volume split is
    immaterial (V*chi = N*alpha/eps0 in the dilute limit).
    """
    if v_mic <= 0:
        raise ValueError("V_mic must be > 0")
    g_bar = _value(bare, omega)
    chi = _value(chi_mol, omega)
    if np.any(np.asarray(g_bar) == 0):
        raise ValueError("bare Green function vanishes: not invertible")
    return 1.0 / (1.0 / g_bar - v_mic * (np.asarray(omega) / C) ** 2 * chi)


@dataclass(frozen=True)
class LocalFieldParams:
    """Real-cavity local-field correction: empty sphere of radius r_c (bohr)
    around the emitter, surrounded by a host of permittivity eps_host."""

    r_c: float
    eps_host: object

    def __post_init__(self):
        if self.r_c <= 0:
            raise ValueError("real-cavity radius must be > 0")


@dataclass(frozen=True)
class DressedGreenPieces:
    """Coincidence-limit Green function split into its three contributions.

    total = vac_term + c_term + screening * g1_scattering; the divergent real
    part of the free-space coincidence Green function is excluded (only
    Im G_vac = omega/(6*pi*c) enters the spectral density).
    """

    total: complex
    c_term: complex
    vac_term: complex
    screening: complex
    g1_scattering: complex


def local_field_correct(g1_scattering, lf: LocalFieldParams, omega):
    """Apply the real-cavity local-field correction to a scattering Green
    function, returning the assembled pieces.

    C(eps, R_C, omega) = (k/6pi) * [ 3(eps-1)/(2eps+1) / (k R_C)^3
        + 9(eps-1)(4eps+1)/(5(2eps+1)^2) / (k R_C)
        + i (9 eps^{5/2}/(2eps+1)^2 - 1) ]

    with k = sqrt(eps)*omega/c on the principal branch.  The screening
    factor (3eps/(2eps+1))^2 multiplies the scattering part.
    """
    eps = complex(_value(lf.eps_host, omega))
    if eps == -0.5:
        raise ValueError("singular local-field factor: 2*eps + 1 = 0")
    k = np.sqrt(eps) * omega / C
    kr = k * lf.r_c
    if abs(kr) > 0.3:
        warnings.warn(
            f"real-cavity expansion parameter |k R_C| = {abs(kr):.3f} > 0.3; "
            "the small-cavity limit is strained", stacklevel=2)

    c_term = (k / (6.0 * math.pi)) * (
        3.0 * (eps - 1.0) / (2.0 * eps + 1.0) / kr**3
        + 9.0 * (eps - 1.0) * (4.0 * eps + 1.0) / (5.0 * (2.0 * eps + 1.0) ** 2) / kr
        + 1j * (9.0 * eps**2.5 / (2.0 * eps + 1.0) ** 2 - 1.0)
    )
    screening = (3.0 * eps / (2.0 * eps + 1.0)) ** 2
    vac_term = 1j * free_space_im_green(omega)
    total = vac_term + c_term + screening * g1_scattering
    return DressedGreenPieces(total=total, c_term=c_term, vac_term=vac_term,
                              screening=screening, g1_scattering=g1_scattering)


def spectral_density(g_im, omega):
    """Spectral density J(omega) = omega^2/(pi*eps0*c^2) * Im G(omega)."""
    omega = np.asarray(omega, dtype=float)
    out = omega**2 / (math.pi * EPS0 * C**2) * np.asarray(g_im)
    return out[()] if out.ndim == 0 else out


def split_bulk_scattering(pieces: DressedGreenPieces, omega):
    """Split the spectral density into (J_sc, J_0).

    J_sc = omega^2/(pi*eps0*c^2) * Im[(3eps/(2eps+1))^2 * G1]; J_0 = J - J_sc.
    """
    j_total = spectral_density((pieces.total).imag, omega)
    j_sc = spectral_density((pieces.screening * pieces.g1_scattering).imag, omega)
    return j_sc, j_total - j_sc
