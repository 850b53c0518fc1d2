"""Effective-medium susceptibility of the emitter ensemble and material
permittivities for mirrors and fill."""

import math
from dataclasses import dataclass

import numpy as np

from .units import EPS0, radps_to_au
from .polarizability import as_scalar_alpha

# Drude parameters for gold, converted from 2.067*2pi PHz and 4.4491*2pi THz
OMEGA_P_AU = radps_to_au(2.067 * 2.0 * math.pi * 1e15)
GAMMA_AU_AU = radps_to_au(4.4491 * 2.0 * math.pi * 1e12)


@dataclass(frozen=True)
class EnsembleSpec:
    """N emitters with scalar polarizability `model` occupying volume V.

    region tags where the resulting susceptibility applies: 'microvolume'
    (confined cloud inside the cavity) or 'fill' (everywhere between the
    mirrors).
    """

    n_emitters: float
    volume: float
    model: object
    form: str = "rwa"
    region: str = "microvolume"

    def __post_init__(self):
        if self.n_emitters < 0:
            raise ValueError("emitter count must be >= 0")
        if self.volume <= 0:
            raise ValueError("occupied volume must be > 0")
        if self.region not in ("microvolume", "fill"):
            raise ValueError(f"unknown region tag {self.region!r}")

    @property
    def density(self):
        return self.n_emitters / self.volume


def clausius_mossotti_dilute(spec: EnsembleSpec, omega):
    """Dilute-gas Clausius-Mossotti susceptibility chi = N/(V*eps0) * alpha."""
    if spec.n_emitters == 0:
        return np.zeros_like(np.asarray(omega, dtype=float)) * 1j
    alpha = as_scalar_alpha(spec.model, spec.form)
    return spec.density / EPS0 * alpha(omega)


@dataclass(frozen=True)
class Permittivity:
    """Complex permittivity eps(omega), evaluated by calling the instance."""

    fn: object
    label: str = ""

    def __call__(self, omega):
        return self.fn(omega)


def permittivity_from_chi(chi, label=""):
    """Permittivity eps = 1 + chi; chi may be a callable or a constant."""
    if callable(chi):
        return Permittivity(lambda w: 1.0 + chi(w), label=label)
    return Permittivity(lambda w: 1.0 + chi + 0.0 * np.asarray(w), label=label)


def ensemble_permittivity(spec: EnsembleSpec, label="ensemble"):
    """Permittivity of the dilute ensemble, eps = 1 + chi_mol."""
    return Permittivity(lambda w: 1.0 + clausius_mossotti_dilute(spec, w),
                        label=label)


def drude_gold(omega):
    """Drude permittivity of gold: 1 - omega_p^2/(omega*(omega + i*gamma))."""
    omega = np.asarray(omega, dtype=float)
    return 1.0 - OMEGA_P_AU**2 / (omega * (omega + 1j * GAMMA_AU_AU))


GOLD = Permittivity(drude_gold, label="drude_gold")
VACUUM = Permittivity(lambda w: 1.0 + 0.0j + 0.0 * np.asarray(w), label="vacuum")
