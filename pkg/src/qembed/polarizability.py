"""Emitter polarizability models.

All models evaluate a single scalar component alpha(omega) (one polarization
direction), except the sum-over-states model which carries the full 3x3
tensor and is reduced with `isotropic_average` when a scalar is needed.
Frequencies and energies are in hartree, dipoles in e*a0; the returned
polarizabilities are in atomic units.
"""

import os
from dataclasses import dataclass, field

import numpy as np

from .units import HBAR, ev_to_hartree


class ResonantLosslessError(ValueError):
    """Resonant lossless evaluation: alpha has a pole on the real axis."""


@dataclass(frozen=True)
class TwoLevelEmitter:
    """Two-level emitter with transition dipole d, frequency omega_a and
    half-width damping gamma_a (all atomic units)."""

    d: float
    omega_a: float
    gamma_a: float = 0.0

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("dipole moment must be >= 0")
        if self.omega_a <= 0:
            raise ValueError("transition frequency must be > 0")
        if self.gamma_a < 0:
            raise ValueError("damping rate must be >= 0")


def alpha_rwa(e: TwoLevelEmitter, omega):
    """Rotating-wave polarizability d^2/hbar * 1/(omega_a - omega - i*gamma_a).

    Im alpha > 0 for all real omega when gamma_a > 0.
    """
    omega = np.asarray(omega, dtype=float)
    if e.gamma_a == 0.0 and np.any(omega == e.omega_a):
        raise ResonantLosslessError(
            "resonant lossless evaluation: omega == omega_a with gamma_a = 0"
        )
    out = (e.d**2 / HBAR) / (e.omega_a - omega - 1j * e.gamma_a)
    return out[()] if out.ndim == 0 else out


def alpha_full(e: TwoLevelEmitter, omega):
    """Full (counter-rotating-inclusive) Lorentz polarizability.

    2 d^2 omega_a / hbar * 1/(omega_a^2 - omega^2 - i*omega*gamma_a).
    Positive and real at omega = 0, decays as 1/omega^2, and satisfies
    alpha(-omega) = alpha(omega)*.  Near resonance it matches alpha_rwa
    evaluated with half-width gamma_a/2.
    """
    omega = np.asarray(omega, dtype=float)
    if e.gamma_a == 0.0 and np.any(np.abs(omega) == e.omega_a):
        raise ResonantLosslessError(
            "resonant lossless evaluation: |omega| == omega_a with gamma_a = 0"
        )
    out = (2.0 * e.d**2 * e.omega_a / HBAR) / (
        e.omega_a**2 - omega**2 - 1j * omega * e.gamma_a
    )
    return out[()] if out.ndim == 0 else out


@dataclass(frozen=True)
class SumOverStatesModel:
    """Sum-over-states polarizability built from tabulated transition data.

    energies: transition energies hbar*omega_k0 (hartree), shape (n,).
    dipoles: transition dipole vectors (atomic units), shape (n, 3).
    eta: artificial broadening (hartree, > 0).
    """

    energies: np.ndarray
    dipoles: np.ndarray
    eta: float

    def __post_init__(self):
        energies = np.atleast_1d(np.asarray(self.energies, dtype=float))
        dipoles = np.asarray(self.dipoles, dtype=float).reshape(len(energies), 3)
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "dipoles", dipoles)
        if energies.size == 0:
            raise ValueError("transition list must be non-empty")
        if np.any(energies <= 0):
            raise ValueError("all transition energies must be > 0")
        if self.eta <= 0:
            raise ValueError("broadening eta must be > 0")


def alpha_sos(m: SumOverStatesModel, omega):
    """Sum-over-states 3x3 polarizability tensor.

    alpha_ij = sum_k 2*hbar*omega_k0 d_i d_j / ((hbar*omega_k0)^2 - (hbar*omega + i*eta)^2)

    The denominator sign is fixed so that a single-transition term reduces
    to `alpha_full` (and Im of the diagonal is > 0 for omega > 0).
    """
    omega = np.asarray(omega, dtype=float)
    e_k = m.energies  # hbar*omega_k0
    z = HBAR * omega[..., None] + 1j * m.eta
    denom = e_k**2 - z**2  # (..., n)
    dd = m.dipoles[:, :, None] * m.dipoles[:, None, :]  # (n, 3, 3)
    terms = (2.0 * HBAR * e_k) / denom  # (..., n)
    out = np.tensordot(terms, dd, axes=([-1], [0]))  # (..., 3, 3)
    return out


def isotropic_average(alpha_tensor):
    """Isotropic average of a 3x3 polarizability tensor: trace/3."""
    alpha_tensor = np.asarray(alpha_tensor)
    return np.trace(alpha_tensor, axis1=-2, axis2=-1) / 3.0


def sos_scalar_alpha(m: SumOverStatesModel, omega):
    """Isotropically averaged scalar alpha(omega) of a sum-over-states model."""
    return isotropic_average(alpha_sos(m, omega))


def as_scalar_alpha(model, form="rwa"):
    """Return a callable alpha(omega) for a model.

    TwoLevelEmitter uses the rotating-wave form by default ('full' selects
    the Lorentz form); SumOverStatesModel is reduced to its isotropic
    average; a bare callable is passed through.
    """
    if callable(model):
        return model
    if isinstance(model, TwoLevelEmitter):
        if form == "rwa":
            return lambda w: alpha_rwa(model, w)
        if form == "full":
            return lambda w: alpha_full(model, w)
        raise ValueError(f"unknown two-level form {form!r}")
    if isinstance(model, SumOverStatesModel):
        return lambda w: sos_scalar_alpha(model, w)
    raise TypeError(f"cannot build a scalar polarizability from {type(model)!r}")


@dataclass(frozen=True)
class MixtureModel:
    """Density-weighted mixture of emitter polarizabilities.

    components: sequence of (model, fraction) pairs; fractions must sum to 1.
    Models may be TwoLevelEmitter, SumOverStatesModel, or a callable
    alpha(omega); forms optionally selects 'rwa'/'full' per two-level entry.
    """

    components: tuple
    forms: tuple = field(default=None)

    def __post_init__(self):
        comps = tuple((m, float(f)) for m, f in self.components)
        object.__setattr__(self, "components", comps)
        forms = self.forms or tuple("rwa" for _ in comps)
        object.__setattr__(self, "forms", tuple(forms))
        fractions = [f for _, f in comps]
        if any(f < 0 or f > 1 for f in fractions):
            raise ValueError("fractions must lie in [0, 1]")
        if abs(sum(fractions) - 1.0) > 1e-12:
            raise ValueError(f"fractions must sum to 1, got {sum(fractions)}")


def alpha_mixture(m: MixtureModel, omega):
    """Fraction-weighted scalar polarizability of the mixture."""
    total = 0.0
    for (model, fraction), form in zip(m.components, m.forms):
        total = total + fraction * as_scalar_alpha(model, form)(omega)
    return total


def load_tddft_roots(path, eta):
    """Load a TDDFT roots table into a SumOverStatesModel.

    Format: one header line, then one row per root with four whitespace
    separated columns: energy_eV, dx_au, dy_au, dz_au.  The broadening eta
    (hartree) is not part of the file and must be supplied.
    """
    energies = []
    dipoles = []
    with open(path) as fh:
        lines = fh.readlines()
    for lineno, line in enumerate(lines[1:], start=2):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 4:
            raise ValueError(
                f"{os.path.basename(path)}:{lineno}: expected 4 columns, got {len(fields)}"
            )
        try:
            values = [float(x) for x in fields]
        except ValueError as exc:
            raise ValueError(f"{os.path.basename(path)}:{lineno}: {exc}") from None
        e_ha = ev_to_hartree(values[0])
        if e_ha <= 0:
            raise ValueError(
                f"{os.path.basename(path)}:{lineno}: non-positive transition energy"
            )
        energies.append(e_ha)
        dipoles.append(values[1:])
    if not energies:
        raise ValueError(f"{os.path.basename(path)}: no transition rows found")
    return SumOverStatesModel(np.array(energies), np.array(dipoles), eta)
