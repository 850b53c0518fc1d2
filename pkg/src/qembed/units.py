"""Physical constants and unit conversions.

The internal unit system is Hartree atomic units, but hbar, epsilon_0 and c
are carried explicitly as named constants (not set to 1) so that formulas
containing them can be transcribed literally.  Constant values follow CODATA
2018 at full published precision.

Supported unit tags, grouped by dimension:

    energy     eV, hartree, au          (au == hartree)
    length     nm, bohr, au             (au == bohr)
    dipole     debye, atomic
    frequency  rad/s, 2pi.THz, au

Two cross-dimension conversions are supported because scenario inputs use
them: energy <-> length via the photon relation lambda = 2*pi*hbar*c/E, and
energy <-> frequency via E = hbar*omega.
"""

import math
from dataclasses import dataclass

# --- CODATA 2018 ---------------------------------------------------------

HBAR = 1.0                          # reduced Planck constant (atomic units)
C = 137.035999084                   # speed of light = 1/alpha (atomic units)
EPS0 = 1.0 / (4.0 * math.pi)        # vacuum permittivity (atomic units)

HARTREE_EV = 27.211386245988        # 1 hartree in eV
BOHR_M = 5.29177210903e-11          # Bohr radius in m
BOHR_NM = BOHR_M * 1e9              # Bohr radius in nm
AU_TIME_S = 2.4188843265857e-17     # atomic unit of time in s
E_CHARGE_C = 1.602176634e-19        # elementary charge in C (exact)

# 1 debye = 1e-21/c C m; expressed in e*a0
DEBYE_CM = 1e-21 / 299792458.0
DEBYE_AU = DEBYE_CM / (E_CHARGE_C * BOHR_M)

# hbar*c in eV*nm, used for photon energy <-> wavelength
HBARC_EV_NM = HARTREE_EV * C * BOHR_NM


class DimensionError(ValueError):
    """Raised when a conversion between incompatible unit tags is requested."""


# unit tag -> (dimension, factor to internal unit of that dimension)
_UNITS = {
    "eV": ("energy", 1.0 / HARTREE_EV),
    "hartree": ("energy", 1.0),
    "au_energy": ("energy", 1.0),
    "nm": ("length", 1.0 / BOHR_NM),
    "bohr": ("length", 1.0),
    "au_length": ("length", 1.0),
    "debye": ("dipole", DEBYE_AU),
    "atomic": ("dipole", 1.0),
    "rad/s": ("frequency", AU_TIME_S),
    "2pi.THz": ("frequency", 2.0 * math.pi * 1e12 * AU_TIME_S),
    "au_frequency": ("frequency", 1.0),
}


@dataclass(frozen=True)
class Quantity:
    value: float
    unit: str

    def __post_init__(self):
        if self.unit not in _UNITS:
            raise DimensionError(f"unknown unit tag {self.unit!r}")

    @property
    def dimension(self):
        return _UNITS[self.unit][0]


def to_internal(value, unit):
    """Convert a raw value in `unit` to the internal unit of its dimension."""
    if unit not in _UNITS:
        raise DimensionError(f"unknown unit tag {unit!r}")
    return value * _UNITS[unit][1]


def from_internal(value, unit):
    """Convert a value in internal units to `unit` (same dimension)."""
    if unit not in _UNITS:
        raise DimensionError(f"unknown unit tag {unit!r}")
    return value / _UNITS[unit][1]


def convert(q: Quantity, target: str) -> Quantity:
    """Convert `q` to the unit tag `target`.

    Within a dimension this is a linear rescaling.  Energy <-> length is the
    photon map lambda = 2*pi*hbar*c/E; energy <-> frequency is E = hbar*omega.
    Both cross maps are bijective, so round trips are exact to round-off.
    """
    if target not in _UNITS:
        raise DimensionError(f"unknown unit tag {target!r}")
    src_dim = q.dimension
    tgt_dim = _UNITS[target][0]

    if src_dim == tgt_dim:
        if q.unit == target:
            return q
        return Quantity(from_internal(to_internal(q.value, q.unit), target), target)

    if {src_dim, tgt_dim} == {"energy", "length"}:
        internal = to_internal(q.value, q.unit)
        # E (hartree) <-> lambda (bohr), symmetric in both directions
        converted = 2.0 * math.pi * HBAR * C / internal
        return Quantity(from_internal(converted, target), target)

    if {src_dim, tgt_dim} == {"energy", "frequency"}:
        internal = to_internal(q.value, q.unit)
        if src_dim == "energy":
            converted = internal / HBAR
        else:
            converted = internal * HBAR
        return Quantity(from_internal(converted, target), target)

    raise DimensionError(
        f"cannot convert {q.unit!r} ({src_dim}) to {target!r} ({tgt_dim})"
    )


def ev_to_hartree(e_ev):
    return e_ev / HARTREE_EV


def hartree_to_ev(e_ha):
    return e_ha * HARTREE_EV


def nm_to_bohr(x_nm):
    return x_nm / BOHR_NM


def bohr_to_nm(x_bohr):
    return x_bohr * BOHR_NM


def debye_to_atomic(d):
    return d * DEBYE_AU


def wavelength_nm_to_energy_hartree(lam_nm):
    """Photon wavelength in nm to energy in hartree."""
    return 2.0 * math.pi * HBAR * C / nm_to_bohr(lam_nm)


def energy_hartree_to_wavelength_nm(e_ha):
    """Photon energy in hartree to wavelength in nm."""
    return bohr_to_nm(2.0 * math.pi * HBAR * C / e_ha)


def radps_to_au(omega_si):
    """Angular frequency in rad/s to atomic units."""
    return omega_si * AU_TIME_S
