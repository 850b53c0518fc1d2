"""Effective quantum-optics matrices in the single-excitation manifold.

Builders for the Tavis-Cummings, Holstein-Primakoff and dressed-environment
3x3 Hamiltonians, the polariton parameters extracted from the dressed Green
function, superradiant matrix elements, and the explicit (N+1)x(N+1)
ensemble Hamiltonian used as a brute-force oracle.
"""

import math
from dataclasses import dataclass

import numpy as np

from .units import C, EPS0, HBAR
from .greens import LorentzianMode


@dataclass(frozen=True)
class PolaritonParams:
    """Polariton frequencies and couplings of the dressed environment.

    omega_plus/omega_minus and g_plus/g_minus follow the +/- index of the
    closed forms omega_pm = omega_c/(1 +/- x), g_pm = (g/sqrt(2))/sqrt(1 +/- x)
    with x = Omega_R/omega_c; note omega_plus < omega_c < omega_minus.
    Frequency-ordered aliases are provided since the +/- labels do not track
    the upper/lower ordering.
    """

    omega_plus: float
    omega_minus: float
    g_plus: float
    g_minus: float
    omega_r: float
    g: float

    @property
    def omega_upper(self):
        return max(self.omega_plus, self.omega_minus)

    @property
    def omega_lower(self):
        return min(self.omega_plus, self.omega_minus)

    @property
    def g_upper(self):
        return self.g_minus if self.omega_minus >= self.omega_plus else self.g_plus

    @property
    def g_lower(self):
        return self.g_plus if self.omega_minus >= self.omega_plus else self.g_minus


@dataclass(frozen=True)
class SingleExcitationHamiltonian:
    """Labeled Hermitian matrix on the single-excitation subspace."""

    matrix: np.ndarray
    basis_labels: tuple

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        if m.shape[0] != m.shape[1] or m.shape[0] != len(self.basis_labels):
            raise ValueError("matrix dimension must match label count")
        scale = max(np.max(np.abs(m)), 1.0)
        if np.max(np.abs(m - m.conj().T)) > 1e-12 * scale:
            raise ValueError("matrix is not Hermitian")

    def eigenvalues(self):
        return np.linalg.eigvalsh(self.matrix)


def coupling_from_mode(m: LorentzianMode, d):
    """Light-matter coupling g = f1 * d * omega_c / (sqrt(eps0*hbar) * c)."""
    if d < 0:
        raise ValueError("dipole moment must be >= 0")
    return m.f1 * d * m.omega_c / (math.sqrt(EPS0 * HBAR) * C)


def f1_from_rabi(omega_c, omega_r, d, n_emitters):
    """Mode amplitude f1 reproducing a collective Rabi frequency
    Omega_R = g*sqrt(N) for N emitters of dipole d."""
    g = omega_r / math.sqrt(n_emitters)
    return g * math.sqrt(EPS0 * HBAR) * C / (d * omega_c)


def qerra_polariton_params(omega_c, omega_r, g) -> PolaritonParams:
    """Polariton parameters of the dressed single-mode environment.

    omega_pm = omega_c/(1 +/- Omega_R/omega_c),
    g_pm = (g/sqrt(2))/sqrt(1 +/- Omega_R/omega_c).
    """
    x = omega_r / omega_c
    if not 0.0 <= x < 1.0:
        raise ValueError("requires 0 <= Omega_R/omega_c < 1 (omega_minus pole)")
    return PolaritonParams(
        omega_plus=omega_c / (1.0 + x),
        omega_minus=omega_c / (1.0 - x),
        g_plus=(g / math.sqrt(2.0)) / math.sqrt(1.0 + x),
        g_minus=(g / math.sqrt(2.0)) / math.sqrt(1.0 - x),
        omega_r=omega_r,
        g=g,
    )


def tc_single_excitation(omega_c, omega_a, g, n_emitters):
    """Tavis-Cummings single-excitation Hamiltonian in the basis
    {(|1> + |B>)/sqrt(2), (|1> - |B>)/sqrt(2), |e_N>}:

    diag(omega_c + g*sqrt(N), omega_c - g*sqrt(N), omega_a) with the
    impurity coupled to both bright modes by g/sqrt(2).
    """
    if n_emitters < 1:
        raise ValueError("need at least one ensemble emitter")
    s = g * math.sqrt(n_emitters)
    c = g / math.sqrt(2.0)
    matrix = np.array([
        [omega_c + s, 0.0, c],
        [0.0, omega_c - s, c],
        [c, c, omega_a],
    ])
    labels = ("(|1>+|B>)/sqrt2", "(|1>-|B>)/sqrt2", "impurity")
    return SingleExcitationHamiltonian(matrix, labels)


def qerra_single_excitation(p: PolaritonParams, omega_a):
    """Dressed-environment single-excitation Hamiltonian
    diag(omega_+, omega_-, omega_a) with impurity couplings g_+, g_-."""
    matrix = np.array([
        [p.omega_plus, 0.0, p.g_plus],
        [0.0, p.omega_minus, p.g_minus],
        [p.g_plus, p.g_minus, omega_a],
    ])
    labels = ("polariton +", "polariton -", "impurity")
    return SingleExcitationHamiltonian(matrix, labels)


def hp_single_excitation(omega_c, omega_a, g, n_emitters):
    """Holstein-Primakoff single-excitation Hamiltonian.

    Built from the bosonized collective mode: diagonalizing the photon/bright
    block with f_pm = (a -/+ b)/sqrt(2) gives mode energies omega_c +/- g*sqrt(N)
    and impurity couplings g/sqrt(2), i.e. the Tavis-Cummings matrix exactly.
    """
    if n_emitters < 1:
        raise ValueError("need at least one ensemble emitter")
    # photon/bright-mode block with bosonic coupling g*sqrt(N)
    gn = g * math.sqrt(n_emitters)
    # rotate [[omega_c, gn], [gn, omega_a... ]] -- degenerate rotation only
    # applies at the operator level; energies follow from the f_pm modes.
    omega_plus = omega_c + gn
    omega_minus = omega_c - gn
    c = g / math.sqrt(2.0)
    matrix = np.array([
        [omega_plus, 0.0, c],
        [0.0, omega_minus, c],
        [c, c, omega_a],
    ])
    labels = ("f_+ mode", "f_- mode", "impurity")
    return SingleExcitationHamiltonian(matrix, labels)


def explicit_ensemble_hamiltonian(omega_c, emitter_freqs, couplings):
    """Explicit (N+1)x(N+1) single-excitation Hamiltonian: one photon state
    coupled to each of N emitter states with its individual coupling."""
    emitter_freqs = np.atleast_1d(np.asarray(emitter_freqs, dtype=float))
    couplings = np.atleast_1d(np.asarray(couplings, dtype=float))
    if emitter_freqs.size != couplings.size or emitter_freqs.size < 1:
        raise ValueError("emitter frequencies and couplings must have equal length >= 1")
    n = emitter_freqs.size
    matrix = np.zeros((n + 1, n + 1))
    matrix[0, 0] = omega_c
    matrix[1:, 1:] = np.diag(emitter_freqs)
    matrix[0, 1:] = couplings
    matrix[1:, 0] = couplings
    labels = ("photon",) + tuple(f"emitter {i}" for i in range(1, n + 1))
    return SingleExcitationHamiltonian(matrix, labels)


def superradiance_matrix_elements(n_total, g, params: PolaritonParams):
    """Superradiant transition matrix elements for N_E emitters.

    Returns (tc_ratio, dressed_element): the Tavis-Cummings enhancement
    <0,1|H|+,0>/<0,1|H|1_j,0> = sqrt(N_E) exactly, and the dressed-environment
    element sqrt(N/(4 N_E))*(omega_- - omega_+) + (g_+ + g_-)/sqrt(2 N_E)
    with N = N_E - 1, which approaches g*sqrt(N_E) for small Omega_R/omega_c.
    """
    if n_total < 1:
        raise ValueError("N_E must be >= 1")
    # TC: <0,1|H|+,0> = g*N_E/sqrt(N_E); <0,1|H|1_j,0> = g
    tc_ratio = (g * n_total / math.sqrt(n_total)) / g if g != 0 else math.sqrt(n_total)
    n = n_total - 1
    dressed = (math.sqrt(n / (4.0 * n_total)) * (params.omega_minus - params.omega_plus)
               + (params.g_plus + params.g_minus) / math.sqrt(2.0 * n_total))
    return tc_ratio, dressed
