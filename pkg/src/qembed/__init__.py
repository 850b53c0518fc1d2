"""Quantized embedding for collective light-matter coupling.

Dresses cavity Green functions with molecular-ensemble linear response,
computes polaritonic spectral densities and effective few-state
Hamiltonians, and validates them against exact small-system
diagonalization.
"""

from .units import Quantity, convert
from .polarizability import (TwoLevelEmitter, SumOverStatesModel, MixtureModel,
                             alpha_rwa, alpha_full, alpha_sos, alpha_mixture,
                             isotropic_average, load_tddft_roots)
from .medium import (EnsembleSpec, Permittivity, clausius_mossotti_dilute,
                     permittivity_from_chi, drude_gold, GOLD, VACUUM)
from .greens import (LorentzianMode, PlanarCavity, QuadratureSettings,
                     single_mode_green, free_space_im_green,
                     fresnel_coefficients, fp_scattering_green_xx)
from .embedding import (LocalFieldParams, qerra_dress, local_field_correct,
                        spectral_density, split_bulk_scattering)
from .qo_models import (PolaritonParams, SingleExcitationHamiltonian,
                        coupling_from_mode, f1_from_rabi,
                        qerra_polariton_params, tc_single_excitation,
                        qerra_single_excitation, hp_single_excitation,
                        explicit_ensemble_hamiltonian,
                        superradiance_matrix_elements)
from .scenario import (Scenario, ScanResult, run_scenario, emit_csv,
                       emit_plot, load_scenario_file)
from .presets import get_preset, preset_names

__version__ = "0.1.0"
