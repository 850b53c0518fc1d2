"""Named scenario presets for the published application setups.

Each preset maps to a list of (label, Scenario) pairs; scans over detuning
or emitter damping are expressed as scenario lists, one output per entry.
"""

from .units import wavelength_nm_to_energy_hartree, hartree_to_ev, debye_to_atomic, ev_to_hartree
from .scenario import Scenario, scenario_from_dict
from .qo_models import f1_from_rabi

# shared single-mode cavity of the two-level scans
_OMEGA_C_EV = 5.44
_QUALITY = 25.8
_RABI_OVER_OMEGA = 0.13
_N_TWO_LEVEL = 6e6
_D_DEBYE = 2.25

# molecular-mixture scans: mode tuned to the 227.8 nm resonance
_OMEGA_C_MOL_EV = hartree_to_ev(wavelength_nm_to_energy_hartree(227.8))
_N_MIXTURE = 1e8
_ETA_HARTREE = 5e-3

_MIXTURE = [
    {"kind": "sos", "roots": "trans_azopyrrole", "fraction": 0.15},
    {"kind": "sos", "roots": "cis_azopyrrole", "fraction": 0.05},
    {"kind": "sos", "roots": "chloroform", "fraction": 0.80},
]


def _shared_f1():
    """Mode amplitude fixed by the two-level scans (Omega_R/omega_c = 0.13)."""
    omega_c = ev_to_hartree(_OMEGA_C_EV)
    return f1_from_rabi(omega_c, _RABI_OVER_OMEGA * omega_c,
                        debye_to_atomic(_D_DEBYE), _N_TWO_LEVEL)


def _two_level_scenario(label, detuning_over_omega=0.0, omega_over_gamma=200.0):
    omega_a_ev = _OMEGA_C_EV * (1.0 - detuning_over_omega)
    raw = {
        "cavity": {"kind": "single_mode", "omega_c_ev": _OMEGA_C_EV,
                   "quality_factor": _QUALITY,
                   "rabi_over_omega": _RABI_OVER_OMEGA},
        "ensemble": {"N": _N_TWO_LEVEL, "components": [
            {"kind": "rwa", "d_debye": _D_DEBYE, "omega_a_ev": omega_a_ev,
             "omega_over_gamma": omega_over_gamma}]},
        "embedding": {"kind": "qerra"},
        "scan": {"omega_min_ev": 0.70 * _OMEGA_C_EV,
                 "omega_max_ev": 1.30 * _OMEGA_C_EV, "points": 1500},
        "output": {"quantities": ["J", "J_bare", "alpha_ave_im"]},
    }
    return scenario_from_dict(raw, name=label)


def _fig2b():
    return [
        (f"detuning_{tag}", _two_level_scenario(f"fig2b_detuning_{tag}",
                                                detuning_over_omega=delta))
        for tag, delta in (("m0.05", -0.05), ("0", 0.0), ("p0.05", 0.05))
    ]


def _fig2c():
    return [
        (f"gamma_{ratio}", _two_level_scenario(f"fig2c_gamma_{ratio}",
                                               omega_over_gamma=ratio))
        for ratio in (800, 400, 200, 100)
    ]


def _fig2e():
    raw = {
        "cavity": {"kind": "single_mode", "omega_c_ev": _OMEGA_C_MOL_EV,
                   "quality_factor": _QUALITY, "f1": _shared_f1()},
        "ensemble": {"N": _N_MIXTURE, "eta_hartree": _ETA_HARTREE,
                     "components": _MIXTURE},
        "embedding": {"kind": "qerra"},
        "scan": {"omega_min_ev": 3.2, "omega_max_ev": 7.6, "points": 1400},
        "output": {"quantities": ["J", "J_bare", "alpha_ave_im"]},
    }
    return [("mixture", scenario_from_dict(raw, name="fig2e"))]


def _fabry_perot_raw():
    return {
        "cavity": {"kind": "fabry_perot", "length_nm": 388.0,
                   "mirror": "drude_gold", "fill": "ensemble"},
        "ensemble": {"N": 1.0, "density_per_nm3": 3.0,
                     "eta_hartree": _ETA_HARTREE, "components": _MIXTURE},
        "embedding": {"kind": "full_mqed", "r_c_nm": 1.0},
    }


def _fig2g():
    raw = _fabry_perot_raw()
    raw["scan"] = {"omega_min_ev": 4.4, "omega_max_ev": 6.4, "points": 260}
    raw["output"] = {"quantities": ["J", "J_sc", "J_0", "alpha_ave_im"]}
    return [("full", scenario_from_dict(raw, name="fig2g"))]


def _fig2h():
    raw = _fabry_perot_raw()
    raw["scan"] = {"omega_min_ev": 4.8, "omega_max_ev": 6.1, "points": 220}
    raw["output"] = {"quantities": ["J", "J_sc", "J_sc_empty"]}
    return [("scattering", scenario_from_dict(raw, name="fig2h"))]


_PRESETS = {
    "fig2b": _fig2b,
    "fig2c": _fig2c,
    "fig2e": _fig2e,
    "fig2g": _fig2g,
    "fig2h": _fig2h,
}


def preset_names():
    return sorted(_PRESETS)


def get_preset(name) -> list:
    """Return the list of (label, Scenario) pairs for a named preset."""
    try:
        factory = _PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; available: {preset_names()}")
    return factory()
