"""Effective-medium and material-permittivity tests."""

import numpy as np
import pytest

from qembed.medium import (
    EnsembleSpec, Permittivity, clausius_mossotti_dilute,
    permittivity_from_chi, ensemble_permittivity, drude_gold, GOLD, VACUUM,
)
from qembed.polarizability import TwoLevelEmitter, alpha_rwa
from qembed.units import EPS0, ev_to_hartree, nm_to_bohr


def test_clausius_mossotti_dilute():
    e = TwoLevelEmitter(d=1.0, omega_a=0.2, gamma_a=0.01)
    spec = EnsembleSpec(n_emitters=100.0, volume=1e6, model=e, form="rwa")
    w = np.linspace(0.1, 0.3, 11)
    chi = clausius_mossotti_dilute(spec, w)
    assert np.allclose(chi, (100.0 / 1e6) / EPS0 * alpha_rwa(e, w), rtol=1e-14)
    assert spec.density == pytest.approx(1e-4)


def test_clausius_mossotti_empty():
    spec = EnsembleSpec(n_emitters=0.0, volume=1.0,
                        model=TwoLevelEmitter(d=1.0, omega_a=0.2))
    assert np.all(clausius_mossotti_dilute(spec, np.array([0.1, 0.2])) == 0.0)


def test_ensemble_spec_validation():
    e = TwoLevelEmitter(d=1.0, omega_a=0.2)
    with pytest.raises(ValueError):
        EnsembleSpec(n_emitters=-1.0, volume=1.0, model=e)
    with pytest.raises(ValueError):
        EnsembleSpec(n_emitters=1.0, volume=0.0, model=e)
    with pytest.raises(ValueError):
        EnsembleSpec(n_emitters=1.0, volume=1.0, model=e, region="nowhere")


def test_permittivity_from_chi():
    eps = permittivity_from_chi(0.5 + 0.1j)
    assert eps(0.2) == pytest.approx(1.5 + 0.1j)
    eps_fn = permittivity_from_chi(lambda w: 1j * w)
    assert eps_fn(0.25) == pytest.approx(1.0 + 0.25j)


def test_ensemble_permittivity():
    e = TwoLevelEmitter(d=1.0, omega_a=0.2, gamma_a=0.01)
    spec = EnsembleSpec(n_emitters=3.0, volume=nm_to_bohr(1.0) ** 3, model=e,
                        region="fill")
    eps = ensemble_permittivity(spec)
    w = 0.19
    assert eps(w) == pytest.approx(1.0 + clausius_mossotti_dilute(spec, w))


def test_drude_gold_against_si_oracle():
    # independently evaluated in SI units from omega_p = 2.067*2pi PHz,
    # gamma = 4.4491*2pi THz
    oracle = {
        4.40: -2.774498672000 + 1.578426644376e-02j,
        5.44: -1.469274984673 + 8.351959120686e-03j,
        6.40: -0.784056840182 + 5.129163178288e-03j,
    }
    for ev, ref in oracle.items():
        eps = drude_gold(ev_to_hartree(ev))
        assert eps.real == pytest.approx(ref.real, rel=1e-6)
        assert eps.imag == pytest.approx(ref.imag, rel=1e-6)


def test_drude_gold_limits():
    # high-frequency transparency and passivity
    assert drude_gold(ev_to_hartree(5000.0)).real == pytest.approx(1.0, abs=1e-4)
    w = np.linspace(ev_to_hartree(0.5), ev_to_hartree(10.0), 50)
    assert np.all(drude_gold(w).imag > 0)
    assert GOLD(ev_to_hartree(5.44)) == drude_gold(ev_to_hartree(5.44))


def test_vacuum():
    assert VACUUM(0.3) == 1.0 + 0.0j
    assert VACUUM.label == "vacuum"
    assert isinstance(GOLD, Permittivity)
