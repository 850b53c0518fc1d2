"""Configuration-driven scan runner.

A Scenario couples one cavity description, one emitter ensemble and one
embedding route to a frequency scan, and produces per-quantity arrays that
can be written to CSV or plotted.  Scenario files are TOML with sections
[cavity], [ensemble], [embedding], [scan] and [output]; presets encode the
published application setups.
"""

import math

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import units
from .units import EPS0, ev_to_hartree, hartree_to_ev, nm_to_bohr, debye_to_atomic
from .polarizability import (TwoLevelEmitter, MixtureModel, alpha_mixture,
                             as_scalar_alpha, load_tddft_roots)
from .medium import GOLD, VACUUM, Permittivity, permittivity_from_chi
from .greens import (LorentzianMode, PlanarCavity, QuadratureSettings,
                     single_mode_green, fp_scattering_green_xx)
from .embedding import (LocalFieldParams, qerra_dress, local_field_correct,
                        spectral_density, split_bulk_scattering)
from .qo_models import f1_from_rabi


class ScenarioError(ValueError):
    """Invalid or inconsistent scenario configuration."""


@dataclass
class Scenario:
    """Resolved scenario: all values in internal (atomic) units."""

    name: str
    cavity: dict
    ensemble: dict
    embedding: dict
    scan: dict
    output: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.scan["omega_min"] >= self.scan["omega_max"]:
            raise ScenarioError("scan requires omega_min < omega_max")
        if self.scan["points"] < 2:
            raise ScenarioError("scan requires at least 2 points")
        if self.cavity["kind"] not in ("single_mode", "fabry_perot"):
            raise ScenarioError(f"unknown cavity kind {self.cavity['kind']!r}")
        if self.embedding["kind"] not in ("qerra", "full_mqed"):
            raise ScenarioError(f"unknown embedding kind {self.embedding['kind']!r}")


@dataclass
class ScanResult:
    """Frequency grid plus per-quantity arrays and the resolved metadata."""

    omega: np.ndarray          # atomic units
    columns: dict              # quantity name -> array
    metadata: dict

    def __post_init__(self):
        for name, col in self.columns.items():
            if len(col) != len(self.omega):
                raise ValueError(f"column {name!r} length mismatch")

    @property
    def omega_ev(self):
        return hartree_to_ev(self.omega)


def _data_path(name):
    return resources.files("qembed.data") / name


def _build_component(entry, eta):
    kind = entry.get("kind", "rwa")
    if kind in ("rwa", "full"):
        d = debye_to_atomic(entry["d_debye"])
        omega_a = ev_to_hartree(entry["omega_a_ev"])
        if "gamma_a_ev" in entry:
            gamma_a = ev_to_hartree(entry["gamma_a_ev"])
        else:
            gamma_a = omega_a / entry.get("omega_over_gamma", 200.0)
        return TwoLevelEmitter(d=d, omega_a=omega_a, gamma_a=gamma_a), kind
    if kind == "sos":
        roots = entry["roots"]
        path = _data_path(roots + ".dat")
        if not path.is_file():
            path = roots  # fall back to a user-supplied file path
        if eta is None:
            raise ScenarioError("sum-over-states components need eta_hartree")
        return load_tddft_roots(path, eta), "sos"
    raise ScenarioError(f"unknown component kind {kind!r}")


def _build_ensemble(cfg):
    """Return (n_emitters, density, scalar alpha callable, resolved dict)."""
    n = float(cfg.get("N", 0))
    eta = cfg.get("eta_hartree")
    if "density_per_nm3" in cfg:
        density = cfg["density_per_nm3"] / nm_to_bohr(1.0) ** 3
        volume = n / density if density > 0 else None
    elif "volume_nm3" in cfg:
        volume = cfg["volume_nm3"] * nm_to_bohr(1.0) ** 3
        density = n / volume
    else:
        volume = density = None

    entries = cfg.get("components", [])
    if not entries:
        alpha = lambda w: np.zeros_like(np.asarray(w, dtype=float)) * 1j
    elif len(entries) == 1 and float(entries[0].get("fraction", 1.0)) == 1.0:
        model, form = _build_component(entries[0], eta)
        alpha = as_scalar_alpha(model, form)
    else:
        models, forms = [], []
        for entry in entries:
            model, form = _build_component(entry, eta)
            models.append((model, float(entry["fraction"])))
            forms.append(form)
        mixture = MixtureModel(tuple(models), tuple(forms))
        alpha = lambda w: alpha_mixture(mixture, w)
    resolved = dict(cfg)
    resolved.setdefault("N", n)
    return n, density, volume, alpha, resolved


def _mirror_permittivity(spec):
    if spec == "drude_gold":
        return GOLD
    if spec == "vacuum":
        return VACUUM
    # tabulated: file with header + rows omega_ev, re_eps, im_eps
    table = np.loadtxt(spec, skiprows=1)
    omega_tab = ev_to_hartree(table[:, 0])
    eps_tab = table[:, 1] + 1j * table[:, 2]
    def interp(w):
        w = np.asarray(w, dtype=float)
        return (np.interp(w, omega_tab, eps_tab.real)
                + 1j * np.interp(w, omega_tab, eps_tab.imag))
    return Permittivity(interp, label=f"tabulated:{spec}")


def run_scenario(s: Scenario, settings: QuadratureSettings = QuadratureSettings(),
                 threads: int = 1) -> ScanResult:
    """Run one scenario and return the scan result.

    The result is deterministic for fixed scenario and quadrature settings,
    independent of the thread count (threads only parallelize the per-omega
    wavevector integrals of the Fabry-Perot route).
    """
    scan = s.scan
    if scan.get("spacing", "linear") == "log":
        omega = np.geomspace(scan["omega_min"], scan["omega_max"], scan["points"])
    else:
        omega = np.linspace(scan["omega_min"], scan["omega_max"], scan["points"])

    n, density, volume, alpha, ens_resolved = _build_ensemble(s.ensemble)
    quantities = s.output.get("quantities")
    columns = {}
    alpha_vals = alpha(omega)

    if s.embedding["kind"] == "qerra":
        if s.cavity["kind"] != "single_mode":
            raise ScenarioError("the qerra route expects a single-mode cavity")
        mode = _resolve_single_mode(s.cavity, ens_resolved)
        try:
            g_bare = single_mode_green(mode, omega)
            # V_mic * chi = N * alpha / eps0, independent of the volume split
            g_dressed = qerra_dress(g_bare, n * alpha_vals / EPS0, 1.0, omega)
        except Exception as exc:
            raise ScenarioError(f"qerra dressing failed: {exc}") from exc
        columns["J"] = spectral_density(g_dressed.imag, omega)
        columns["J_bare"] = spectral_density(np.asarray(g_bare).imag, omega)
        columns["re_g"] = np.asarray(g_dressed).real
        columns["im_g"] = np.asarray(g_dressed).imag
        columns["alpha_ave_im"] = np.asarray(alpha_vals).imag
        resolved_cavity = {**s.cavity, "f1": mode.f1, "gamma_c": mode.gamma_c}
    else:
        if s.cavity["kind"] != "fabry_perot":
            raise ScenarioError("the full_mqed route expects a fabry_perot cavity")
        chi = lambda w: density / EPS0 * alpha(w) if density else 0.0 * np.asarray(w)
        eps_fill = (permittivity_from_chi(chi, label="ensemble fill")
                    if s.cavity.get("fill", "ensemble") == "ensemble" else VACUUM)
        eps_mirror = _mirror_permittivity(s.cavity.get("mirror", "drude_gold"))
        cavity = PlanarCavity(length=s.cavity["length"], eps_mirror=eps_mirror,
                              eps_fill=eps_fill)
        lf = LocalFieldParams(r_c=s.embedding["r_c"], eps_host=eps_fill)

        def one(w):
            try:
                g1 = fp_scattering_green_xx(cavity, w, settings)
                pieces = local_field_correct(g1, lf, w)
            except Exception as exc:
                raise ScenarioError(
                    f"full-mqed evaluation failed at omega = "
                    f"{hartree_to_ev(w):.6f} eV: {exc}") from exc
            j = spectral_density(pieces.total.imag, w)
            j_sc, j_0 = split_bulk_scattering(pieces, w)
            return g1, j, j_sc, j_0

        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                rows = list(pool.map(one, omega))
        else:
            rows = [one(w) for w in omega]
        g1_arr = np.array([r[0] for r in rows])
        columns["J"] = np.array([r[1] for r in rows])
        columns["J_sc"] = np.array([r[2] for r in rows])
        columns["J_0"] = np.array([r[3] for r in rows])
        columns["im_g1"] = g1_arr.imag
        columns["alpha_ave_im"] = np.asarray(alpha_vals).imag

        if quantities and "J_sc_empty" in quantities:
            empty = PlanarCavity(length=s.cavity["length"], eps_mirror=eps_mirror,
                                 eps_fill=VACUUM)
            lf_empty = LocalFieldParams(r_c=s.embedding["r_c"], eps_host=VACUUM)
            def one_empty(w):
                pieces = local_field_correct(
                    fp_scattering_green_xx(empty, w, settings), lf_empty, w)
                return split_bulk_scattering(pieces, w)[0]
            if threads > 1:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    columns["J_sc_empty"] = np.array(list(pool.map(one_empty, omega)))
            else:
                columns["J_sc_empty"] = np.array([one_empty(w) for w in omega])
        resolved_cavity = dict(s.cavity)

    if quantities:
        missing = [q for q in quantities if q not in columns]
        if missing:
            raise ScenarioError(f"unknown quantities requested: {missing}")
        columns = {q: columns[q] for q in quantities}

    metadata = {
        "scenario": s.name,
        "cavity": resolved_cavity,
        "ensemble": ens_resolved,
        "embedding": dict(s.embedding),
        "scan": {**scan, "spacing": scan.get("spacing", "linear")},
        "quadrature": {"rtol": settings.rtol, "limit": settings.limit,
                       "fill_im_offset": settings.fill_im_offset},
    }
    return ScanResult(omega=omega, columns=columns, metadata=metadata)


def _resolve_single_mode(cfg, ensemble):
    omega_c = cfg["omega_c"]
    gamma_c = omega_c / cfg["quality_factor"]
    if "f1" in cfg:
        f1 = cfg["f1"]
    elif "rabi_over_omega" in cfg:
        comps = ensemble.get("components", [])
        if len(comps) != 1 or "d_debye" not in comps[0]:
            raise ScenarioError(
                "rabi_over_omega needs a single two-level component; "
                "set f1 directly for mixtures")
        d = debye_to_atomic(comps[0]["d_debye"])
        f1 = f1_from_rabi(omega_c, cfg["rabi_over_omega"] * omega_c, d,
                          float(ensemble["N"]))
    else:
        raise ScenarioError("single_mode cavity needs f1 or rabi_over_omega")
    return LorentzianMode(omega_c=omega_c, gamma_c=gamma_c, f1=f1)


# --- scenario file parsing ------------------------------------------------

def load_scenario_file(path) -> Scenario:
    """Parse a TOML scenario file into a resolved Scenario (atomic units)."""
    with open(path, "rb") as fh:
        raw = tomllib.load(fh)
    return scenario_from_dict(raw, name=raw.get("name", str(path)))


def scenario_from_dict(raw, name="scenario") -> Scenario:
    cav = dict(raw["cavity"])
    if "omega_c_ev" in cav:
        cav["omega_c"] = ev_to_hartree(cav.pop("omega_c_ev"))
    if "length_nm" in cav:
        cav["length"] = nm_to_bohr(cav.pop("length_nm"))
    emb = dict(raw.get("embedding", {"kind": "qerra"}))
    if "r_c_nm" in emb:
        emb["r_c"] = nm_to_bohr(emb.pop("r_c_nm"))
    scan = dict(raw["scan"])
    scan["omega_min"] = ev_to_hartree(scan.pop("omega_min_ev"))
    scan["omega_max"] = ev_to_hartree(scan.pop("omega_max_ev"))
    return Scenario(name=name, cavity=cav, ensemble=dict(raw.get("ensemble", {})),
                    embedding=emb, scan=scan, output=dict(raw.get("output", {})))


# --- output ---------------------------------------------------------------

def _flatten_metadata(meta, prefix=""):
    lines = []
    for key, value in meta.items():
        if isinstance(value, dict):
            lines.extend(_flatten_metadata(value, prefix=f"{prefix}{key}."))
        else:
            lines.append(f"# {prefix}{key} = {value}")
    return lines


def emit_csv(result: ScanResult, path):
    """Write the scan to CSV: '#' metadata lines, a header row, then one row
    per frequency with 17 significant digits."""
    names = list(result.columns)
    with open(path, "w", encoding="utf-8") as fh:
        for line in _flatten_metadata(result.metadata):
            fh.write(line + "\n")
        fh.write(",".join(["omega_ev"] + names) + "\n")
        omega_ev = result.omega_ev
        cols = [result.columns[n] for n in names]
        for i in range(len(result.omega)):
            row = [omega_ev[i]] + [c[i] for c in cols]
            fh.write(",".join(f"{v:.16e}" for v in row) + "\n")
    return path


def read_csv(path):
    """Read back a CSV written by emit_csv; returns (omega_ev, columns dict)."""
    with open(path, encoding="utf-8") as fh:
        lines = [l for l in fh if not l.startswith("#")]
    header = lines[0].strip().split(",")
    data = np.array([[float(x) for x in line.strip().split(",")] for line in lines[1:]])
    return data[:, 0], {name: data[:, i + 1] for i, name in enumerate(header[1:])}


def emit_plot(result: ScanResult, path, log_y=False):
    """Write a line plot of all columns versus photon energy (vector output
    for .pdf/.svg paths)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    for name, col in result.columns.items():
        ax.plot(result.omega_ev, col, label=name)
    ax.set_xlabel("photon energy (eV)")
    ax.set_ylabel("value (atomic units)")
    if log_y:
        ax.set_yscale("log")
    ax.legend(fontsize=8)
    ax.set_title(result.metadata.get("scenario", ""))
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
