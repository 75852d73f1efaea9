"""Acceptance criteria, one pass/fail line each.

Gating criteria assert; criterion 4 (best-effort field calibration) and
criterion 9 (trend diagnostics) only report. Everything gating runs under the
packaged default calibration; lines starting with "note" give the same
measurement under the alternative reproduction profile for context.
"""

import math
import time
import warnings

import numpy as np
import pytest
from conftest import ACCEPTANCE_LINES
from test_units import TABLE_1

from iskp import thermo
from iskp.cli import KRATZER_K, main
from iskp.numdiff import DerivativeSettings, ridders
from iskp.spectrum import FieldConfig, kratzer_limit_energy, n_max
from iskp.tables import ENERGY_TABLES, KRATZER_DE, KRATZER_RE, TABLE_11
from iskp.units import UnitSystem, lookup_molecule
from iskp.validation import Case, RadialGrid, fd_kratzer, verify_closed_form

MOLECULES = ("H2", "HCl", "LiH")
ZERO, B2, PHI2, B2PHI2 = range(4)


def report(k, passed, detail):
    line = f"CRITERION {k} {'PASS' if passed else 'FAIL'}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return passed


def note(k, detail):
    line = f"  note {k}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def column_deviation(cal, column, field_for):
    """Max |computed - table| over Tables 2-10 for one field column."""
    worst, where = 0.0, None
    for number, tab in sorted(ENERGY_TABLES.items()):
        mol = lookup_molecule(tab.molecule)
        s = cal.spectrum(mol, tab.cbar, field_for(mol))
        for m, n, ref in tab.column(column):
            d = abs(s.energy(n, m).E - ref)
            if d > worst:
                worst, where = d, (number, m, n)
    return worst, where


# -- 1 ---------------------------------------------------------------------------


def test_criterion_1_table1_fixture(db):
    exact = all((db[n].De, db[n].re, db[n].alpha, db[n].mu) == TABLE_1[n] for n in TABLE_1)
    reps = 1000
    t0 = time.perf_counter()
    for _ in range(reps):
        for n in TABLE_1:
            db[n]
    per_lookup = (time.perf_counter() - t0) / (reps * len(TABLE_1))
    ok = exact and per_lookup < 1e-3
    report(1, ok, f"12 constants exact={exact}; lookup {per_lookup * 1e6:.2f} us (limit 1 ms)")
    assert ok


# -- 2 ---------------------------------------------------------------------------


def test_criterion_2_zero_field(cal_default, cal_repro):
    t0 = time.perf_counter()
    worst, where = column_deviation(cal_default, ZERO, lambda mol: FieldConfig())
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-4 and elapsed < 1.0
    report(2, ok, f"delta={cal_default.delta_mode!r}: max |dE| = {worst:.4g} eV at table/m/n {where} "
                  f"(limit 1e-4); 108 values in {elapsed * 1e3:.1f} ms")
    rw, rwhere = column_deviation(cal_repro, ZERO, lambda mol: FieldConfig())
    note(2, f"reproduction profile (delta = re, table Omega-form): max |dE| = {rw:.3g} eV at {rwhere}")
    assert ok


# -- 3 ---------------------------------------------------------------------------


def test_criterion_3_flux_only(cal_default, cal_repro):
    worst, where = column_deviation(cal_default, PHI2, lambda mol: FieldConfig(xi=2.0))
    mol = lookup_molecule("H2")
    e_shift = cal_default.spectrum(mol, -1, FieldConfig(xi=2.0)).energy(0, -1).E
    e_plain = cal_default.spectrum(mol, -1).energy(0, 1).E
    degenerate = abs(e_shift - e_plain) <= 1e-6
    value_ok = abs(e_plain - 0.015776) <= 1e-6
    ok = worst <= 1e-4 and degenerate and value_ok
    report(3, ok, f"Phi=2 columns max |dE| = {worst:.4g} eV at {where} (limit 1e-4); "
                  f"E(m=-1,xi=2) - E(m=1,xi=0) = {e_shift - e_plain:.1e}; E = {e_plain:.6f} vs 0.015776")
    rw, rwhere = column_deviation(cal_repro, PHI2, lambda mol: FieldConfig(xi=2.0))
    r = cal_repro.spectrum(mol, -1).energy(0, 1).E
    note(3, f"reproduction profile: max |dE| = {rw:.3g} eV at {rwhere}; E(m=1,xi=0) = {r:.6f}")
    assert ok


# -- 4 (best effort) ---------------------------------------------------------------


def test_criterion_4_magnetic_columns(cal_default, cal_repro):
    tab = ENERGY_TABLES[2]
    mol = lookup_molecule("H2")
    results = {}
    for label, cal in (("default", cal_default), ("reproduction", cal_repro)):
        s = cal.spectrum(mol, -1, cal.field(mol, 2.0, 0.0))
        worst = max(abs(s.energy(n, m).E - ref) for m, n, ref in tab.column(B2))
        results[label] = (cal.w_star, worst)
    w, worst = results["default"]
    report(4, worst <= 1e-3, f"w* = {w:.6g}: Table 2 B=2 column max |dE| = {worst:.4g} eV (limit 1e-3; best effort)")
    w, worst = results["reproduction"]
    note(4, f"reproduction profile w* = {w:.6g}: max |dE| = {worst:.3g} eV")


# -- 5 ---------------------------------------------------------------------------


def test_criterion_5_oracle(cal_default):
    cases = [Case(name, c, m, cal_default.spectrum(lookup_molecule(name), c))
             for name in MOLECULES for c in (-1, 0, 1) for m in (0, 1, -1)]
    t0 = time.perf_counter()
    rep = verify_closed_form(cases, n_levels=4, rtol=1e-4, grid_points=4000)
    elapsed = time.perf_counter() - t0
    bad = rep.failures()
    bound = [r for r in rep.rows if r.bound]
    bound_worst = max((r.rel_diff for r in bound), default=0.0)
    drift = max(r.drift for r in rep.rows)
    bound_drift = max((r.drift for r in bound), default=0.0)
    ok = not bad and drift <= 1e-6 and elapsed < 60
    report(5, ok, f"{len(rep.rows) - len(bad)}/{len(rep.rows)} within 1e-4 rel; grid drift max {drift:.2e} eV "
                  f"(limit 1e-6); {elapsed:.1f} s")
    note(5, f"{len(bound)} bound levels: max rel {bound_worst:.2e}, drift {bound_drift:.2e} eV; "
            f"the other {len(rep.rows) - len(bound)} closed-form values lie above their potential's bound ladder")
    assert ok


# -- 6 ---------------------------------------------------------------------------


def test_criterion_6_kratzer():
    units = UnitSystem.reduced(KRATZER_K)
    closed = [kratzer_limit_energy(KRATZER_DE, KRATZER_RE, units, n, 0).E for n in range(6)]
    grid = RadialGrid(1e-3, 600.0, 12000)
    fd = fd_kratzer(KRATZER_DE, KRATZER_RE, units, 0, 6, grid).energies
    reference = [p for p, _ in TABLE_11]
    closed_mag = [abs(e + KRATZER_DE) for e in closed]
    fd_mag = [abs(e + KRATZER_DE) for e in fd]
    rel_closed = max(abs(a / p - 1) for a, p in zip(closed_mag, reference))
    rel_fd = max(abs(a / p - 1) for a, p in zip(fd_mag, reference))
    rel_fd_closed = max(abs(a / b - 1) for a, b in zip(fd, closed))
    ok = rel_closed <= 1e-3 and rel_fd <= 1e-3
    report(6, ok, f"k = {KRATZER_K}, magnitudes |E + De|: closed form max rel {rel_closed:.3e}, "
                  f"FD max rel {rel_fd:.3e} (limit 1e-3)")
    ratios = [p / a for a, p in zip(closed_mag, reference)]
    note(6, f"FD vs closed form {rel_fd_closed:.1e} rel; reference/computed ratio {min(ratios):.5f}..{max(ratios):.5f}; "
            f"sign: closed-form E is negative, reference magnitudes are positive")
    assert ok


# -- 7 ---------------------------------------------------------------------------


def em_sweep(cal, upper_terms):
    worst, worst_im, where, fallbacks = 0.0, 0.0, None, 0
    for name in MOLECULES:
        for c in (-1, 0, 1):
            rec = thermo.recast(cal.spectrum(lookup_molecule(name), c), 0)
            for beta in np.linspace(0.5, 5.0, 30):
                direct = thermo.partition_direct(rec, beta)
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", thermo.EulerMaclaurinFallbackWarning)
                    em = thermo.partition_euler_maclaurin(rec, beta, upper_terms=upper_terms)
                fallbacks += em.fallback
                d = abs(em.Z / direct - 1)
                if d > worst:
                    worst, where = d, (name, c, round(float(beta), 3))
                worst_im = max(worst_im, abs(em.imag) / abs(em.Z))
    return worst, worst_im, where, fallbacks


def test_criterion_7_partition(cal_default):
    worst, im, where, fallbacks = em_sweep(cal_default, upper_terms=False)
    ok = worst <= 0.02 and im <= 1e-10
    report(7, ok, f"Euler-Maclaurin vs direct sum max rel {worst:.3e} at {where} (limit 0.02); "
                  f"max |Im|/|Z| = {im:.1e}; {fallbacks}/270 points had n_max = 0 (direct sum used)")
    w2, im2, where2, _ = em_sweep(cal_default, upper_terms=True)
    note(7, f"with the upper-endpoint corrections: max rel {w2:.2e} at {where2}")
    assert ok


# -- 8 ---------------------------------------------------------------------------


SYNTHETIC = [(900.0, 2.0, 1e-3), (5000.0, 10.0, 2e-5), (1675.0, 4.0, 1e-4), (300.0, 0.7, 5e-3)]


def synthetic_recasts():
    for R, om, phi in SYNTHETIC:
        yield f"synthetic R={R:g}", thermo.SpectrumRecast(0.0, R, phi, om, n_max(R, om), True)


def test_criterion_8_identities(cal_default):
    betas = thermo.default_beta_grid()
    worst_s = worst_c = 0.0
    min_c = math.inf
    converged = True
    checked = 0
    models = [(f"{n} cbar={c}", thermo.ThermoModel(cal_default.spectrum(lookup_molecule(n), c), 0))
              for n in MOLECULES for c in (-1, 0, 1)]
    for label, model in models:
        rec = model.recast()
        for beta in betas:
            p = thermo.observables(model, float(beta), thermo.ThermoSettings(magnetic=False))
            worst_s = max(worst_s, abs(p.S - beta * (p.U - p.F)) / max(abs(p.S), 1e-300))
            fluct = thermo.heat_capacity_fluctuation(rec, beta)
            worst_c = max(worst_c, abs(p.C - fluct) / fluct if fluct > 1e-300 else abs(p.C))
            min_c = min(min_c, p.C)
            checked += 1
    for label, rec in synthetic_recasts():
        for beta in betas:
            f = lambda b: thermo.ln_partition_direct(rec, b, allow_nonpositive=True)
            ds, h = thermo.ThermoSettings().beta_settings(rec, float(beta), positive=False)
            d2 = ridders(f, float(beta), 2, ds, h)
            C = beta * beta * d2.value
            fluct = thermo.heat_capacity_fluctuation(rec, beta)
            worst_c = max(worst_c, abs(C - fluct) / fluct if fluct > 1e-300 else abs(C))
            min_c = min(min_c, C)
            # Richardson must beat the plain central difference it starts from
            plain = (f(beta + h) - 2 * f(beta) + f(beta - h)) / (h * h)
            target = fluct / (beta * beta)
            if abs(d2.value - target) > abs(plain - target) and abs(d2.value - target) > 1e-12 * target:
                converged = False
            checked += 1
    ok = worst_s <= 1e-8 and min_c >= 0 and worst_c <= 1e-8 and converged
    report(8, ok, f"{checked} points: S = beta(U - F) max rel {worst_s:.1e}; min C = {min_c:.3g}; "
                  f"C vs beta^2 Var(E) max rel {worst_c:.1e} (limits 1e-8); Richardson converged={converged}")
    assert ok


# -- 9 (diagnostic) ----------------------------------------------------------------


def test_criterion_9_trends(cal_default):
    mol = lookup_molecule("H2")
    model = thermo.ThermoModel(cal_default.spectrum(mol, -1), 0)
    betas = np.linspace(0.5, 5.0, 30)
    Z = [model.partition(b) for b in betas]
    S = [thermo.observables(model, float(b), thermo.ThermoSettings(magnetic=False)).S for b in betas]
    xis = np.linspace(0.0, 2.0, 21)
    S_flux = [thermo.observables(thermo.ThermoModel(cal_default.spectrum(mol, -1, FieldConfig(xi=x)), 0), 1.0,
                                 thermo.ThermoSettings(magnetic=False)).S for x in xis]
    checks = {
        "Z increasing with beta": bool(np.all(np.diff(Z) > 0)),
        "S decreasing with beta": bool(np.all(np.diff(S) < 0)),
        "S decreasing with AB flux": bool(np.all(np.diff(S_flux) < 0)),
    }
    report(9, all(checks.values()), "; ".join(f"{k}: {'yes' if v else 'NO'}" for k, v in checks.items())
           + " (diagnostic, H2 cbar=-1 m=0)")
    levels = model.recast().levels()
    unshifted = [float(np.exp(-b * levels).sum()) for b in betas]
    note(9, f"unshifted reading sum exp(-beta E_n) (no ground-level shift) increases with beta: "
            f"{bool(np.all(np.diff(unshifted) > 0))} ({unshifted[0]:.4g} -> {unshifted[-1]:.4g})")
    note(9, f"direct sum: Z(0.5) = {Z[0]:.6g}, Z(5) = {Z[-1]:.6g}; S(0.5) = {S[0]:.6g}, S(5) = {S[-1]:.6g}; "
            f"S(xi=0) = {S_flux[0]:.6g}, S(xi=2) = {S_flux[-1]:.6g} at beta = 1")


# -- 10 --------------------------------------------------------------------------


def test_criterion_10_determinism(tmp_path):
    outputs = []
    for run in range(2):
        paths = {}
        for key, argv in (("table", ["table", "3", "--diff"]),
                          ("thermo", ["thermo", "--grid", "0.1:5:8", "--molecule", "H2,LiH"])):
            path = tmp_path / f"{key}{run}.csv"
            assert main(argv + ["-o", str(path)]) == 0
            paths[key] = path.read_bytes()
        outputs.append(paths)
    same = outputs[0] == outputs[1]
    report(10, same, f"table and thermo outputs byte-identical across two runs: {same}")
    assert same
