"""Thermodynamics from the direct Boltzmann sum.

Sweeps beta for the bound H2 and LiH ladders, prints Z, U, S and C, and
checks C against beta^2 Var(E). The Euler-Maclaurin estimate is printed next
to the direct sum with and without the top-of-ladder corrections.

Run:  python3 gallery/thermo_sweep.py
"""

import warnings

from iskp import thermo
from iskp.calibration import load_profile
from iskp.units import lookup_molecule


def main():
    cal = load_profile("default")
    for name in ("H2", "LiH"):
        s = cal.spectrum(lookup_molecule(name), -1)
        model = thermo.ThermoModel(s, 0)
        rec = model.recast()
        print(f"{name} cbar=-1 m=0: {rec.n_max + 1} bound levels {', '.join(f'{e:.5f}' for e in rec.levels())} eV")
        print(f"{'beta':>6}{'Z':>10}{'U':>12}{'S':>10}{'C':>12}{'C_fluct':>12}{'Z_EM':>10}{'Z_EM+top':>10}")
        for beta in (0.5, 1.0, 2.0, 5.0, 10.0):
            p = thermo.observables(model, beta, thermo.ThermoSettings(magnetic=False))
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", thermo.EulerMaclaurinFallbackWarning)
                em = thermo.partition_euler_maclaurin(rec, beta).Z
                em_top = thermo.partition_euler_maclaurin(rec, beta, upper_terms=True).Z
            print(f"{beta:>6.1f}{p.Z:>10.5f}{p.U:>12.6f}{p.S:>10.5f}{p.C:>12.6f}"
                  f"{thermo.heat_capacity_fluctuation(rec, beta):>12.6f}{em:>10.5f}{em_top:>10.5f}")
        print()


if __name__ == "__main__":
    main()
