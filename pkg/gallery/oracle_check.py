"""Closed form against the finite-difference oracle.

Solves the radial equation on a grid (three-point stencil, two Richardson
steps) for the H2 cbar=-1 ladder, with and without the approximation that
makes the problem exactly solvable, and compares with the closed form. Also
reruns the unscreened (Kratzer) reference case in reduced units.

Run:  python3 gallery/oracle_check.py
"""

from iskp.calibration import load_profile
from iskp.spectrum import FieldConfig, kratzer_limit_energy
from iskp.units import UnitSystem, lookup_molecule
from iskp.validation import FDMode, RadialGrid, fd_eigensolve, fd_kratzer


def main():
    cal = load_profile("default")
    s = cal.spectrum(lookup_molecule("H2"), -1, FieldConfig(w=0.5, xi=0.3))
    for m in (0, 1):
        approx = fd_eigensolve(s, m, 4)
        exact = fd_eigensolve(s, m, 4, mode=FDMode.EXACT)
        print(f"H2 cbar=-1 w=0.5 xi=0.3 m={m}")
        print(f"{'n':>3}{'closed':>14}{'FD approx':>14}{'rel':>10}{'FD exact':>14}")
        for n in range(4):
            e = s.energy(n, m).E
            print(f"{n:>3}{e:>14.8f}{approx.energies[n]:>14.8f}{abs(approx.energies[n] / e - 1):>10.1e}"
                  f"{exact.energies[n]:>14.8f}")
        print()

    units = UnitSystem.reduced(0.25)
    fd = fd_kratzer(400.0, 4.0, units, 0, 6, RadialGrid(1e-3, 600.0, 12000))
    print("Kratzer, De=400, re=4, k=1/4:")
    for n in range(6):
        e = kratzer_limit_energy(400.0, 4.0, units, n, 0).E
        print(f"  n={n}: closed {e:+.6f}  FD {fd.energies[n]:+.6f}  |E + De| = {abs(e + 400):.5f}")


if __name__ == "__main__":
    main()
