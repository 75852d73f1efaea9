"""Tour of the closed-form spectrum.

Prints the lowest levels of H2, HCl and LiH for the three members of the
potential family, shows which levels are bound, and demonstrates the
pseudo-degeneracy between (m, xi) pairs that share |m + xi|.

Run:  python3 gallery/spectrum_tour.py
"""

from iskp.calibration import load_profile
from iskp.spectrum import FieldConfig
from iskp.units import lookup_molecule


def main():
    cal = load_profile("default")
    print(f"calibration: delta mode {cal.delta_mode!r}, Omega form {cal.omega_form}\n")
    for name in ("H2", "HCl", "LiH"):
        mol = lookup_molecule(name)
        for cbar in (-1, 0, 1):
            s = cal.spectrum(mol, cbar)
            rc = s.recast(0)
            levels = ", ".join(f"{s.energy(n, 0).E:+.5f}" for n in range(4))
            print(f"{name:<4} cbar={cbar:+d}  Omega={rc.omega:8.3f}  n_max={rc.n_max}  "
                  f"bound={'yes' if rc.has_bound_states else 'no ':<3}  E(n=0..3) = {levels}")
    print()

    h2 = lookup_molecule("H2")
    plain = cal.spectrum(h2, -1)
    shifted = cal.spectrum(h2, -1, FieldConfig(xi=2.0))
    print("pseudo-degeneracy, H2 cbar=-1:")
    for n in range(3):
        a, b = shifted.energy(n, -1).E, plain.energy(n, 1).E
        print(f"  n={n}: E(m=-1, xi=2) = {a:+.9f}   E(m=1, xi=0) = {b:+.9f}")

    print("\nuniform field (dimensionless w), H2 cbar=-1, n=0:")
    for w in (0.0, 0.5, 1.0, 2.0):
        s = plain.with_field(FieldConfig(w=w))
        print(f"  w={w:3.1f}: " + "  ".join(f"m={m:+d}: {s.energy(0, m).E:+.6f}" for m in (-1, 0, 1)))


if __name__ == "__main__":
    main()
