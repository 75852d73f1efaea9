"""Improved screened Kratzer potential in magnetic and Aharonov-Bohm fields.

Closed-form bound-state spectra, wavefunctions, partition functions and
thermodynamic observables for diatomic molecules, with brute-force oracles
(finite-difference eigensolver, arbitrary-precision sums) to check them.
"""

__version__ = "0.1.0"

from .calibration import Calibration, load_profile
from .potential import PotentialParams, SpecialCase, derive_strengths, evaluate_potential
from .spectrum import (
    EnergyLevel,
    FieldConfig,
    OmegaForm,
    Spectrum,
    dimensionless_params,
    energy,
    field_from_raw,
    kratzer_limit_energy,
    n_max,
    omega,
    wavefunction,
)
from .thermo import (
    ThermoModel,
    observables,
    partition_direct,
    partition_euler_maclaurin,
    recast,
)
from .units import PHYSICAL, REDUCED, Molecule, UnitSystem, default_database, lookup_molecule

__all__ = [
    "Calibration",
    "EnergyLevel",
    "FieldConfig",
    "Molecule",
    "OmegaForm",
    "PHYSICAL",
    "PotentialParams",
    "REDUCED",
    "SpecialCase",
    "Spectrum",
    "ThermoModel",
    "UnitSystem",
    "default_database",
    "derive_strengths",
    "dimensionless_params",
    "energy",
    "evaluate_potential",
    "field_from_raw",
    "kratzer_limit_energy",
    "load_profile",
    "lookup_molecule",
    "n_max",
    "observables",
    "omega",
    "partition_direct",
    "partition_euler_maclaurin",
    "recast",
    "wavefunction",
]
