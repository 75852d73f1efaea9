"""Physical constants, unit handling and the diatomic-molecule database.

Energies are carried in eV and lengths in angstrom everywhere in the
package. The database is a whitespace-separated text file with one record
per line::

    # comment
    name  De[eV]  re[A]  alpha[1/A]  mu[amu]

The default file ships with the package (``data/molecules.dat``); the
environment variable ``ISKP_MOLECULES`` points :func:`default_database`
at another file.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Mapping

ENV_DATABASE = "ISKP_MOLECULES"

HBAR_C = 1973.269  # eV * angstrom
AMU_TO_EV = 931.5e6  # eV per amu (mu c^2)


class UnknownMoleculeError(KeyError):
    pass


class DatabaseFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Molecule:
    name: str
    De: float  # eV
    re: float  # angstrom
    alpha: float  # 1/angstrom
    mu: float  # amu

    def __post_init__(self):
        for field in ("De", "re", "alpha", "mu"):
            if not getattr(self, field) > 0:
                raise ValueError(f"{self.name}: {field} must be positive")


class UnitMode(str, Enum):
    PHYSICAL = "physical"
    REDUCED = "reduced"  # hbar = 2 mu = 1


@dataclass(frozen=True)
class UnitSystem:
    hbar_c: float = HBAR_C
    amu_to_eV: float = AMU_TO_EV
    mode: UnitMode = UnitMode.PHYSICAL
    # 2 mu / hbar^2 in reduced mode; 1 for the usual hbar = 2 mu = 1 choice
    k_reduced: float = 1.0

    def __post_init__(self):
        if self.hbar_c <= 0 or self.amu_to_eV <= 0 or self.k_reduced <= 0:
            raise ValueError("unit constants must be positive")

    @classmethod
    def reduced(cls, k: float = 1.0) -> "UnitSystem":
        return cls(mode=UnitMode.REDUCED, k_reduced=k)


PHYSICAL = UnitSystem()
REDUCED = UnitSystem.reduced()


def two_mu_over_hbar2(mu: float | Molecule, units: UnitSystem = PHYSICAL) -> float:
    """Return the factor 2 mu / hbar^2 in eV^-1 A^-2 (``k_reduced`` in reduced units).

    ``mu`` is a reduced mass in amu or a :class:`Molecule`.
    """
    if units.mode is UnitMode.REDUCED:
        return units.k_reduced
    if isinstance(mu, Molecule):
        mu = mu.mu
    return 2.0 * (mu * units.amu_to_eV) / units.hbar_c**2


class MoleculeDatabase(Mapping[str, Molecule]):
    """Case-insensitive, read-only mapping of molecule name to constants."""

    def __init__(self, molecules: Iterable[Molecule] = ()):
        self._by_key: dict[str, Molecule] = {}
        for mol in molecules:
            key = mol.name.lower()
            if key in self._by_key:
                raise DatabaseFormatError(f"duplicate molecule {mol.name!r}")
            self._by_key[key] = mol

    def __getitem__(self, name: str) -> Molecule:
        try:
            return self._by_key[name.lower()]
        except KeyError:
            raise UnknownMoleculeError(
                f"unknown molecule {name!r}; available: {', '.join(self.names)}"
            ) from None

    def __iter__(self) -> Iterator[str]:
        return (mol.name for mol in self._by_key.values())

    def __len__(self) -> int:
        return len(self._by_key)

    @property
    def names(self) -> list[str]:
        return [mol.name for mol in self._by_key.values()]

    @classmethod
    def parse(cls, text: str) -> "MoleculeDatabase":
        molecules = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 5:
                raise DatabaseFormatError(
                    f"line {lineno}: expected 'name De re alpha mu', got {raw!r}"
                )
            name, *numbers = parts
            try:
                De, re, alpha, mu = (float(x) for x in numbers)
            except ValueError as exc:
                raise DatabaseFormatError(f"line {lineno}: {exc}") from None
            molecules.append(Molecule(name, De, re, alpha, mu))
        return cls(molecules)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "MoleculeDatabase":
        return cls.parse(Path(path).read_text(encoding="utf-8"))

    def dumps(self) -> str:
        lines = ["# name  De[eV]  re[A]  alpha[1/A]  mu[amu]"]
        for mol in self._by_key.values():
            lines.append(f"{mol.name} {mol.De!r} {mol.re!r} {mol.alpha!r} {mol.mu!r}")
        return "\n".join(lines) + "\n"


def default_database() -> MoleculeDatabase:
    override = os.environ.get(ENV_DATABASE)
    if override:
        return MoleculeDatabase.load(override)
    text = resources.files("iskp").joinpath("data/molecules.dat").read_text("utf-8")
    return MoleculeDatabase.parse(text)


def lookup_molecule(name: str, db: MoleculeDatabase | None = None) -> Molecule:
    if db is None:
        db = default_database()
    return db[name]
