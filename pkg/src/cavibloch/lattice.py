"""Lattice and cavity geometry.

Public inputs are SI; everything downstream works in scaled units
(lengths in 1/k_l, energies in E_R, rates in omega_B) derived once here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .constants import AMU, DEFAULT_GRAVITY, HBAR, MASS_U, SPECIES_WAVELENGTHS
from .errors import ConfigError


@dataclass(frozen=True)
class LatticeSpec:
    """Physical configuration of the tilted intracavity lattice.

    cavity_offset is the phase of the cavity standing wave at the z = 0
    lattice minimum: the coupling weight is sin^2(k_c z + cavity_offset).
    The default 0 places site n = 0 exactly at a node of the cavity mode.
    """

    mass: float  # kg
    lambda_l: float  # m
    lambda_c: float  # m
    depth_v0: float  # units of E_R
    gravity: float = DEFAULT_GRAVITY  # m/s^2
    cavity_offset: float = 0.0  # phase, radians

    def __post_init__(self):
        if self.mass <= 0:
            raise ConfigError("mass must be positive")
        if self.lambda_l <= 0 or self.lambda_c <= 0:
            raise ConfigError("wavelengths must be positive")
        if self.depth_v0 < 0:
            raise ConfigError("lattice depth must be non-negative")

    # -- derived geometry ---------------------------------------------------

    @property
    def lattice_spacing(self) -> float:
        """a_l = lambda_l / 2 in meters."""
        return self.lambda_l / 2

    @property
    def k_l(self) -> float:
        return 2 * math.pi / self.lambda_l

    @property
    def k_c(self) -> float:
        return 2 * math.pi / self.lambda_c

    @property
    def kc_over_kl(self) -> float:
        """Cavity wavenumber in lattice-recoil units; irrational in general."""
        return self.lambda_l / self.lambda_c

    # -- derived scales -----------------------------------------------------

    @property
    def recoil_energy(self) -> float:
        """E_R = hbar^2 k_l^2 / 2M in Joules."""
        return (HBAR * self.k_l) ** 2 / (2 * self.mass)

    @property
    def bloch_frequency(self) -> float:
        """omega_B = M g a_l / hbar in rad/s."""
        return self.mass * self.gravity * self.lattice_spacing / HBAR

    @property
    def omega_b_er(self) -> float:
        """hbar * omega_B in units of E_R."""
        return HBAR * self.bloch_frequency / self.recoil_energy

    def at_depth(self, depth_v0: float) -> "LatticeSpec":
        return replace(self, depth_v0=depth_v0)

    def cavity_phase_at_site(self, n: int) -> float:
        """Phase k_c z_n + offset of the cavity mode at lattice site n."""
        return math.pi * self.kc_over_kl * n + self.cavity_offset


def species_spec(name: str, depth_v0: float, gravity: float = DEFAULT_GRAVITY,
                 cavity_offset: float = 0.0) -> LatticeSpec:
    """Build a LatticeSpec from a named species profile."""
    key = name.lower()
    if key not in MASS_U:
        raise ConfigError(
            f"unknown species {name!r}; known: {sorted(MASS_U)}")
    lam_l, lam_c = SPECIES_WAVELENGTHS[key]
    return LatticeSpec(mass=MASS_U[key] * AMU, lambda_l=lam_l, lambda_c=lam_c,
                       depth_v0=depth_v0, gravity=gravity,
                       cavity_offset=cavity_offset)
