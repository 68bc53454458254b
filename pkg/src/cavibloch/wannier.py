"""Real, symmetric (maximally localized) Wannier functions of a 1D lattice.

The construction sums gauge-fixed Bloch states over a discrete
quasimomentum grid, giving Wannier functions that are periodic over the
n_q-site supercell and exactly orthonormal between lattice translates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bands import BandStructure
from .errors import NumericalError


@dataclass(frozen=True)
class WannierFunction:
    grid: np.ndarray  # x = k_l z, uniform, covers the supercell
    values: np.ndarray  # real amplitudes, unit L2 norm on the grid
    center_site: int
    depth_v0: float
    n_per_site: int

    @property
    def dx(self) -> float:
        return float(self.grid[1] - self.grid[0])

    def translated(self, sites: int) -> np.ndarray:
        """Values of w(x - sites * a_l); exact integer roll on the grid."""
        return np.roll(self.values, sites * self.n_per_site)


def supercell_grid(n_sites: int, n_per_site: int) -> np.ndarray:
    """Uniform grid over one supercell of n_sites lattice periods."""
    n = n_sites * n_per_site
    dx = np.pi / n_per_site
    return dx * (np.arange(n) - n // 2)


def compute_wannier(bands: BandStructure, band_index: int = 0,
                    center: int = 0, n_per_site: int = 32) -> WannierFunction:
    """Wannier function of one band, centered on the given lattice site.

    The Bloch gauge fixed in compute_band_structure makes the result real
    and (for even bands) symmetric about the site center.
    """
    if band_index + 1 < bands.n_bands:
        gaps = bands.energies[:, band_index + 1] - bands.energies[:, band_index]
        if gaps.min() <= 0:
            raise NumericalError(
                f"band {band_index} touches band {band_index + 1} "
                f"(min gap {gaps.min():.3e} E_R); Wannier construction refused")

    n_q = len(bands.quasimomenta)
    grid = supercell_grid(n_q, n_per_site)
    m = np.arange(-bands.fourier_order, bands.fourier_order + 1)
    # plane-wave exponents k = q + 2m for every (q, m) pair
    k = bands.quasimomenta[:, None] + 2 * m[None, :]
    phases = np.exp(1j * k.reshape(-1, 1) * grid[None, :])
    amplitudes = bands.bloch_coefficients[:, band_index, :].reshape(-1)
    w = amplitudes @ phases

    imag_leak = np.max(np.abs(w.imag)) / max(np.max(np.abs(w.real)), 1e-300)
    if imag_leak > 1e-9:
        raise NumericalError(
            f"Wannier function not real (relative imaginary part {imag_leak:.2e})")
    w = w.real

    dx = np.pi / n_per_site
    w = w / np.sqrt(np.sum(w ** 2) * dx)
    if center:
        w = np.roll(w, center * n_per_site)
    return WannierFunction(grid=grid, values=w, center_site=center,
                           depth_v0=bands.depth_v0, n_per_site=n_per_site)
