"""Band structure of the sinusoidal lattice by plane-wave diagonalization.

Positions are measured in 1/k_l and energies in E_R, where the scaled
Hamiltonian reads -d^2/dx^2 + v0 sin^2(x).  Bloch states are expanded as
psi_{q,b}(x) = e^{i q x} sum_m c_m e^{2 i m x} with q in (-1, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import NumericalError
from .lattice import LatticeSpec


@dataclass(frozen=True)
class BandStructure:
    quasimomenta: np.ndarray  # shape (n_q,), units of k_l
    energies: np.ndarray  # shape (n_q, n_bands), units of E_R
    bloch_coefficients: np.ndarray  # shape (n_q, n_bands, 2*order+1)
    depth_v0: float
    fourier_order: int

    @property
    def n_bands(self) -> int:
        return self.energies.shape[1]

    def band_gap(self, lower: int = 0, upper: int = 1) -> float:
        """min_q E_upper(q) - max_q E_lower(q), in E_R."""
        return float(self.energies[:, upper].min()
                     - self.energies[:, lower].max())


def solve_single_q(q: float, depth_v0: float, n_bands: int,
                   fourier_order: int):
    """Diagonalize the plane-wave Hamiltonian at one quasimomentum.

    Returns (energies, coefficients) for the lowest n_bands; coefficients
    are real and indexed by m = -fourier_order .. fourier_order.
    """
    m = np.arange(-fourier_order, fourier_order + 1)
    diagonal = (q + 2 * m) ** 2 + depth_v0 / 2
    off_diagonal = np.full(2 * fourier_order, -depth_v0 / 4)
    try:
        vals, vecs = eigh_tridiagonal(
            diagonal, off_diagonal, select="i",
            select_range=(0, n_bands - 1))
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NumericalError(
            f"plane-wave eigensolver failed at q={q} with "
            f"fourier_order={fourier_order}") from exc
    return vals, vecs.T


def compute_band_structure(spec: LatticeSpec, n_bands: int = 3,
                           n_q: int = 64, symmetric: bool = True,
                           fourier_order: int | None = None) -> BandStructure:
    """Dispersion and Bloch coefficients on an n_q grid over the first BZ.

    With symmetric=True the grid is offset by half a spacing so that the
    band edges q = 0, +-1 are excluded; this keeps the Bloch-phase gauge
    well defined for the Wannier construction.  Use band_energies_at for
    exact values at specific quasimomenta.
    """
    if n_bands < 1:
        raise ValueError("n_bands must be >= 1")
    if n_q < 16:
        raise ValueError("n_q must be >= 16")
    if fourier_order is None:
        fourier_order = max(2 * n_bands + 8, 12)

    dq = 2.0 / n_q
    momenta = -1.0 + dq * np.arange(n_q)
    if symmetric:
        momenta = momenta + dq / 2

    energies = np.empty((n_q, n_bands))
    coeffs = np.empty((n_q, n_bands, 2 * fourier_order + 1))
    for i, q in enumerate(momenta):
        energies[i], coeffs[i] = solve_single_q(
            q, spec.depth_v0, n_bands, fourier_order)

    _fix_bloch_gauge(coeffs, fourier_order)
    return BandStructure(quasimomenta=momenta, energies=energies,
                         bloch_coefficients=coeffs, depth_v0=spec.depth_v0,
                         fourier_order=fourier_order)


def _fix_bloch_gauge(coeffs: np.ndarray, fourier_order: int) -> None:
    """Fix Bloch-coefficient signs so the Wannier transform is real and
    localized: smooth sign continuity in q, then a per-band convention
    tied to the plane-wave content at the zone center."""
    n_q, n_bands = coeffs.shape[:2]
    for b in range(n_bands):
        for i in range(1, n_q):
            if np.dot(coeffs[i - 1, b], coeffs[i, b]) < 0:
                coeffs[i, b] *= -1
        center = coeffs[n_q // 2, b, fourier_order:]
        dominant = center[np.argmax(np.abs(center))]
        if np.sign(dominant) != (-1) ** (b // 2):
            coeffs[:, b, :] *= -1


def band_energies_at(depth_v0: float, q: float, n_bands: int = 3,
                     fourier_order: int = 24) -> np.ndarray:
    """Band energies at an exact quasimomentum, in E_R."""
    vals, _ = solve_single_q(q, depth_v0, n_bands, fourier_order)
    return vals


def tunneling_rate(bands: BandStructure) -> float:
    """Ground-band tunneling J0 = (E_0(k_l) - E_0(0)) / 4, in E_R."""
    order = max(bands.fourier_order, 24)
    e_edge = band_energies_at(bands.depth_v0, 1.0, 1, order)[0]
    e_center = band_energies_at(bands.depth_v0, 0.0, 1, order)[0]
    j0 = (e_edge - e_center) / 4
    if j0 < 0:
        raise NumericalError("negative ground-band tunneling rate")
    return float(j0)


def band_gap_er(depth_v0: float) -> float:
    """Gap between the first excited band at q=0 and the ground band at the
    zone edge, E_1(0) - E_0(k_l), in E_R."""
    e1_center = band_energies_at(depth_v0, 0.0, 2)[1]
    e0_edge = band_energies_at(depth_v0, 1.0, 1)[0]
    return float(e1_center - e0_edge)
