"""Wannier-Stark eigenstates of the gravity-tilted lattice.

In the tight-binding limit the eigenstate ladder is
    phi_n(x) = sum_m J_{m-n}(y) w(x - m a_l),   y = 2 J0 / (hbar omega_B),
with eigenenergy n * hbar omega_B and J_k the Bessel function of the
first kind.  A numerical-overlap mode that diagonalizes the tilted
tight-binding Hamiltonian directly is available as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import jv

from .errors import TruncationError
from .lattice import LatticeSpec
from .wannier import WannierFunction


@dataclass(frozen=True)
class WannierStarkBasis:
    site_range: tuple[int, int]  # inclusive [n_min, n_max]
    wavefunctions: np.ndarray  # shape (n_states, n_grid), real
    grid: np.ndarray
    tunneling_j0: float  # E_R
    bessel_argument: float  # y = 2 J0 / (hbar omega_B)
    omega_b_er: float  # hbar omega_B in E_R
    method: str

    @property
    def sites(self) -> np.ndarray:
        return np.arange(self.site_range[0], self.site_range[1] + 1)

    @property
    def energies_er(self) -> np.ndarray:
        """Ladder energies n * hbar omega_B in units of E_R."""
        return self.sites * self.omega_b_er

    @property
    def dx(self) -> float:
        return float(self.grid[1] - self.grid[0])

    def state(self, n: int) -> np.ndarray:
        n_min, n_max = self.site_range
        if not n_min <= n <= n_max:
            raise IndexError(f"site {n} outside range {self.site_range}")
        return self.wavefunctions[n - n_min]


def bessel_cutoff(y: float, tol: float = 1e-14) -> int:
    """Smallest k_cut with |J_k(y)| < tol for all |k| > k_cut."""
    k = max(8, int(np.ceil(abs(y))) + 8)
    while abs(jv(k, y)) > tol or abs(jv(k + 1, y)) > tol:
        k += 4
        if k > 500:
            raise TruncationError(f"Bessel weights do not decay (y={y})")
    return k


def ws_weights_bessel(y: float, sites: np.ndarray, m_values: np.ndarray) -> np.ndarray:
    """Weight matrix W[n, m] = J_{m - n}(y)."""
    return jv(m_values[None, :] - sites[:, None], y)


def ws_weights_numerical(y: float, sites: np.ndarray,
                         m_values: np.ndarray) -> np.ndarray:
    """Weights from direct diagonalization of the tilted tight-binding
    Hamiltonian tridiag(m, -J0/hbar omega_B = -y/2); validation mode."""
    diag = m_values.astype(float)
    off = np.full(len(m_values) - 1, -y / 2)
    vals, vecs = eigh_tridiagonal(diag, off)
    weights = np.empty((len(sites), len(m_values)))
    for i, n in enumerate(sites):
        j = int(np.argmin(np.abs(vals - n)))
        if abs(vals[j] - n) > 1e-6:
            raise TruncationError(
                f"tight-binding ladder eigenvalue for site {n} off by "
                f"{vals[j] - n:.2e}; widen the site window")
        v = vecs[:, j]
        # fix the gauge to match the Bessel convention: J_0(y) > 0 at m = n
        anchor = int(np.argmin(np.abs(m_values - n)))
        if v[anchor] < 0:
            v = -v
        weights[i] = v
    return weights


def build_ws_basis(spec: LatticeSpec, wannier: WannierFunction, j0: float,
                   site_range: tuple[int, int],
                   method: str = "tight-binding-bessel") -> WannierStarkBasis:
    """Assemble Wannier-Stark states over site_range on the Wannier grid."""
    n_min, n_max = site_range
    if n_min > n_max:
        raise ValueError("empty site_range")
    omega_b_er = spec.omega_b_er
    y = 2 * j0 / omega_b_er

    k_cut = bessel_cutoff(y)
    n_sites_grid = len(wannier.grid) // wannier.n_per_site
    needed = max(abs(n_min), abs(n_max)) + k_cut + 8
    if needed > n_sites_grid // 2:
        raise TruncationError(
            f"supercell of {n_sites_grid} sites too small: need half-width "
            f">= {needed} sites (site_range {site_range}, Bessel cutoff {k_cut})")

    sites = np.arange(n_min, n_max + 1)
    m_values = np.arange(n_min - k_cut, n_max + k_cut + 1)
    if method == "tight-binding-bessel":
        weights = ws_weights_bessel(y, sites, m_values)
    elif method == "numerical-overlap":
        weights = ws_weights_numerical(y, sites, m_values)
    else:
        raise ValueError(f"unknown WS construction method {method!r}")

    translates = np.empty((len(m_values), len(wannier.grid)))
    for i, m in enumerate(m_values):
        translates[i] = wannier.translated(int(m))
    wavefunctions = weights @ translates

    return WannierStarkBasis(site_range=(n_min, n_max),
                             wavefunctions=wavefunctions,
                             grid=wannier.grid, tunneling_j0=j0,
                             bessel_argument=y, omega_b_er=omega_b_er,
                             method=method)
