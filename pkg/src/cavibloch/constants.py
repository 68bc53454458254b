"""Physical constants (SI) and atomic species profiles."""

HBAR = 1.054571817e-34  # J s
KB = 1.380649e-23  # J/K
AMU = 1.66053906660e-27  # kg

# Atomic masses in unified atomic mass units.
MASS_U = {
    "rb87": 86.909180527,
    "sr87": 86.908877500,
    "sr88": 87.905612254,
    "yb171": 170.936331515,
}

# (lattice wavelength, cavity wavelength) in meters for each supported species.
# The cavity couples to the D2 line for Rb and the 1S0 -> 3P1 line for Sr/Yb.
SPECIES_WAVELENGTHS = {
    "rb87": (532e-9, 780e-9),
    "sr87": (532e-9, 689e-9),
    "sr88": (532e-9, 689e-9),
    "yb171": (413e-9, 556e-9),
}

DEFAULT_GRAVITY = 9.80  # m/s^2
