"""Physical constants and unit conversions used throughout the package.

The numeric core works in wavenumbers (cm^-1) for energies and atomic
units for dipole moments.  Everything thermodynamic is derived from the
two CODATA constants below; no other conversion factors are hard-coded
anywhere else.
"""

# Boltzmann constant over hc, cm^-1 per kelvin (CODATA).
KB_WAVENUMBER_PER_K = 0.695034800

# Molar gas constant, J mol^-1 K^-1 (CODATA, exact).
GAS_CONSTANT = 8.31446261815324

# 1 cm^-1 of molecular energy expressed per mole: N_A*h*c = R / (k_B/hc).
WAVENUMBER_TO_J_PER_MOL = GAS_CONSTANT / KB_WAVENUMBER_PER_K
