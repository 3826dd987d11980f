"""Physical constants (CODATA 2018), all in SI units.

Values are pinned explicitly rather than imported from scipy so that results
do not drift with the CODATA revision shipped by the installed scipy.
"""

C = 299792458.0                 # m/s, speed of light (exact)
H = 6.62607015e-34              # J*s, Planck constant (exact)
HBAR = 1.054571817e-34          # J*s, reduced Planck constant
KB = 1.380649e-23               # J/K, Boltzmann constant (exact)
MU_B = 9.2740100783e-24         # J/T, Bohr magneton
MU_0 = 1.25663706212e-6         # N/A^2, vacuum permeability
E_CHARGE = 1.602176634e-19      # C, elementary charge (exact)

# derived conversion helpers
KB_MEV_PER_K = KB / E_CHARGE * 1e3      # ~0.08617 meV/K
MEV_TO_GHZ = 1e-3 * E_CHARGE / H / 1e9  # ~241.8 GHz/meV
