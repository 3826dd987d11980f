"""Crystal-field level scheme, Boltzmann populations and PL synthesis.

The ground (Z) and excited (Y) multiplets of a Kramers ion at a cubic site
split into five levels each; doublets carry degeneracy 2 and quartets
degeneracy 4.  Level energies are stored in meV relative to Z1.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import C, H, KB_MEV_PER_K, MEV_TO_GHZ


@dataclass(frozen=True)
class Level:
    label: str          # Z1..Z5 or Y1..Y5
    energy_mev: float   # relative to Z1
    degeneracy: int     # 2 (doublet) or 4 (quartet)


@dataclass
class LevelScheme:
    """Crystal-field levels plus optional relative emission amplitudes.

    ``amplitudes`` maps (Y label, Z label) to a relative dipole strength;
    missing pairs default to 1.
    """

    levels: list[Level]
    amplitudes: dict[tuple[str, str], float] = field(default_factory=dict)

    def __post_init__(self):
        if not self.levels:
            raise ValueError("level scheme must contain at least one level")
        labels = [lv.label for lv in self.levels]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate level labels")
        for lv in self.levels:
            if lv.degeneracy not in (2, 4):
                raise ValueError(f"{lv.label}: degeneracy must be 2 or 4")
            if not math.isfinite(lv.energy_mev):
                raise ValueError(f"{lv.label}: non-finite energy")
        z = self.multiplet("Z")
        if z and abs(z[0].energy_mev) > 1e-12:
            raise ValueError("Z1 must sit at zero energy")
        for group in ("Z", "Y"):
            ms = self.multiplet(group)
            for lo, hi in zip(ms, ms[1:]):
                if hi.energy_mev <= lo.energy_mev:
                    raise ValueError(f"{group} energies must increase strictly ({lo.label} -> {hi.label})")

    def multiplet(self, group: str) -> list[Level]:
        """Levels of one multiplet ('Z' or 'Y'), ordered by index."""
        if group not in ("Z", "Y"):
            raise ValueError("multiplet must be 'Z' or 'Y'")
        sel = [lv for lv in self.levels if lv.label.startswith(group)]
        return sorted(sel, key=lambda lv: int(lv.label[1:]))

    def amplitude(self, y_label: str, z_label: str) -> float:
        return self.amplitudes.get((y_label, z_label), 1.0)


def default_level_scheme() -> LevelScheme:
    """Bundled Er3+:CeO2 level scheme.

    Z2, Y1 and Y2 use measured anchor values (Z2 - Z1 = 1.51 meV,
    Y1 - Z1 at 1530.74 nm, Y2 - Y1 = 1.13 meV).  The remaining level
    energies are plausible placeholders of typical crystal-field scale and
    should be overridden from a scenario file when actual values are known.
    Z5 emission is suppressed (amplitude 0), consistent with its
    unobserved PL line.
    """
    y1 = C / 1530.74e-9 * H / 1.602176634e-22  # meV, ~810.0
    levels = [
        Level("Z1", 0.0, 2),
        Level("Z2", 1.51, 2),
        Level("Z3", 7.0, 4),
        Level("Z4", 18.0, 4),
        Level("Z5", 40.0, 4),
        Level("Y1", y1, 2),
        Level("Y2", y1 + 1.13, 2),
        Level("Y3", y1 + 4.0, 2),
        Level("Y4", y1 + 8.0, 4),
        Level("Y5", y1 + 14.0, 4),
    ]
    amps = {("Y1", "Z5"): 0.0}
    return LevelScheme(levels, amps)


@dataclass(frozen=True)
class Isotope:
    label: str
    abundance: float
    nuclear_spin: float


@dataclass
class MaterialSample:
    """Host and dopant description used for density bookkeeping."""

    cation_density_per_m3: float
    dopant_ppm: float
    isotopes: list[Isotope] = field(default_factory=list)

    def __post_init__(self):
        if self.cation_density_per_m3 <= 0:
            raise ValueError("cation density must be positive")
        if self.isotopes:
            total = sum(i.abundance for i in self.isotopes)
            if abs(total - 1.0) > 1e-9:
                raise ValueError(f"isotope abundances sum to {total}, expected 1")


def ceo2_sample(dopant_ppm: float = 3.0) -> MaterialSample:
    """CeO2 fluorite host (a = 0.5411 nm, 4 cations/cell) with natural Er."""
    a = 0.5411e-9
    return MaterialSample(
        cation_density_per_m3=4.0 / a**3,
        dopant_ppm=dopant_ppm,
        isotopes=[Isotope("even", 0.77, 0.0), Isotope("Er167", 0.23, 3.5)],
    )


def boltzmann_populations(scheme: LevelScheme, multiplet: str, temperature_k: float):
    """Thermal occupation fractions of one multiplet.

    fraction_i is proportional to degeneracy_i * exp(-E_i / kB T) and the
    fractions sum to one.

    Returns a list of (label, fraction).
    """
    if temperature_k <= 0:
        raise ValueError("temperature must be positive")
    levels = scheme.multiplet(multiplet)
    if not levels:
        raise ValueError(f"no levels in multiplet {multiplet!r}")
    e0 = levels[0].energy_mev
    kt = KB_MEV_PER_K * temperature_k
    weights = np.array([lv.degeneracy * math.exp(-(lv.energy_mev - e0) / kt) for lv in levels])
    fractions = weights / weights.sum()
    return [(lv.label, float(f)) for lv, f in zip(levels, fractions)]


@dataclass
class PlSpectrum:
    """Sampled emission spectrum plus the underlying line registry."""

    wavelength_nm: np.ndarray
    frequency_thz: np.ndarray
    intensity: np.ndarray
    lines: list  # (y_label, z_label, frequency_thz, amplitude)

    def peak_positions_thz(self, threshold: float = 0.05) -> list[float]:
        """Frequencies of local maxima above ``threshold`` of the global max."""
        y = self.intensity
        top = y.max()
        peaks = []
        for i in range(1, len(y) - 1):
            if y[i] >= y[i - 1] and y[i] > y[i + 1] and y[i] > threshold * top:
                peaks.append(float(self.frequency_thz[i]))
        return peaks


def synthesize_pl_spectrum(scheme: LevelScheme, temperature_k: float,
                           resolution_ghz: float = 20.0,
                           pad_fwhm: float = 6.0, points_per_fwhm: int = 12) -> PlSpectrum:
    """Temperature-dependent photoluminescence of the Y -> Z transitions.

    One line per (populated Y_i, Z_j) pair at energy E(Y_i) - E(Z_j) with
    amplitude p(Y_i, T) * amplitude(Y_i, Z_j), convolved with a Gaussian
    whose FWHM equals the spectrometer resolution.  The spectrum is sampled
    on a uniform frequency grid; the wavelength axis is the corresponding
    vacuum wavelength.
    """
    if resolution_ghz <= 0:
        raise ValueError("resolution must be positive")
    ys = scheme.multiplet("Y")
    zs = scheme.multiplet("Z")
    if not ys or not zs:
        raise ValueError("scheme must contain both Y and Z levels")

    pops = dict(boltzmann_populations(scheme, "Y", temperature_k))
    lines = []
    for ylv in ys:
        for zlv in zs:
            nu_thz = (ylv.energy_mev - zlv.energy_mev) * MEV_TO_GHZ / 1e3
            amp = pops[ylv.label] * scheme.amplitude(ylv.label, zlv.label)
            lines.append((ylv.label, zlv.label, nu_thz, amp))

    fwhm_thz = resolution_ghz / 1e3
    sigma = fwhm_thz / (2.0 * math.sqrt(2.0 * math.log(2.0)))
    freqs = np.array([ln[2] for ln in lines])
    lo = freqs.min() - pad_fwhm * fwhm_thz
    hi = freqs.max() + pad_fwhm * fwhm_thz
    n = max(200, int((hi - lo) / fwhm_thz * points_per_fwhm))
    grid = np.linspace(lo, hi, n)
    intensity = np.zeros_like(grid)
    norm = 1.0 / (sigma * math.sqrt(2.0 * math.pi))
    for _, _, nu, amp in lines:
        if amp > 0:
            intensity += amp * norm * np.exp(-0.5 * ((grid - nu) / sigma) ** 2)

    wavelength_nm = C / (grid * 1e12) * 1e9
    return PlSpectrum(wavelength_nm, grid, intensity, lines)


def mean_ion_separation(sample: MaterialSample) -> float:
    """Ensemble-average dopant separation in nm (Wigner-Seitz radius).

    r = (3 / (4 pi n))^(1/3) with n the dopant number density.
    """
    if sample.dopant_ppm <= 0:
        raise ValueError("dopant concentration must be positive")
    n = sample.dopant_ppm * 1e-6 * sample.cation_density_per_m3
    return (3.0 / (4.0 * math.pi * n)) ** (1.0 / 3.0) * 1e9
