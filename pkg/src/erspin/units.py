"""Unit bookkeeping and the handful of conversions the toolkit needs.

All internal computation happens in SI; units appear only at the boundary.
Cross-dimension conversions use the photon relation (E = h*nu = h*c/lambda),
the thermal relation (E = kB*T) and the Larmor relation (h*nu = g*muB*B,
which requires an effective g value).

This is deliberately not a general units-algebra system.
"""

import math
from dataclasses import dataclass

from .constants import C, H, KB, MU_B

# unit -> (dimension, scale factor to the SI base of that dimension)
_UNITS = {
    "m": ("length", 1.0),
    "um": ("length", 1e-6),
    "nm": ("length", 1e-9),
    "Hz": ("frequency", 1.0),
    "kHz": ("frequency", 1e3),
    "MHz": ("frequency", 1e6),
    "GHz": ("frequency", 1e9),
    "THz": ("frequency", 1e12),
    "J": ("energy", 1.0),
    "eV": ("energy", 1.602176634e-19),
    "meV": ("energy", 1.602176634e-22),
    "ueV": ("energy", 1.602176634e-25),
    "T": ("field", 1.0),
    "mT": ("field", 1e-3),
    "G": ("field", 1e-4),
    "K": ("temperature", 1.0),
    "s": ("time", 1.0),
    "ms": ("time", 1e-3),
    "us": ("time", 1e-6),
    "ns": ("time", 1e-9),
}


def known_units() -> list[str]:
    return sorted(_UNITS)


def _dimension(unit: str) -> tuple[str, float]:
    try:
        return _UNITS[unit]
    except KeyError:
        raise ValueError(f"unknown unit {unit!r}; known units: {', '.join(known_units())}") from None


def _si_to_si(value: float, dim_from: str, dim_to: str, g: float | None) -> float:
    """Convert a value between the SI bases of two dimensions."""
    if dim_from == dim_to:
        return value
    # route everything through energy (J)
    to_energy = {
        "length": lambda x: H * C / x,
        "frequency": lambda x: H * x,
        "temperature": lambda x: KB * x,
        "energy": lambda x: x,
    }
    from_energy = {
        "length": lambda e: H * C / e,
        "frequency": lambda e: e / H,
        "temperature": lambda e: e / KB,
        "energy": lambda e: e,
    }
    if dim_from == "field" or dim_to == "field":
        if g is None:
            raise ValueError("field <-> frequency conversion requires an effective g value")
        to_energy["field"] = lambda x: g * MU_B * x
        from_energy["field"] = lambda e: e / (g * MU_B)
    if dim_from not in to_energy or dim_to not in from_energy:
        raise ValueError(f"cannot convert {dim_from} to {dim_to}")
    if dim_from in ("length",) and value <= 0:
        raise ValueError("length must be positive for spectroscopic conversion")
    return from_energy[dim_to](to_energy[dim_from](value))


def convert(value: float, unit_from: str, unit_to: str, g: float | None = None) -> float:
    """Convert ``value`` from one unit to another.

    Same-dimension conversions are pure rescalings.  Cross-dimension
    conversions use photon / thermal / Larmor equivalences (the last one
    needs ``g``).
    """
    if not math.isfinite(value):
        raise ValueError("value must be finite")
    dim_f, scale_f = _dimension(unit_from)
    dim_t, scale_t = _dimension(unit_to)
    si = value * scale_f
    si_out = _si_to_si(si, dim_f, dim_t, g)
    return si_out / scale_t


@dataclass(frozen=True)
class Quantity:
    """A number with a unit, convertible via :func:`convert`."""

    value: float
    unit: str

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError("Quantity value must be finite")
        _dimension(self.unit)

    def to(self, unit: str, g: float | None = None) -> "Quantity":
        return Quantity(convert(self.value, self.unit, unit, g=g), unit)

    def si(self) -> float:
        dim, scale = _dimension(self.unit)
        return self.value * scale


def wavelength_to_frequency(wavelength_nm: float) -> float:
    """Vacuum wavelength in nm to optical frequency in THz (nu = c/lambda)."""
    if wavelength_nm <= 0:
        raise ValueError("wavelength must be positive")
    return C / (wavelength_nm * 1e-9) / 1e12


def energy_to_frequency(energy_mev: float) -> float:
    """Energy in meV to frequency in GHz (nu = E/h).  Linear, sign preserving."""
    return energy_mev * 1.602176634e-22 / H / 1e9


def field_to_larmor(field_t: float, g: float) -> float:
    """Larmor frequency in GHz of an effective spin-1/2 at field B (tesla).

    nu = g * muB * B / h.  Linear in both B and g.
    """
    if field_t < 0:
        raise ValueError("field must be non-negative")
    if g <= 0:
        raise ValueError("g must be positive")
    return g * MU_B * field_t / H / 1e9


def larmor_to_field(nu_ghz: float, g: float) -> float:
    """Resonance field in tesla for a drive frequency in GHz (inverse Larmor)."""
    if nu_ghz < 0:
        raise ValueError("frequency must be non-negative")
    if g <= 0:
        raise ValueError("g must be positive")
    return nu_ghz * 1e9 * H / (g * MU_B)
