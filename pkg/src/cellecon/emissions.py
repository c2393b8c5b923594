"""CO2 from annual network energy under a generation fuel mix."""
from dataclasses import dataclass
import csv
import math
from importlib import resources

from .errors import DomainError, ParseError, ValidationError

GRAMS_PER_TONNE = 1e6
SHARE_SUM_TOLERANCE = 1e-9
REFERENCE_FLEET_CELLS = 20_000


@dataclass(frozen=True)
class FuelEntry:
    fuel: str
    share: float
    g_per_kwh: float


@dataclass(frozen=True)
class FuelMix:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValidationError("fuel mix is empty")
        for e in self.entries:
            if e.share < 0 or e.g_per_kwh < 0:
                raise ValidationError(f"fuel {e.fuel!r}: share and intensity must be >= 0")
        total = math.fsum(e.share for e in self.entries)
        if abs(total - 1.0) > SHARE_SUM_TOLERANCE:
            raise ValidationError(f"fuel shares sum to {total!r}, expected 1")


@dataclass(frozen=True)
class EmissionReport:
    per_fuel_tonnes: tuple
    total_tonnes: float

    def scaled(self, factor):
        return EmissionReport(tuple((f, t * factor) for f, t in self.per_fuel_tonnes),
                              self.total_tonnes * factor)


def load_fuel_mix(path):
    entries = []
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None:
            raise ParseError("empty fuel mix file", path, 1)
        if [h.strip() for h in reader.fieldnames] != ["fuel", "share", "g_per_kwh"]:
            raise ParseError("expected header fuel,share,g_per_kwh", path, 1)
        for row in reader:
            try:
                entries.append(FuelEntry(row["fuel"].strip(), float(row["share"]),
                                         float(row["g_per_kwh"])))
            except (TypeError, ValueError, AttributeError):
                raise ParseError(f"malformed row {row!r}", path, reader.line_num) from None
    return FuelMix(entries)


def uk_fuel_mix():
    with resources.as_file(resources.files("cellecon") / "data" / "fuel_mix_uk.csv") as p:
        return load_fuel_mix(p)


def fuel_emission(annual_energy_kwh, share, intensity_g_per_kwh):
    """Tonnes of CO2 from the ``share`` of energy generated by one fuel."""
    if annual_energy_kwh < 0 or share < 0 or intensity_g_per_kwh < 0:
        raise DomainError("energy, share and intensity must be >= 0")
    return annual_energy_kwh * share * intensity_g_per_kwh / GRAMS_PER_TONNE


def weighted_intensity(mix):
    return math.fsum(e.share * e.g_per_kwh for e in mix.entries)


def total_emissions(annual_energy_kwh, mix):
    if not isinstance(mix, FuelMix):
        raise ValidationError("mix must be a FuelMix")
    per_fuel = tuple((e.fuel, fuel_emission(annual_energy_kwh, e.share, e.g_per_kwh))
                     for e in mix.entries)
    return EmissionReport(per_fuel, math.fsum(t for _, t in per_fuel))


def effective_cell_count(reference_cell_count, d3g, d4g, tech):
    """Cells needed for the same coverage, scaling the 3G fleet by the density ratio for 4G."""
    if reference_cell_count < 0:
        raise DomainError("cell count must be >= 0")
    if tech == "3g":
        return float(reference_cell_count)
    if tech == "4g":
        return reference_cell_count * d4g.cells_per_km2 / d3g.cells_per_km2
    raise DomainError(f"unknown technology {tech!r}")


def network_emissions(per_km2_report, reference_cell_count, d3g, d4g, tech):
    """Fleet-wide tonnes from a per-km^2 report of technology ``tech``."""
    own = d4g if tech == "4g" else d3g
    per_cell = per_km2_report.total_tonnes / own.cells_per_km2
    return per_cell * effective_cell_count(reference_cell_count, d3g, d4g, tech)
