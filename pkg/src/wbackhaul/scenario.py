"""Domain types, calibration defaults, and JSON scenario loading.

All quantities are SI: Hz, meters, Watts, Joules, seconds, bit/s.
Every type is a frozen dataclass and safe to share between threads.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Union

SECONDS_PER_YEAR = 3.1536e7  # 365 days

DEFAULT_BANDS_HZ = (5.8e9, 28e9, 60e9)

# S1 feeder protocol overhead and X2 handover overhead, as fractions of
# the user-plane cell throughput.
DEFAULT_OVERHEAD_S1 = 0.10
DEFAULT_OVERHEAD_X2 = 0.04

DEFAULT_ALPHA = 3.2  # urban path loss exponent


class ConfigError(ValueError):
    """Base class for scenario configuration failures."""


class ParseError(ConfigError):
    """The config text is not syntactically valid JSON."""


class ValidationError(ConfigError):
    """A structurally valid config violates a field invariant."""


def _require(cond: bool, field_name: str, message: str) -> None:
    if not cond:
        raise ValidationError(f"{field_name}: {message}")


def _is_num(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


@dataclass(frozen=True)
class FrequencyBand:
    """Carrier frequency of the wireless backhaul links."""

    carrier_hz: float

    def __post_init__(self):
        _require(_is_num(self.carrier_hz) and self.carrier_hz > 0,
                 "carrier_hz", "must be a number > 0")


@dataclass(frozen=True)
class PowerCurve:
    """Linear operating-power model: P_op = slope_a * P_tx + offset_b_w."""

    slope_a: float        # dimensionless
    offset_b_w: float     # Watt, draw at zero transmit power

    def __post_init__(self):
        _require(_is_num(self.slope_a) and self.slope_a > 0,
                 "slope_a", "must be a number > 0")
        _require(_is_num(self.offset_b_w) and self.offset_b_w > 0,
                 "offset_b_w", "must be a number > 0")


@dataclass(frozen=True)
class TxAnchor:
    """Reference point that pins the transmit-power scaling law.

    Transmit power scales as power_w * (r / radius_m)^alpha
    * (f / carrier_hz)^freq_exponent, so a base station whose coverage
    radius and carrier equal the anchor's transmits exactly power_w.
    """

    power_w: float = 10.0
    radius_m: float = 500.0
    carrier_hz: float = 5.8e9
    freq_exponent: float = 2.0

    def __post_init__(self):
        for name in ("power_w", "radius_m", "carrier_hz"):
            _require(_is_num(getattr(self, name)) and getattr(self, name) > 0,
                     f"tx_anchor.{name}", "must be a number > 0")
        _require(_is_num(self.freq_exponent) and self.freq_exponent >= 0,
                 "tx_anchor.freq_exponent", "must be a number >= 0")


# Default anchor: reproduces the published calibration table
# (10 W at 500 m on the 5.8 GHz band, carrier-frequency exponent 2).
DEFAULT_TX_ANCHOR = TxAnchor()

# Alternative normalization sometimes used for macro transmit power:
# 40 W at 1 km, no frequency dependence.  Selectable, not the default,
# because it does not reproduce the calibration table.
ANCHOR_40W_1KM = TxAnchor(power_w=40.0, radius_m=1000.0,
                          carrier_hz=5.8e9, freq_exponent=0.0)


@dataclass(frozen=True)
class EmbodiedAbsolute:
    """Embodied energy given directly as initial + maintenance Joules."""

    init_j: float
    maint_j: float

    def __post_init__(self):
        _require(_is_num(self.init_j) and self.init_j >= 0,
                 "embodied.init_j", "must be a number >= 0")
        _require(_is_num(self.maint_j) and self.maint_j >= 0,
                 "embodied.maint_j", "must be a number >= 0")


@dataclass(frozen=True)
class EmbodiedFraction:
    """Embodied energy specified as a fraction of total lifetime energy.

    fraction = E_em / (E_em + E_op), so E_em = E_op * f / (1 - f).
    """

    fraction: float

    def __post_init__(self):
        _require(_is_num(self.fraction) and 0 < self.fraction < 1,
                 "embodied.fraction", "must be a number in (0, 1)")


EmbodiedRule = Union[EmbodiedAbsolute, EmbodiedFraction]


@dataclass(frozen=True)
class FixedSE:
    """Constant average spectrum efficiency, bit/s/Hz."""

    bit_per_s_per_hz: float

    def __post_init__(self):
        _require(_is_num(self.bit_per_s_per_hz) and self.bit_per_s_per_hz >= 0,
                 "spectrum_eff.bit_per_s_per_hz", "must be a number >= 0")


@dataclass(frozen=True)
class ShannonEdgeSE:
    """Cell-edge Shannon capacity model, calibrated at a reference radius.

    The cell's spectrum efficiency equals calibration_se when its radius
    equals ref_radius_m, for every path loss exponent; see link_model.
    """

    calibration_se: float        # bit/s/Hz at the reference radius
    ref_radius_m: float = 50.0

    def __post_init__(self):
        _require(_is_num(self.calibration_se) and self.calibration_se > 0,
                 "spectrum_eff.calibration_se", "must be a number > 0")
        _require(_is_num(self.ref_radius_m) and self.ref_radius_m > 0,
                 "spectrum_eff.ref_radius_m", "must be a number > 0")


SpectrumEffSource = Union[FixedSE, ShannonEdgeSE]


@dataclass(frozen=True)
class CellParams:
    """Per-class (macro or small) base station parameters."""

    bandwidth_hz: float
    spectrum_eff: SpectrumEffSource
    radius_m: float
    power_curve: PowerCurve
    lifetime_s: float
    embodied: EmbodiedRule

    def __post_init__(self):
        _require(_is_num(self.bandwidth_hz) and self.bandwidth_hz > 0,
                 "bandwidth_hz", "must be a number > 0")
        _require(_is_num(self.radius_m) and self.radius_m > 0,
                 "radius_m", "must be a number > 0")
        _require(_is_num(self.lifetime_s) and self.lifetime_s > 0,
                 "lifetime_s", "must be a number > 0")


@dataclass(frozen=True)
class Central:
    """All small cells backhaul into one macro base station."""

    n_small: int

    def __post_init__(self):
        _require(isinstance(self.n_small, int) and not isinstance(self.n_small, bool)
                 and self.n_small >= 0,
                 "architecture.n_small", "must be an integer >= 0")


@dataclass(frozen=True)
class Distribution:
    """A cooperative cluster of small cells relays toward a gateway cell."""

    k_cluster: int

    def __post_init__(self):
        _require(isinstance(self.k_cluster, int) and not isinstance(self.k_cluster, bool)
                 and self.k_cluster >= 1,
                 "architecture.k_cluster", "must be an integer >= 1")


Architecture = Union[Central, Distribution]


def default_table1(band: FrequencyBand, cell_class: str) -> CellParams:
    """Default per-class parameters from the published calibration table.

    The table's constants are band-independent; the band only enters via
    transmit-power scaling (see TxAnchor), so it is accepted here for
    interface symmetry and future per-band defaults.
    """
    if cell_class == "macro":
        return CellParams(
            bandwidth_hz=1e8,
            spectrum_eff=FixedSE(5.0),
            radius_m=500.0,
            power_curve=PowerCurve(slope_a=21.45, offset_b_w=354.44),
            lifetime_s=10 * SECONDS_PER_YEAR,
            embodied=EmbodiedAbsolute(init_j=75e9, maint_j=10e9),
        )
    if cell_class == "small":
        return CellParams(
            bandwidth_hz=1e8,
            spectrum_eff=FixedSE(5.0),
            radius_m=50.0,
            power_curve=PowerCurve(slope_a=7.84, offset_b_w=71.50),
            lifetime_s=5 * SECONDS_PER_YEAR,
            embodied=EmbodiedFraction(fraction=0.20),
        )
    raise ValidationError(f"cell_class: must be 'macro' or 'small', got {cell_class!r}")


@dataclass(frozen=True)
class ScenarioConfig:
    """Complete description of one backhaul evaluation."""

    architecture: Architecture
    band: FrequencyBand = field(default_factory=lambda: FrequencyBand(5.8e9))
    macro: CellParams | None = None        # required iff architecture is Central
    small: CellParams = field(
        default_factory=lambda: default_table1(FrequencyBand(5.8e9), "small"))
    path_loss_alpha: float = DEFAULT_ALPHA
    tx_anchor: TxAnchor = DEFAULT_TX_ANCHOR
    overhead_s1: float = DEFAULT_OVERHEAD_S1
    overhead_x2: float = DEFAULT_OVERHEAD_X2

    def __post_init__(self):
        if not isinstance(self.architecture, (Central, Distribution)):
            raise ValidationError("architecture: must be Central or Distribution")
        _require(_is_num(self.path_loss_alpha) and self.path_loss_alpha > 0,
                 "alpha", "must be a number > 0")
        for name in ("overhead_s1", "overhead_x2"):
            v = getattr(self, name)
            _require(_is_num(v) and 0 <= v < 1, name, "must be a number in [0, 1)")
        if isinstance(self.architecture, Central):
            if self.macro is None:
                object.__setattr__(self, "macro", default_table1(self.band, "macro"))
        elif self.macro is not None:
            raise ValidationError(
                "macro: not allowed for the distribution architecture")


@dataclass(frozen=True)
class ThroughputBreakdown:
    """Backhaul throughput split by direction and cell class, bit/s.

    small_* and macro_* are per-cell values; total_* aggregates over the
    scenario's cell counts.  total_bps is total_up_bps + total_down_bps.
    """

    small_up_bps: float
    small_down_bps: float
    macro_up_bps: float
    macro_down_bps: float
    total_up_bps: float
    total_down_bps: float
    total_bps: float


@dataclass(frozen=True)
class EnergyBreakdown:
    """Lifetime energy split by cell class, Joule.

    per_* fields are for one base station of that class; system_total_j
    composes them with the scenario's cell counts.
    """

    per_macro_operating_j: float
    per_macro_embodied_j: float
    per_small_operating_j: float
    per_small_embodied_j: float
    system_total_j: float


# ---------------------------------------------------------------------------
# JSON loading / serialization
#
# Document layout (all keys optional except architecture; unknown keys are
# rejected at every level):
#
#   {"architecture": {"type": "central", "n_small": 100},
#    "band_hz": 5.8e9,
#    "macro": { ...cell... },        # central only
#    "small": { ...cell... },
#    "alpha": 3.2,
#    "tx_anchor": {"power_w": 10, "radius_m": 500,
#                  "carrier_hz": 5.8e9, "freq_exponent": 2},
#    "overheads": {"s1": 0.10, "x2": 0.04}}
#
#   cell: {"bandwidth_hz": 1e8,
#          "spectrum_eff": {"type": "fixed", "bit_per_s_per_hz": 5}
#                        | {"type": "shannon_edge", "calibration_se": 5,
#                           "ref_radius_m": 50},
#          "radius_m": 50,
#          "power_curve": {"slope_a": 7.84, "offset_b_w": 71.5},
#          "lifetime_s": 1.5768e8,
#          "embodied": {"type": "absolute", "init_j": 75e9, "maint_j": 10e9}
#                    | {"type": "fraction_of_total", "fraction": 0.2}}
# ---------------------------------------------------------------------------

def _check_keys(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ValidationError(f"{where}: unknown key(s) {sorted(unknown)}")


def _as_dict(obj, where: str) -> dict:
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: must be an object")
    return obj


def _num(obj: dict, key: str, where: str, default=None):
    if key not in obj:
        if default is None:
            raise ValidationError(f"{where}.{key}: missing")
        return default
    v = obj[key]
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise ValidationError(f"{where}.{key}: must be a number")
    return v


def _parse_architecture(obj) -> Architecture:
    d = _as_dict(obj, "architecture")
    _check_keys(d, {"type", "n_small", "k_cluster"}, "architecture")
    kind = d.get("type")
    if kind == "central":
        _check_keys(d, {"type", "n_small"}, "architecture")
        n = d.get("n_small")
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValidationError("architecture.n_small: must be an integer")
        return Central(n_small=n)
    if kind == "distribution":
        _check_keys(d, {"type", "k_cluster"}, "architecture")
        k = d.get("k_cluster")
        if not isinstance(k, int) or isinstance(k, bool):
            raise ValidationError("architecture.k_cluster: must be an integer")
        return Distribution(k_cluster=k)
    raise ValidationError(
        "architecture.type: must be 'central' or 'distribution'")


def _parse_spectrum_eff(obj, where: str) -> SpectrumEffSource:
    d = _as_dict(obj, where)
    kind = d.get("type")
    if kind == "fixed":
        _check_keys(d, {"type", "bit_per_s_per_hz"}, where)
        return FixedSE(_num(d, "bit_per_s_per_hz", where))
    if kind == "shannon_edge":
        _check_keys(d, {"type", "calibration_se", "ref_radius_m"}, where)
        return ShannonEdgeSE(_num(d, "calibration_se", where),
                             _num(d, "ref_radius_m", where, default=50.0))
    raise ValidationError(f"{where}.type: must be 'fixed' or 'shannon_edge'")


def _parse_embodied(obj, where: str) -> EmbodiedRule:
    d = _as_dict(obj, where)
    kind = d.get("type")
    if kind == "absolute":
        _check_keys(d, {"type", "init_j", "maint_j"}, where)
        return EmbodiedAbsolute(_num(d, "init_j", where), _num(d, "maint_j", where))
    if kind == "fraction_of_total":
        _check_keys(d, {"type", "fraction"}, where)
        return EmbodiedFraction(_num(d, "fraction", where))
    raise ValidationError(f"{where}.type: must be 'absolute' or 'fraction_of_total'")


def _parse_cell(obj, where: str, defaults: CellParams) -> CellParams:
    d = _as_dict(obj, where)
    _check_keys(d, {"bandwidth_hz", "spectrum_eff", "radius_m", "power_curve",
                    "lifetime_s", "embodied"}, where)
    se = defaults.spectrum_eff
    if "spectrum_eff" in d:
        se = _parse_spectrum_eff(d["spectrum_eff"], f"{where}.spectrum_eff")
    curve = defaults.power_curve
    if "power_curve" in d:
        c = _as_dict(d["power_curve"], f"{where}.power_curve")
        _check_keys(c, {"slope_a", "offset_b_w"}, f"{where}.power_curve")
        curve = PowerCurve(_num(c, "slope_a", f"{where}.power_curve"),
                           _num(c, "offset_b_w", f"{where}.power_curve"))
    embodied = defaults.embodied
    if "embodied" in d:
        embodied = _parse_embodied(d["embodied"], f"{where}.embodied")
    return CellParams(
        bandwidth_hz=_num(d, "bandwidth_hz", where, defaults.bandwidth_hz),
        spectrum_eff=se,
        radius_m=_num(d, "radius_m", where, defaults.radius_m),
        power_curve=curve,
        lifetime_s=_num(d, "lifetime_s", where, defaults.lifetime_s),
        embodied=embodied,
    )


def scenario_from_dict(doc: dict) -> ScenarioConfig:
    """Build a validated ScenarioConfig from a parsed JSON document."""
    d = _as_dict(doc, "config")
    _check_keys(d, {"architecture", "band_hz", "macro", "small", "alpha",
                    "tx_anchor", "overheads"}, "config")
    if "architecture" not in d:
        raise ValidationError("architecture: missing")
    arch = _parse_architecture(d["architecture"])
    band = FrequencyBand(_num(d, "band_hz", "config", 5.8e9))

    macro = None
    if isinstance(arch, Central):
        macro = default_table1(band, "macro")
        if "macro" in d:
            macro = _parse_cell(d["macro"], "macro", macro)
    elif "macro" in d:
        raise ValidationError("macro: not allowed for the distribution architecture")

    small = default_table1(band, "small")
    if "small" in d:
        small = _parse_cell(d["small"], "small", small)

    anchor = DEFAULT_TX_ANCHOR
    if "tx_anchor" in d:
        a = _as_dict(d["tx_anchor"], "tx_anchor")
        _check_keys(a, {"power_w", "radius_m", "carrier_hz", "freq_exponent"},
                    "tx_anchor")
        anchor = TxAnchor(
            power_w=_num(a, "power_w", "tx_anchor", DEFAULT_TX_ANCHOR.power_w),
            radius_m=_num(a, "radius_m", "tx_anchor", DEFAULT_TX_ANCHOR.radius_m),
            carrier_hz=_num(a, "carrier_hz", "tx_anchor", DEFAULT_TX_ANCHOR.carrier_hz),
            freq_exponent=_num(a, "freq_exponent", "tx_anchor",
                               DEFAULT_TX_ANCHOR.freq_exponent),
        )

    s1, x2 = DEFAULT_OVERHEAD_S1, DEFAULT_OVERHEAD_X2
    if "overheads" in d:
        o = _as_dict(d["overheads"], "overheads")
        _check_keys(o, {"s1", "x2"}, "overheads")
        s1 = _num(o, "s1", "overheads", DEFAULT_OVERHEAD_S1)
        x2 = _num(o, "x2", "overheads", DEFAULT_OVERHEAD_X2)

    return ScenarioConfig(architecture=arch, band=band, macro=macro, small=small,
                          path_loss_alpha=_num(d, "alpha", "config", DEFAULT_ALPHA),
                          tx_anchor=anchor, overhead_s1=s1, overhead_x2=x2)


def load_scenario(source: str) -> ScenarioConfig:
    """Parse JSON config text into a validated ScenarioConfig.

    Omitted fields are filled with the calibration defaults.  Raises
    ParseError for malformed JSON and ValidationError (naming the field)
    for any invariant violation or unknown key.
    """
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    return scenario_from_dict(doc)


def _cell_to_dict(cell: CellParams) -> dict:
    if isinstance(cell.spectrum_eff, FixedSE):
        se = {"type": "fixed", "bit_per_s_per_hz": cell.spectrum_eff.bit_per_s_per_hz}
    else:
        se = {"type": "shannon_edge",
              "calibration_se": cell.spectrum_eff.calibration_se,
              "ref_radius_m": cell.spectrum_eff.ref_radius_m}
    if isinstance(cell.embodied, EmbodiedAbsolute):
        em = {"type": "absolute", "init_j": cell.embodied.init_j,
              "maint_j": cell.embodied.maint_j}
    else:
        em = {"type": "fraction_of_total", "fraction": cell.embodied.fraction}
    return {
        "bandwidth_hz": cell.bandwidth_hz,
        "spectrum_eff": se,
        "radius_m": cell.radius_m,
        "power_curve": {"slope_a": cell.power_curve.slope_a,
                        "offset_b_w": cell.power_curve.offset_b_w},
        "lifetime_s": cell.lifetime_s,
        "embodied": em,
    }


def scenario_to_dict(cfg: ScenarioConfig) -> dict:
    if isinstance(cfg.architecture, Central):
        arch = {"type": "central", "n_small": cfg.architecture.n_small}
    else:
        arch = {"type": "distribution", "k_cluster": cfg.architecture.k_cluster}
    doc = {
        "architecture": arch,
        "band_hz": cfg.band.carrier_hz,
        "small": _cell_to_dict(cfg.small),
        "alpha": cfg.path_loss_alpha,
        "tx_anchor": {"power_w": cfg.tx_anchor.power_w,
                      "radius_m": cfg.tx_anchor.radius_m,
                      "carrier_hz": cfg.tx_anchor.carrier_hz,
                      "freq_exponent": cfg.tx_anchor.freq_exponent},
        "overheads": {"s1": cfg.overhead_s1, "x2": cfg.overhead_x2},
    }
    if cfg.macro is not None:
        doc["macro"] = _cell_to_dict(cfg.macro)
    return doc


def serialize_scenario(cfg: ScenarioConfig) -> str:
    """Serialize to JSON text; load_scenario() round-trips it exactly."""
    return json.dumps(scenario_to_dict(cfg), indent=2)
