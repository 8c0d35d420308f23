"""Transmit power scaling, operating/embodied energy, and energy efficiency.

Transmit power is anchored: P_tx(r, f) = P0 * (r/r0)^alpha * (f/f0)^e
with (P0, r0, f0, e) from a TxAnchor.  Operating power is the linear
curve a * P_tx + b; energies are lifetime integrals plus embodied terms.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import traffic
from .scenario import (
    CellParams,
    Central,
    EmbodiedAbsolute,
    EmbodiedFraction,
    EmbodiedRule,
    EnergyBreakdown,
    FrequencyBand,
    PowerCurve,
    ScenarioConfig,
    TxAnchor,
    ValidationError,
)


@dataclass(frozen=True)
class EfficiencyResult:
    """Backhaul throughput per Joule of lifetime system energy."""

    throughput_bps: float
    system_energy_j: float
    efficiency: float       # bit/s per Joule, throughput_bps / system_energy_j


def tx_power(radius_m: float, band: FrequencyBand, alpha: float,
             anchor: TxAnchor) -> float:
    """Transmit power (W) needed to cover radius_m on the given band.

    Scales the anchor power by (radius/anchor radius)^alpha for coverage
    and by (carrier/anchor carrier)^freq_exponent for the band; at the
    anchor's own radius and carrier it returns the anchor power exactly.
    """
    if not radius_m > 0:
        raise ValidationError("radius_m: must be > 0")
    if not alpha > 0:
        raise ValidationError("alpha: must be > 0")
    return (anchor.power_w
            * (radius_m / anchor.radius_m) ** alpha
            * (band.carrier_hz / anchor.carrier_hz) ** anchor.freq_exponent)


def operating_power(curve: PowerCurve, tx_w: float) -> float:
    """Operating power draw (W) at the given transmit power."""
    if tx_w < 0:
        raise ValidationError("tx_w: must be >= 0")
    return curve.slope_a * tx_w + curve.offset_b_w


def operating_energy(p_op_w: float, lifetime_s: float) -> float:
    """Energy (J) drawn over the station's lifetime at constant power."""
    if not p_op_w > 0:
        raise ValidationError("p_op_w: must be > 0")
    if not lifetime_s > 0:
        raise ValidationError("lifetime_s: must be > 0")
    return p_op_w * lifetime_s


def embodied_energy(rule: EmbodiedRule, operating_j: float) -> float:
    """Manufacturing-plus-maintenance energy (J) for one station.

    A fractional rule f means embodied / (embodied + operating) == f,
    hence embodied = operating * f / (1 - f).
    """
    if operating_j < 0:
        raise ValidationError("operating_j: must be >= 0")
    if isinstance(rule, EmbodiedAbsolute):
        return rule.init_j + rule.maint_j
    if isinstance(rule, EmbodiedFraction):
        return operating_j * rule.fraction / (1.0 - rule.fraction)
    raise ValidationError(f"embodied: unsupported rule {type(rule).__name__}")


def cell_energies(cell: CellParams, band: FrequencyBand, alpha: float,
                  anchor: TxAnchor) -> tuple[float, float]:
    """(operating_j, embodied_j) for one base station of this class."""
    p_tx = tx_power(cell.radius_m, band, alpha, anchor)
    p_op = operating_power(cell.power_curve, p_tx)
    e_op = operating_energy(p_op, cell.lifetime_s)
    return e_op, embodied_energy(cell.embodied, e_op)


def system_energy_central(n_small: int, small: CellParams, macro: CellParams,
                          band: FrequencyBand, alpha: float,
                          anchor: TxAnchor) -> EnergyBreakdown:
    """Lifetime energy of one macro station plus n_small small stations."""
    if n_small < 0:
        raise ValidationError("n_small: must be >= 0")
    mac_op, mac_em = cell_energies(macro, band, alpha, anchor)
    sc_op, sc_em = cell_energies(small, band, alpha, anchor)
    total = mac_em + mac_op + n_small * (sc_em + sc_op)
    return EnergyBreakdown(per_macro_operating_j=mac_op, per_macro_embodied_j=mac_em,
                           per_small_operating_j=sc_op, per_small_embodied_j=sc_em,
                           system_total_j=total)


def system_energy_distribution(k_cluster: int, small: CellParams,
                               band: FrequencyBand, alpha: float,
                               anchor: TxAnchor) -> EnergyBreakdown:
    """Lifetime energy of a cooperative cluster of k identical small stations."""
    if k_cluster < 1:
        raise ValidationError("k_cluster: must be >= 1")
    sc_op, sc_em = cell_energies(small, band, alpha, anchor)
    return EnergyBreakdown(per_macro_operating_j=0.0, per_macro_embodied_j=0.0,
                           per_small_operating_j=sc_op, per_small_embodied_j=sc_em,
                           system_total_j=k_cluster * (sc_em + sc_op))


def scenario_energy(cfg: ScenarioConfig) -> EnergyBreakdown:
    """Energy breakdown of a full scenario."""
    if isinstance(cfg.architecture, Central):
        return system_energy_central(cfg.architecture.n_small, cfg.small, cfg.macro,
                                     cfg.band, cfg.path_loss_alpha, cfg.tx_anchor)
    return system_energy_distribution(cfg.architecture.k_cluster, cfg.small,
                                      cfg.band, cfg.path_loss_alpha, cfg.tx_anchor)


def efficiency(cfg: ScenarioConfig) -> EfficiencyResult:
    """Energy efficiency of a scenario: total throughput / system energy.

    The denominator is strictly positive for any valid config because the
    operating-power offset b is required to be > 0.
    """
    th = traffic.scenario_throughput(cfg)
    en = scenario_energy(cfg)
    return EfficiencyResult(throughput_bps=th.total_bps,
                            system_energy_j=en.system_total_j,
                            efficiency=th.total_bps / en.system_total_j)
