"""Throughput, energy, and efficiency models for small-cell wireless backhaul.

Two architectures are modeled: a central one, where every small cell
backhauls into the macro station, and a distributed one, where a
cooperative cluster of small cells relays toward a gateway cell.
"""

__version__ = "0.1.0"

from .link_model import EdgeLinkModel, calibrate, resolve_se, shannon_se
from .power_energy import (
    EfficiencyResult,
    cell_energies,
    efficiency,
    embodied_energy,
    operating_energy,
    operating_power,
    scenario_energy,
    system_energy_central,
    system_energy_distribution,
    tx_power,
)
from .scenario import (
    ANCHOR_40W_1KM,
    DEFAULT_TX_ANCHOR,
    SECONDS_PER_YEAR,
    CellParams,
    Central,
    ConfigError,
    Distribution,
    EmbodiedAbsolute,
    EmbodiedFraction,
    EnergyBreakdown,
    FixedSE,
    FrequencyBand,
    ParseError,
    PowerCurve,
    ScenarioConfig,
    ShannonEdgeSE,
    ThroughputBreakdown,
    TxAnchor,
    ValidationError,
    default_table1,
    load_scenario,
    scenario_from_dict,
    scenario_to_dict,
    serialize_scenario,
)
from .sweep_report import (
    SweepGrid,
    SweepRow,
    Table1Report,
    figure_dataset,
    figure_grid,
    run_sweep,
    table1_report,
)
from .topology import (
    NEAREST_TO_CENTER,
    Placement,
    RelayTree,
    build_relay_tree,
    export_topology,
    gateway_ingress_bps,
    link_loads,
    place_uniform,
)
from .traffic import (
    ClusterSpec,
    comp_se,
    macro_down_central,
    macro_up_central,
    scenario_throughput,
    small_down_central,
    small_up_central,
    total_central,
    total_distribution,
)
