"""Spatial layouts and relay trees for the distribution architecture.

Small stations are placed uniformly in the macro disk; backhaul is then
relayed hop by hop toward a gateway station.  The routing rule is greedy
geographic: order the nodes by distance to the gateway (gateway first,
exact ties broken by node index) and attach each node to its Euclidean
nearest neighbor among the nodes that precede it in that order.  Parents
are therefore always at least as close to the gateway, the parent
relation is acyclic, and every node reaches the gateway.

Placement uses numpy's default_rng (PCG64); identical (n, radius, seed)
inputs reproduce positions bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import _kernels
from .scenario import ValidationError

RNG_ALGORITHM = "numpy-default_rng-PCG64"

NEAREST_TO_CENTER = "nearest-to-center"


@dataclass(frozen=True)
class Placement:
    """n station positions (meters, (n, 2) array) in a disk around the origin."""

    positions: np.ndarray
    macro_radius_m: float
    seed: int

    def __post_init__(self):
        self.positions.setflags(write=False)

    @property
    def n(self) -> int:
        return self.positions.shape[0]


@dataclass(frozen=True)
class RelayTree:
    """Spanning tree of a placement, rooted at the gateway station.

    parent[i] is the next hop of node i toward the gateway (-1 for the
    gateway itself); link_load_bps[i] is the traffic on the edge
    i -> parent[i] (0 until link_loads() fills it, and 0 for the gateway).
    """

    gateway_index: int
    parent: np.ndarray
    link_load_bps: np.ndarray

    def __post_init__(self):
        self.parent.setflags(write=False)
        self.link_load_bps.setflags(write=False)

    @property
    def n(self) -> int:
        return self.parent.shape[0]


def place_uniform(n: int, macro_radius_m: float, seed: int) -> Placement:
    """Sample n positions i.i.d. uniform over the disk of the given radius."""
    if n < 0:
        raise ValidationError("n: must be >= 0")
    if not macro_radius_m > 0:
        raise ValidationError("macro_radius_m: must be > 0")
    rng = np.random.default_rng(seed)
    # Uniform over the disk: radius is R*sqrt(u), angle uniform.
    r = macro_radius_m * np.sqrt(rng.random(n))
    theta = 2.0 * np.pi * rng.random(n)
    positions = np.column_stack((r * np.cos(theta), r * np.sin(theta)))
    return Placement(positions=positions, macro_radius_m=macro_radius_m, seed=seed)


def _gateway_index(placement: Placement, gateway) -> int:
    if gateway == NEAREST_TO_CENTER:
        d2 = (placement.positions ** 2).sum(axis=1)
        return int(np.argmin(d2))  # first occurrence: smallest index on ties
    g = int(gateway)
    if not 0 <= g < placement.n:
        raise ValidationError(f"gateway: index {g} out of range for n={placement.n}")
    return g


def build_relay_tree(placement: Placement, gateway=NEAREST_TO_CENTER) -> RelayTree:
    """Build the greedy geographic relay tree of a placement.

    gateway is either the string NEAREST_TO_CENTER or an explicit node
    index.  Deterministic: duplicate positions are resolved by node
    index, never an error.
    """
    if placement.n == 0:
        raise ValidationError("placement: must contain at least one node")
    g = _gateway_index(placement, gateway)
    pts = placement.positions
    d_gw = np.hypot(pts[:, 0] - pts[g, 0], pts[:, 1] - pts[g, 1])
    d_gw[g] = -1.0  # gateway sorts first even if another node shares its position
    order = np.lexsort((np.arange(placement.n), d_gw))
    parent_rank = _kernels.parent_ranks(pts[order], order.astype(np.int64))
    parent = np.full(placement.n, -1, dtype=np.int64)
    parent[order[1:]] = order[parent_rank[1:]]
    return RelayTree(gateway_index=g, parent=parent,
                     link_load_bps=np.zeros(placement.n))


def link_loads(tree: RelayTree, per_cell_bps: float) -> RelayTree:
    """Tree with each edge carrying per_cell_bps times its subtree size.

    The edge above node i aggregates the traffic of i and every node
    routed through it, so the gateway's incident edges together carry
    (n - 1) * per_cell_bps.
    """
    if per_cell_bps < 0:
        raise ValidationError("per_cell_bps: must be >= 0")
    sizes = _kernels.subtree_sizes(np.ascontiguousarray(tree.parent))
    loads = per_cell_bps * sizes.astype(np.float64)
    loads[tree.gateway_index] = 0.0
    return replace(tree, link_load_bps=loads)


def gateway_ingress_bps(tree: RelayTree) -> float:
    """Total traffic arriving at the gateway over its incident edges."""
    children = np.nonzero(tree.parent == tree.gateway_index)[0]
    return float(tree.link_load_bps[children].sum())


def export_topology(placement: Placement, tree: RelayTree) -> dict:
    """JSON-ready dict: positions, gateway_index, parent, link_load_bps, seed."""
    return {
        "positions": [[float(x), float(y)] for x, y in placement.positions],
        "gateway_index": int(tree.gateway_index),
        "parent": [None if p == -1 else int(p) for p in tree.parent],
        "link_load_bps": [float(v) for v in tree.link_load_bps],
        "seed": int(placement.seed),
        "rng": RNG_ALGORITHM,
    }
