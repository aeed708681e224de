"""The light-cone tube model: graph, rigid maps, symmetries, flows and catalog."""

from __future__ import annotations

from .catalog import CATALOG, EXPECTED_VERDICTS, builtin_surface, catalog_names
from .flows import FlowMap, flow, flow_checks, flows_suite, rigid_flows
from .graph import defining_function, mlc_denominator, mlc_graph, on_surface_points, tube
from .rigid import RigidMap, transform_graph, transform_surface
from .suite import model_structure_suite, model_suite, model_surface
from .symmetries import (
    LABELS,
    RIGID_LABELS,
    TABLE,
    commutator_table_check,
    infinitesimal_fields,
    rigid_algebra,
    rigid_isomorphism_check,
    symmetries_suite,
    table_algebra,
    tangency_check,
)

__all__ = [
    "CATALOG",
    "EXPECTED_VERDICTS",
    "FlowMap",
    "LABELS",
    "RIGID_LABELS",
    "RigidMap",
    "TABLE",
    "builtin_surface",
    "catalog_names",
    "commutator_table_check",
    "defining_function",
    "flow",
    "flow_checks",
    "flows_suite",
    "infinitesimal_fields",
    "mlc_denominator",
    "mlc_graph",
    "model_structure_suite",
    "model_suite",
    "model_surface",
    "on_surface_points",
    "rigid_algebra",
    "rigid_flows",
    "rigid_isomorphism_check",
    "symmetries_suite",
    "table_algebra",
    "tangency_check",
    "transform_graph",
    "transform_surface",
    "tube",
]
