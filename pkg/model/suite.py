"""Checks specific to the light-cone tube model and the builtin catalog."""

from __future__ import annotations

from typing import Optional

from config.logging_setup import get_logger
from expr.calculus import conjugate
from expr.checks import CheckReport, identity_checks
from expr.nodes import IMAG, ONE, ZERO, mul, neg, quotient, var
from expr.sampling import SampleSpec
from expr.variables import Z1, Z2, ZB1, ZB2
from fields.forms import TwoFormTable, check_structure_table, dcoframe_coeffs
from fields.vector_field import VectorField
from hypersurface.checks import base_torsions
from hypersurface.frames import COFRAME_NAMES, adapted_coframes, frame
from hypersurface.surface import Hypersurface, validate

from .catalog import cubic_map, dilation_map, shear_map
from .flows import flows_suite
from .graph import mlc_denominator, mlc_graph
from .symmetries import symmetries_suite

logger = get_logger(__name__)

z1, z2, zb1, zb2 = var(Z1), var(Z2), var(ZB1), var(ZB2)


def model_surface(spec: Optional[SampleSpec] = None) -> Hypersurface:
    return validate(mlc_graph(), spec)


def mlc_structure_tables(orientation: int = -1) -> dict:
    """Initial structure tables of the model written out in coordinates."""
    D = mlc_denominator()
    drho = TwoFormTable.from_mapping(
        "rho",
        COFRAME_NAMES,
        {
            "rho^zeta": quotient(zb2, D),
            "rho^zetabar": quotient(z2, D),
            "kappa^kappabar": mul(-orientation, IMAG),
        },
    )
    dkappa = TwoFormTable.from_mapping(
        "kappa",
        COFRAME_NAMES,
        {"kappa^zeta": quotient(zb2, D), "zeta^kappabar": neg(quotient(ONE, D))},
    )
    dzeta = TwoFormTable.from_mapping("zeta", COFRAME_NAMES, {})
    return {"rho": drho, "kappa": dkappa, "zeta": dzeta}


def closed_forms_check(H: Hypersurface, spec: Optional[SampleSpec] = None) -> CheckReport:
    D = mlc_denominator()
    report = CheckReport("closed_forms")
    report.extend(
        identity_checks(
            {
                "k": (H.k, neg(quotient(zb1 + mul(z1, zb2), D))),
                "b": (H.b, neg(quotient(zb2, D))),
                "a": (H.a, neg(quotient(ONE, D))),
                "P": (H.P, ZERO),
                "B": (H.B, ZERO),
            },
            spec,
        )
    )
    return report


def literal_structure_check(
    H: Hypersurface, spec: Optional[SampleSpec] = None, orientation: int = -1
) -> CheckReport:
    """Computed initial tables against the coordinate form of the model."""
    computed = dcoframe_coeffs(frame(H, orientation), COFRAME_NAMES, spec, forms=(0, 1, 2))
    claimed = mlc_structure_tables(orientation)
    report = CheckReport(f"literal_structure sigma={orientation:+d}")
    for name in ("rho", "kappa", "zeta"):
        report.section(check_structure_table(computed[name], claimed[name], spec))
    return report


def orientation_variant_check(H: Hypersurface, spec: Optional[SampleSpec] = None) -> CheckReport:
    """With ``sigma = +1`` the ``kappa^kappabar`` entry of ``d rho0`` turns into ``-i``."""
    computed = dcoframe_coeffs(frame(H, 1), COFRAME_NAMES, spec, forms=(0,))
    entry = computed["rho"]["kappa^kappabar"]
    report = CheckReport("orientation_variant")
    report.extend(
        identity_checks(
            {"sigma=+1 gives -i": (entry, neg(IMAG)), "sigma=+1 matches +i": (entry, IMAG)},
            spec,
            findings=frozenset({"sigma=+1 matches +i"}),
        )
    )
    return report


def zeta_hat_check(H: Hypersurface, spec: Optional[SampleSpec] = None) -> CheckReport:
    """``zeta_hat0 = -dz2 / D`` on the model."""
    zeta_hat = adapted_coframes(H, -1).zeta_hat
    expected = {"z2": neg(quotient(ONE, mlc_denominator()))}
    claims = {
        f"d{x}": (zeta_hat(VectorField.partial(x)), expected.get(x, ZERO))
        for x in ("z1", "z2", "zb1", "zb2", "v")
    }
    report = CheckReport("zeta_hat")
    report.extend(identity_checks(claims, spec))
    return report


def model_torsions_check(H: Hypersurface, spec: Optional[SampleSpec] = None) -> CheckReport:
    """Only ``R2 = K5 = -zb2`` and ``Z9 = z2`` survive on the model."""
    t = base_torsions(H).as_dict()
    expected = {name: ZERO for name in t}
    expected.update({"R2": neg(zb2), "K5": neg(zb2), "Z9": z2})
    report = CheckReport("torsions")
    report.extend(identity_checks({n: (t[n], expected[n]) for n in t}, spec))
    report.extend(identity_checks({"Z9 = -conj(K5)": (t["Z9"], neg(conjugate(t["K5"])))}, spec))
    return report


def model_structure_suite(spec: Optional[SampleSpec] = None) -> CheckReport:
    H = model_surface(spec)
    report = CheckReport("model_structure")
    report.section(closed_forms_check(H, spec))
    report.section(literal_structure_check(H, spec, -1))
    report.section(orientation_variant_check(H, spec))
    report.section(zeta_hat_check(H, spec))
    report.section(model_torsions_check(H, spec))
    return report


def catalog_maps_check(spec: Optional[SampleSpec] = None) -> CheckReport:
    report = CheckReport("catalog_maps")
    for m in (shear_map(), dilation_map(), cubic_map()):
        report.section(m.composition_report(spec))
    return report


def model_suite(spec: SampleSpec, numeric: bool = True) -> CheckReport:
    """Structure of the model, its symmetry algebra and the rigid flows."""
    logger.info("running model suite (numeric=%s)", numeric)
    report = CheckReport("model")
    report.section(model_structure_suite(spec))
    report.section(symmetries_suite(spec))
    report.section(flows_suite(spec, numeric))
    report.section(catalog_maps_check(spec))
    return report


__all__ = [
    "catalog_maps_check",
    "closed_forms_check",
    "literal_structure_check",
    "mlc_structure_tables",
    "model_structure_suite",
    "model_suite",
    "model_surface",
    "model_torsions_check",
    "orientation_variant_check",
    "zeta_hat_check",
]
