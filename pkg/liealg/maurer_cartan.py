"""
Maurer-Cartan equations of the rigid automorphism algebra and their dual
Lie algebra.

The coframe ``(rho, kappa, zeta, alpha, kappabar, zetabar, alphabar)`` (in
that order) satisfies constant-coefficient equations
``d omega^i = sum_{j<k} C^i_jk omega^j ^ omega^k``. Dual vector fields then
bracket as ``[d_j, d_k] = -sum_i C^i_jk d_i``.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Sequence, Tuple

from expr.checks import CheckReport, CheckResult
from expr.linalg import inverse
from expr.scalars import GaussianRational

from .algebra import LieAlgebraSC, LinearMap, compare_tables, jacobi_check

FORMS: Tuple[str, ...] = ("rho", "kappa", "zeta", "alpha", "kappabar", "zetabar", "alphabar")
DUAL_LABELS: Tuple[str, ...] = tuple(f"d_{f}" for f in FORMS)
W_LABELS: Tuple[str, ...] = tuple(f"W{i}" for i in range(1, 8))

I = GaussianRational(0, 1)

# form -> terms (coefficient, left factor, right factor) of its exterior derivative
Equations = Mapping[str, Sequence[Tuple[object, str, str]]]

MC_EQUATIONS: Dict[str, List[Tuple[object, str, str]]] = {
    "rho": [(1, "alpha", "rho"), (1, "alphabar", "rho"), (I, "kappa", "kappabar")],
    "kappa": [(1, "alpha", "kappa"), (1, "zeta", "kappabar")],
    "zeta": [(1, "alpha", "zeta"), (-1, "alphabar", "zeta")],
    "alpha": [(1, "zeta", "zetabar")],
    "kappabar": [(1, "alphabar", "kappabar"), (1, "zetabar", "kappa")],
    "zetabar": [(1, "alphabar", "zetabar"), (-1, "alpha", "zetabar")],
    "alphabar": [(-1, "zeta", "zetabar")],
}

TwoForm = Dict[Tuple[int, int], GaussianRational]
ThreeForm = Dict[Tuple[int, int, int], GaussianRational]


def two_forms(equations: Equations = MC_EQUATIONS) -> List[TwoForm]:
    """Normalized ``{(j, k): C^i_jk}`` with ``j < k`` for each form ``i``."""
    index = {f: n for n, f in enumerate(FORMS)}
    out: List[TwoForm] = []
    for form in FORMS:
        table: TwoForm = {}
        for coeff, left, right in equations.get(form, ()):
            j, k = index[left], index[right]
            c = GaussianRational.coerce(coeff)
            if j == k:
                continue
            if j > k:
                j, k, c = k, j, -c
            table[(j, k)] = table.get((j, k), GaussianRational(0)) + c
        out.append({p: c for p, c in table.items() if not c.is_zero()})
    return out


def dual_algebra_from_mc(equations: Equations = MC_EQUATIONS) -> LieAlgebraSC:
    """Lie algebra of the vector fields dual to the coframe."""
    n = len(FORMS)
    constants = [[[GaussianRational(0)] * n for _ in range(n)] for _ in range(n)]
    for i, table in enumerate(two_forms(equations)):
        for (j, k), c in table.items():
            constants[j][k][i] = constants[j][k][i] - c
            constants[k][j][i] = constants[k][j][i] + c
    return LieAlgebraSC(DUAL_LABELS, constants)


def _d(name: str) -> str:
    return f"d_{name}"


# Dual commutator table as tabulated for the model; the (d_rho, d_alphabar)
# cell is read as d_rho since rho is real.
EXPECTED_DUAL_BRACKETS = {
    (_d("rho"), _d("alpha")): {_d("rho"): 1},
    (_d("rho"), _d("alphabar")): {_d("rho"): 1},
    (_d("kappa"), _d("alpha")): {_d("kappa"): 1},
    (_d("kappa"), _d("kappabar")): {_d("rho"): -I},
    (_d("kappa"), _d("zetabar")): {_d("kappabar"): 1},
    (_d("zeta"), _d("alpha")): {_d("zeta"): 1},
    (_d("zeta"), _d("kappabar")): {_d("kappa"): -1},
    (_d("zeta"), _d("zetabar")): {_d("alpha"): -1, _d("alphabar"): 1},
    (_d("zeta"), _d("alphabar")): {_d("zeta"): -1},
    (_d("alpha"), _d("zetabar")): {_d("zetabar"): 1},
    (_d("kappabar"), _d("alphabar")): {_d("kappabar"): 1},
    (_d("zetabar"), _d("alphabar")): {_d("zetabar"): 1},
}

# Brackets of W1..W7; the same table as X1..X7 of the model.
EXPECTED_W_BRACKETS = {
    ("W1", "W2"): {"W1": 2},
    ("W2", "W4"): {"W4": -1},
    ("W2", "W5"): {"W5": -1},
    ("W3", "W4"): {"W5": 1},
    ("W3", "W5"): {"W4": -1},
    ("W3", "W6"): {"W7": 2},
    ("W3", "W7"): {"W6": -2},
    ("W4", "W5"): {"W1": 4},
    ("W4", "W6"): {"W4": -1},
    ("W4", "W7"): {"W5": -1},
    ("W5", "W6"): {"W5": 1},
    ("W5", "W7"): {"W4": -1},
    ("W6", "W7"): {"W3": -2},
}


def expected_dual_algebra() -> LieAlgebraSC:
    return LieAlgebraSC.from_brackets(DUAL_LABELS, EXPECTED_DUAL_BRACKETS)


def expected_w_algebra() -> LieAlgebraSC:
    return LieAlgebraSC.from_brackets(W_LABELS, EXPECTED_W_BRACKETS)


def w_basis() -> LinearMap:
    """Coordinates of W1..W7 in the dual basis."""
    h = GaussianRational(0, -1) / 2
    return LinearMap.of(
        [
            [h, 0, 0, 0, 0, 0, 0],  # W1 = -(i/2) d_rho
            [0, 0, 0, 1, 0, 0, 1],  # W2 = d_alpha + d_alphabar
            [0, 0, 1, 0, 0, -1, 0],  # W3 = d_zeta - d_zetabar
            [0, 1, 0, 0, -1, 0, 0],  # W4 = d_kappa - d_kappabar
            [0, 1, 0, 0, 1, 0, 0],  # W5 = d_kappa + d_kappabar
            [0, 0, 1, 0, 0, 1, 0],  # W6 = d_zeta + d_zetabar
            [0, 0, 0, -1, 0, 0, 1],  # W7 = -d_alpha + d_alphabar
        ]
    )


def change_basis(A: LieAlgebraSC, m: LinearMap, labels: Sequence[str]) -> LieAlgebraSC:
    """Structure constants of ``A`` in the basis whose vectors are the rows of ``m``."""
    inv = inverse([list(r) for r in m.rows])
    if inv is None:
        raise ValueError("basis change is singular")
    back = LinearMap.of(inv)
    n = A.dim
    constants = [[[GaussianRational(0)] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        for k in range(n):
            constants[j][k] = list(back(A.bracket(m.rows[j], m.rows[k])))
    return LieAlgebraSC(labels, constants)


def w_algebra(equations: Equations = MC_EQUATIONS) -> LieAlgebraSC:
    return change_basis(dual_algebra_from_mc(equations), w_basis(), W_LABELS)


def _wedge(a: TwoForm, one: int) -> ThreeForm:
    """``a ^ omega^one``, collected on increasing index triples."""
    out: ThreeForm = {}
    for (j, k), c in a.items():
        idx = [j, k, one]
        if len(set(idx)) < 3:
            continue
        # sign of the permutation sorting idx
        sign = 1
        for x in range(3):
            for y in range(x + 1, 3):
                if idx[x] > idx[y]:
                    sign = -sign
        key = tuple(sorted(idx))
        out[key] = out.get(key, GaussianRational(0)) + (c if sign > 0 else -c)
    return out


def d_squared(equations: Equations = MC_EQUATIONS) -> Dict[str, ThreeForm]:
    """Nonzero coefficients of ``d(d omega^i)`` for each form.

    For ``d omega^i = sum C^i_jk omega^j ^ omega^k`` with constant ``C``,
    ``d(d omega^i) = sum C^i_jk (d omega^j ^ omega^k - omega^j ^ d omega^k)``.
    """
    forms = two_forms(equations)
    out: Dict[str, ThreeForm] = {}
    for i, table in enumerate(forms):
        total: ThreeForm = {}
        for (j, k), c in table.items():
            # d omega^j ^ omega^k
            for key, v in _wedge(forms[j], k).items():
                total[key] = total.get(key, GaussianRational(0)) + c * v
            # -omega^j ^ d omega^k = -(d omega^k ^ omega^j), two-forms commute with one-forms
            for key, v in _wedge(forms[k], j).items():
                total[key] = total.get(key, GaussianRational(0)) - c * v
        out[FORMS[i]] = {key: v for key, v in total.items() if not v.is_zero()}
    return out


def _format_three_form(t: ThreeForm) -> str:
    return " + ".join(
        f"({c})*{FORMS[a]}^{FORMS[b]}^{FORMS[d]}" for (a, b, d), c in sorted(t.items())
    )


def d_squared_report(equations: Equations = MC_EQUATIONS, title: str = "d_squared") -> CheckReport:
    report = CheckReport(title)
    for form, three in d_squared(equations).items():
        if three:
            report.add(CheckResult(f"dd{form}", False, "nonzero", value=_format_three_form(three)))
        else:
            report.add(CheckResult(f"dd{form}", True))
    return report


def without_dalpha(equations: Equations = MC_EQUATIONS) -> Dict[str, List[Tuple[object, str, str]]]:
    """The system with ``d alpha = d alphabar = 0``."""
    reduced = {form: list(terms) for form, terms in equations.items()}
    reduced["alpha"] = []
    reduced["alphabar"] = []
    return reduced


def dalpha_consistency() -> CheckReport:
    """``d alpha = zeta ^ zetabar`` is forced by ``d^2 = 0``."""
    report = CheckReport("dalpha")
    full = d_squared_report(MC_EQUATIONS, "with_dalpha")
    report.section(full)
    broken = d_squared(without_dalpha())
    failing = sorted(form for form, three in broken.items() if three)
    report.add(
        CheckResult(
            "without dalpha d^2 fails",
            bool(failing),
            "nonzero d^2 for " + ", ".join(failing) if failing else "d^2 vanishes",
        )
    )
    return report


def liealg_suite() -> CheckReport:
    """Dual table, Jacobi, W-table and the d^2 consistency of the coframe."""
    dual = dual_algebra_from_mc()
    report = CheckReport("liealg")
    report.section(compare_tables(dual, expected_dual_algebra(), "dual_table"))
    jac = jacobi_check(dual)
    jac.title = "dual_jacobi"
    report.section(jac)
    W = w_algebra()
    report.section(compare_tables(W, expected_w_algebra(), "w_table"))
    report.section(dalpha_consistency())
    return report


__all__ = [
    "DUAL_LABELS",
    "FORMS",
    "MC_EQUATIONS",
    "W_LABELS",
    "change_basis",
    "d_squared",
    "d_squared_report",
    "dalpha_consistency",
    "dual_algebra_from_mc",
    "expected_dual_algebra",
    "expected_w_algebra",
    "liealg_suite",
    "two_forms",
    "w_algebra",
    "w_basis",
    "without_dalpha",
]
