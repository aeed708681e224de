"""Exterior derivatives of a coframe, stored by their values on frame pairs.

For a coframe dual to a frame the values ``omega^i(f_j)`` are constant, so
``d omega^i(f_j, f_k) = -omega^i([f_j, f_k])``: the ten coefficients of each
two-form are read off the frame expansions of the ten brackets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from config.logging_setup import get_logger
from expr.calculus import conjugate
from expr.checks import CheckReport, CheckResult, result_from_zero_test
from expr.nodes import ZERO, Expr, add, as_expr, mul, neg
from expr.printer import to_text
from expr.sampling import SampleSpec, zero_test_many

from .frames import Frame, expand_in_frame

logger = get_logger(__name__)

# Wedge pairs in the order rho^kappa, rho^zeta, rho^kappabar, rho^zetabar,
# kappa^zeta, kappa^kappabar, kappa^zetabar, zeta^kappabar, zeta^zetabar,
# kappabar^zetabar.
PAIRS: Tuple[Tuple[int, int], ...] = tuple(combinations(range(5), 2))


@dataclass(frozen=True)
class TwoFormTable:
    """Coefficients of a two-form on ``omega^j ^ omega^k`` for ``j < k``."""

    form: str
    names: Tuple[str, ...]
    values: Tuple[Expr, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.pairs()):
            raise ValueError("one value per wedge pair")

    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(combinations(range(len(self.names)), 2))

    def labels(self) -> Tuple[str, ...]:
        return tuple(f"{self.names[j]}^{self.names[k]}" for j, k in self.pairs())

    def __getitem__(self, key) -> Expr:
        if isinstance(key, str):
            return self.values[self.labels().index(key)]
        j, k = key
        if j == k:
            return ZERO
        if j > k:
            return neg(self.values[self.pairs().index((k, j))])
        return self.values[self.pairs().index((j, k))]

    def items(self) -> Iterable[Tuple[str, Expr]]:
        return zip(self.labels(), self.values)

    @classmethod
    def from_mapping(
        cls, form: str, names: Sequence[str], entries: Mapping[str, object]
    ) -> "TwoFormTable":
        """Build a claimed table from ``{"kappa^zeta": expr, ...}``; absent entries are zero."""
        labels = [f"{names[j]}^{names[k]}" for j, k in combinations(range(len(names)), 2)]
        unknown = set(entries) - set(labels)
        if unknown:
            raise KeyError(f"unknown wedge labels: {sorted(unknown)}")
        values = tuple(as_expr(entries.get(label, ZERO)) for label in labels)
        return cls(form, tuple(names), values)

    def to_dict(self) -> Dict[str, str]:
        return {label: to_text(v) for label, v in self.items() if not v.is_zero()}


def bracket_expansions(
    frame: Frame, spec: Optional[SampleSpec] = None
) -> Dict[Tuple[int, int], List[Expr]]:
    """Frame components of ``[f_j, f_k]`` for every ``j < k``."""
    out: Dict[Tuple[int, int], List[Expr]] = {}
    for j, k in combinations(range(len(frame)), 2):
        out[(j, k)] = expand_in_frame(frame[j].bracket(frame[k]), frame, spec)
    return out


def dcoframe_coeffs(
    frame: Frame,
    names: Sequence[str],
    spec: Optional[SampleSpec] = None,
    forms: Optional[Sequence[int]] = None,
    expansions: Optional[Dict[Tuple[int, int], List[Expr]]] = None,
) -> Dict[str, TwoFormTable]:
    """Tables of ``d omega^i`` for the coframe dual to ``frame``.

    ``names`` are the coframe names (one per frame field). When the frame
    records its conjugation, the tables of conjugate forms are produced by
    ``conjugate_table`` from their partners instead of being recomputed.
    """
    expansions = expansions or bracket_expansions(frame, spec)
    indices = list(range(len(frame))) if forms is None else list(forms)
    direct = _direct_indices(frame, indices)
    tables: Dict[str, TwoFormTable] = {}
    for i in direct:
        values = tuple(neg(expansions[pair][i]) for pair in combinations(range(len(frame)), 2))
        tables[names[i]] = TwoFormTable(names[i], tuple(names), values)
    for i in indices:
        if names[i] in tables:
            continue
        partner = frame.conjugate_index(i)
        tables[names[i]] = conjugate_table(tables[names[partner]], frame, names[i])
    return {names[i]: tables[names[i]] for i in indices}


def _direct_indices(frame: Frame, indices: Sequence[int]) -> List[int]:
    if frame.conjugation is None:
        return list(indices)
    chosen: List[int] = []
    for i in indices:
        partner = frame.conjugation[i]
        if partner not in chosen:
            chosen.append(i)
    return chosen


def conjugate_table(table: TwoFormTable, frame: Frame, form: str) -> TwoFormTable:
    """Table of the conjugate form, from ``conj(d omega) = d conj(omega)``."""
    perm = frame.conjugation
    if perm is None:
        raise ValueError("frame has no conjugation data")
    n = len(table.names)
    result: Dict[Tuple[int, int], Expr] = {}
    for (j, k), value in zip(table.pairs(), table.values):
        a, b = perm[j], perm[k]
        c = conjugate(value)
        result[(min(a, b), max(a, b))] = c if a < b else neg(c)
    values = tuple(result.get(pair, ZERO) for pair in combinations(range(n), 2))
    return TwoFormTable(form, table.names, values)


def check_structure_table(
    computed: TwoFormTable,
    claimed: TwoFormTable,
    spec: Optional[SampleSpec] = None,
    findings: Iterable[str] = (),
) -> CheckReport:
    """Per-coefficient comparison with witnesses on failure.

    Labels listed in ``findings`` are reported but do not fail the report.
    """
    finding_labels = set(findings)
    report = CheckReport(f"d{computed.form}")
    diffs = {
        label: add(c, neg(claimed[label])) for label, c in computed.items()
    }
    outcomes = zero_test_many(diffs, spec)
    for label in computed.labels():
        result = result_from_zero_test(label, outcomes[label], finding=label in finding_labels)
        report.add(result)
        if not result.passed and not result.finding:
            logger.info("structure coefficient %s of d%s differs", label, computed.form)
    return report


def cyclic_residuals(
    frame: Frame,
    expansions: Dict[Tuple[int, int], List[Expr]],
    triples: Optional[Sequence[Tuple[int, int, int]]] = None,
) -> Dict[str, Expr]:
    """Components of the Jacobi sum written through the structure functions.

    With ``[f_a, f_b] = sum_i c^i_ab f_i`` the Jacobi identity reads, for each
    component ``m``, ``sum_cyc (sum_i c^i_ab c^m_ic - f_c(c^m_ab)) = 0``; these
    are the ``d(d omega^m) = 0`` conditions on the computed tables.
    """
    n = len(frame)

    def c(i: int, a: int, b: int) -> Expr:
        if a == b:
            return ZERO
        if a < b:
            return expansions[(a, b)][i]
        return neg(expansions[(b, a)][i])

    out: Dict[str, Expr] = {}
    for a, b, cc in triples or list(combinations(range(n), 3)):
        for m in range(n):
            terms = []
            for x, y, z in ((a, b, cc), (b, cc, a), (cc, a, b)):
                for i in range(n):
                    coeff = c(i, x, y)
                    if not coeff.is_zero():
                        terms.append(mul(coeff, c(m, i, z)))
                terms.append(neg(frame[z].apply(c(m, x, y))))
            out[f"{frame.names[a]},{frame.names[b]},{frame.names[cc]}:{frame.names[m]}"] = add(*terms)
    return out


__all__ = [
    "PAIRS",
    "TwoFormTable",
    "bracket_expansions",
    "check_structure_table",
    "conjugate_table",
    "cyclic_residuals",
    "dcoframe_coeffs",
]
