"""
Finite-dimensional Lie algebras given by exact structure constants.

``constants[j][k][i]`` is the coefficient of ``e_i`` in ``[e_j, e_k]``.
Everything is over the Gaussian rationals; there is no float arithmetic
in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from config.logging_setup import get_logger
from expr.checks import CheckReport, CheckResult
from expr.errors import LieAlgebraError
from expr.linalg import Matrix, matmul, nullspace, rank, zeros
from expr.scalars import GaussianRational

logger = get_logger(__name__)

Vector = Tuple[GaussianRational, ...]

_ZERO = GaussianRational(0)


def _format_vector(labels: Sequence[str], v: Sequence[GaussianRational]) -> str:
    parts = []
    for label, c in zip(labels, v):
        if c.is_zero():
            continue
        if c == GaussianRational(1):
            parts.append(label)
        elif c == GaussianRational(-1):
            parts.append(f"-{label}")
        else:
            parts.append(f"({c})*{label}")
    return " + ".join(parts) if parts else "0"


class LieAlgebraSC:
    """A Lie algebra presented by structure constants on a labelled basis."""

    def __init__(self, labels: Sequence[str], constants: Sequence[Sequence[Sequence[object]]]) -> None:
        self.labels: Tuple[str, ...] = tuple(labels)
        n = len(self.labels)
        if len(constants) != n or any(len(row) != n for row in constants):
            raise LieAlgebraError("structure constants must be n x n x n")
        self.constants: Tuple[Tuple[Vector, ...], ...] = tuple(
            tuple(tuple(GaussianRational.coerce(c) for c in cell) for cell in row)
            for row in constants
        )
        for j in range(n):
            for k in range(n):
                if len(self.constants[j][k]) != n:
                    raise LieAlgebraError("structure constants must be n x n x n")
                if any(a != -b for a, b in zip(self.constants[j][k], self.constants[k][j])):
                    raise LieAlgebraError(
                        f"bracket not antisymmetric on ({self.labels[j]}, {self.labels[k]})"
                    )

    @classmethod
    def from_brackets(
        cls,
        labels: Sequence[str],
        brackets: Mapping[Tuple[str, str], Mapping[str, object]],
    ) -> "LieAlgebraSC":
        """Build from ``{(x, y): {z: coeff}}``; the antisymmetric partner is implied.

        Pairs that are not listed bracket to zero. Listing both ``(x, y)``
        and ``(y, x)`` inconsistently is an error.
        """
        labels = tuple(labels)
        n = len(labels)
        index = {label: i for i, label in enumerate(labels)}
        table: List[List[List[GaussianRational]]] = [
            [[_ZERO] * n for _ in range(n)] for _ in range(n)
        ]
        seen: Dict[Tuple[int, int], Vector] = {}
        for (x, y), combo in brackets.items():
            try:
                j, k = index[x], index[y]
            except KeyError as exc:
                raise LieAlgebraError(f"unknown basis label {exc.args[0]!r}") from None
            vec = [_ZERO] * n
            for z, c in combo.items():
                if z not in index:
                    raise LieAlgebraError(f"unknown basis label {z!r}")
                vec[index[z]] = vec[index[z]] + GaussianRational.coerce(c)
            if (k, j) in seen and seen[(k, j)] != tuple(-c for c in vec):
                raise LieAlgebraError(f"inconsistent entries for [{x}, {y}] and [{y}, {x}]")
            seen[(j, k)] = tuple(vec)
            table[j][k] = vec
            table[k][j] = [-c for c in vec]
        return cls(labels, table)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def basis_vector(self, i: int) -> Vector:
        return tuple(GaussianRational(1) if j == i else _ZERO for j in range(self.dim))

    def structure(self, j: int, k: int) -> Vector:
        return self.constants[j][k]

    def bracket(self, x: Sequence[object], y: Sequence[object]) -> Vector:
        """Bilinear extension of the basis brackets."""
        xs = [GaussianRational.coerce(c) for c in x]
        ys = [GaussianRational.coerce(c) for c in y]
        out = [_ZERO] * self.dim
        for j, xj in enumerate(xs):
            if xj.is_zero():
                continue
            for k, yk in enumerate(ys):
                if yk.is_zero():
                    continue
                coeff = xj * yk
                for i, c in enumerate(self.constants[j][k]):
                    if not c.is_zero():
                        out[i] = out[i] + coeff * c
        return tuple(out)

    def ad(self, x: Sequence[object]) -> Matrix:
        """Matrix of ``ad x`` acting on column coordinate vectors."""
        n = self.dim
        m = zeros(n, n)
        for k in range(n):
            image = self.bracket(x, self.basis_vector(k))
            for i in range(n):
                m[i][k] = image[i]
        return m

    def format(self, v: Sequence[GaussianRational]) -> str:
        return _format_vector(self.labels, v)

    def subalgebra_closed(self, indices: Sequence[int]) -> bool:
        """True when the span of the given basis vectors is closed under the bracket."""
        chosen = set(indices)
        for j, k in combinations(sorted(chosen), 2):
            if any(not c.is_zero() for i, c in enumerate(self.constants[j][k]) if i not in chosen):
                return False
        return True

    def table(self) -> Dict[str, str]:
        return {
            f"[{self.labels[j]},{self.labels[k]}]": self.format(self.constants[j][k])
            for j, k in combinations(range(self.dim), 2)
        }


@dataclass(frozen=True)
class LinearMap:
    """``rows[i]`` holds the coordinates of the image of basis vector ``i``."""

    rows: Tuple[Vector, ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[object]]) -> "LinearMap":
        return cls(tuple(tuple(GaussianRational.coerce(c) for c in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls.of([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __call__(self, x: Sequence[object]) -> Vector:
        out = [_ZERO] * len(self.rows[0])
        for xi, row in zip(x, self.rows):
            xi = GaussianRational.coerce(xi)
            if xi.is_zero():
                continue
            for j, c in enumerate(row):
                out[j] = out[j] + xi * c
        return tuple(out)

    def is_invertible(self) -> bool:
        n = len(self.rows)
        return all(len(r) == n for r in self.rows) and rank([list(r) for r in self.rows]) == n


def killing_form(A: LieAlgebraSC) -> Matrix:
    """``K[j][k] = trace(ad e_j ad e_k)``."""
    ads = [A.ad(A.basis_vector(i)) for i in range(A.dim)]
    out = zeros(A.dim, A.dim)
    for j in range(A.dim):
        for k in range(j, A.dim):
            product = matmul(ads[j], ads[k])
            trace = _ZERO
            for i in range(A.dim):
                trace = trace + product[i][i]
            out[j][k] = out[k][j] = trace
    return out


def center(A: LieAlgebraSC) -> List[Vector]:
    """Basis of ``{x : [x, y] = 0 for all y}``."""
    n = A.dim
    # row (i, k), column j: coefficient of e_i in [e_j, e_k]
    rows = [[A.constants[j][k][i] for j in range(n)] for k in range(n) for i in range(n)]
    return [tuple(v) for v in nullspace(rows)]


def jacobi_check(A: LieAlgebraSC) -> CheckReport:
    """``[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0`` on every basis triple."""
    report = CheckReport("jacobi")
    e = [A.basis_vector(i) for i in range(A.dim)]
    for a, b, c in combinations(range(A.dim), 3):
        total = [_ZERO] * A.dim
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            term = A.bracket(e[x], A.bracket(e[y], e[z]))
            total = [s + t for s, t in zip(total, term)]
        name = f"{A.labels[a]},{A.labels[b]},{A.labels[c]}"
        if all(t.is_zero() for t in total):
            report.add(CheckResult(name, True))
        else:
            logger.info("Jacobi fails on %s", name)
            report.add(CheckResult(name, False, "nonzero Jacobi sum", value=A.format(total)))
    return report


def isomorphism_check(
    A: LieAlgebraSC, B: LieAlgebraSC, m: LinearMap, title: Optional[str] = None
) -> CheckReport:
    """``m([x, y]_A) = [m x, m y]_B`` on basis pairs, and ``m`` invertible."""
    if A.dim != B.dim or len(m.rows) != A.dim:
        raise LieAlgebraError(f"dimension mismatch: {A.dim}, {B.dim}, map {len(m.rows)}")
    report = CheckReport(title or "isomorphism")
    report.add(CheckResult("invertible", m.is_invertible()))
    for j, k in combinations(range(A.dim), 2):
        lhs = m(A.structure(j, k))
        rhs = B.bracket(m.rows[j], m.rows[k])
        name = f"[{A.labels[j]},{A.labels[k]}]"
        if lhs == rhs:
            report.add(CheckResult(name, True))
        else:
            report.add(
                CheckResult(
                    name,
                    False,
                    f"image {B.format(lhs)} differs from bracket {B.format(rhs)}",
                )
            )
    return report


def compare_tables(
    A: LieAlgebraSC, expected: LieAlgebraSC, title: str = "table"
) -> CheckReport:
    """Cell-by-cell comparison of two algebras on the same labels."""
    if A.labels != expected.labels:
        raise LieAlgebraError("tables have different bases")
    report = CheckReport(title)
    for j, k in combinations(range(A.dim), 2):
        got, want = A.structure(j, k), expected.structure(j, k)
        name = f"[{A.labels[j]},{A.labels[k]}]"
        if got == want:
            report.add(CheckResult(name, True))
        else:
            report.add(
                CheckResult(name, False, f"expected {A.format(want)}", value=A.format(got))
            )
    return report


__all__ = [
    "LieAlgebraSC",
    "LinearMap",
    "center",
    "compare_tables",
    "isomorphism_check",
    "jacobi_check",
    "killing_form",
]
