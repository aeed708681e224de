"""Frames, their dual coframes and expansion of fields in a frame."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from config.logging_setup import get_logger
from expr.calculus import conjugate, free_vars
from expr.errors import DivisionByZero, SamplingExhausted, SingularFrame
from expr.evaluate import Evaluator
from expr.nodes import ONE, ZERO, Expr, add, as_expr, mul, power
from expr.printer import to_text
from expr.sampling import PointSampler, SampleSpec
from expr.scalars import scalar_is_zero
from expr.variables import SURFACE_VARIABLES, VARIABLES, ordering_key

from .vector_field import VectorField, combination

logger = get_logger(__name__)

Matrix = List[List[Expr]]


@dataclass(frozen=True)
class OneForm:
    """``sum_x coefficients[x] * dx``."""

    coefficients: Mapping[str, Expr]

    @classmethod
    def of(cls, coefficients: Mapping[str, object]) -> "OneForm":
        cleaned = {}
        for name, value in coefficients.items():
            e = as_expr(value)
            if not e.is_zero():
                cleaned[name] = e
        return cls(dict(sorted(cleaned.items(), key=lambda kv: ordering_key(VARIABLES[kv[0]]))))

    def __call__(self, v: VectorField) -> Expr:
        return add(*(mul(c, v.coefficient(x)) for x, c in self.coefficients.items()))

    def conjugate(self) -> "OneForm":
        return OneForm.of(
            {VARIABLES[x].partner_name: conjugate(c) for x, c in self.coefficients.items()}
        )

    def scale(self, factor: object) -> "OneForm":
        f = as_expr(factor)
        return OneForm.of({x: mul(f, c) for x, c in self.coefficients.items()})

    def __add__(self, other: "OneForm") -> "OneForm":
        names = set(self.coefficients) | set(other.coefficients)
        return OneForm.of(
            {x: add(self.coefficients.get(x, ZERO), other.coefficients.get(x, ZERO)) for x in names}
        )

    def to_dict(self) -> Dict[str, str]:
        return {x: to_text(c) for x, c in self.coefficients.items()}


@dataclass(frozen=True)
class Frame:
    """An ordered frame of vector fields.

    ``conjugation[i] = j`` records that field ``j`` is the conjugate of field
    ``i``. A frame built from a parent frame carries ``parent`` and the matrix
    ``parent_in_frame`` expressing each parent field in the new frame;
    expansion then goes through the parent.
    """

    names: Tuple[str, ...]
    fields: Tuple[VectorField, ...]
    conjugation: Optional[Tuple[int, ...]] = None
    coordinates: Tuple[str, ...] = tuple(v.name for v in SURFACE_VARIABLES)
    parent: Optional["Frame"] = field(default=None, compare=False)
    parent_in_frame: Optional[Tuple[Tuple[Expr, ...], ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.names) != len(self.fields):
            raise ValueError("one name per field")

    def __len__(self) -> int:
        return len(self.fields)

    def __getitem__(self, key: Union[int, str]) -> VectorField:
        if isinstance(key, str):
            return self.fields[self.names.index(key)]
        return self.fields[key]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def matrix(self) -> Matrix:
        """Rows are fields, columns the coordinate basis."""
        return [[f.coefficient(x) for x in self.coordinates] for f in self.fields]

    def derived(
        self,
        names: Sequence[str],
        rows: Sequence[Sequence[object]],
        parent_rows: Sequence[Sequence[object]],
    ) -> "Frame":
        """New frame ``f_i = sum_j rows[i][j] * self_j``.

        ``parent_rows[j][i]`` must give ``self_j = sum_i parent_rows[j][i] * f_i``.
        """
        fields = tuple(combination(row, self.fields) for row in rows)
        inverse = tuple(tuple(as_expr(x) for x in row) for row in parent_rows)
        return Frame(
            tuple(names),
            fields,
            self.conjugation,
            self.coordinates,
            parent=self,
            parent_in_frame=inverse,
        )

    def conjugate_index(self, i: int) -> int:
        if self.conjugation is None:
            raise ValueError("frame has no conjugation data")
        return self.conjugation[i]


def expand_in_frame(
    v: VectorField,
    frame: Frame,
    spec: Optional[SampleSpec] = None,
) -> List[Expr]:
    """Coefficients ``a`` with ``v = sum_i a_i * frame_i``.

    Derived frames expand in their parent and convert. Otherwise equations
    with a single unsolved unknown are back-substituted; anything left goes
    through symbolic elimination with sample-checked pivots.
    """
    if frame.parent is not None:
        b = expand_in_frame(v, frame.parent, spec)
        n = len(frame)
        return [
            add(*(mul(b[j], frame.parent_in_frame[j][i]) for j in range(len(b))))
            for i in range(n)
        ]
    matrix = frame.matrix()
    rhs = [v.coefficient(x) for x in frame.coordinates]
    extra = [x for x, _ in v.items() if x not in frame.coordinates]
    if extra:
        raise SingularFrame(f"field has components outside the frame coordinates: {extra}")
    solved = _back_substitute(matrix, rhs)
    if solved is not None:
        return solved
    logger.debug("frame %s is not triangular; using elimination", frame.names)
    return _eliminate(matrix, rhs, spec or SampleSpec(count=1))


def _back_substitute(matrix: Matrix, rhs: Sequence[Expr]) -> Optional[List[Expr]]:
    n = len(matrix)
    unknown = set(range(n))
    used = set()
    solution: Dict[int, Expr] = {}
    while unknown:
        progress = False
        for col in range(len(rhs)):
            if col in used:
                continue
            open_rows = [i for i in unknown if not matrix[i][col].is_zero()]
            if len(open_rows) != 1:
                continue
            i = open_rows[0]
            known = add(*(mul(solution[j], matrix[j][col]) for j in solution if not matrix[j][col].is_zero()))
            solution[i] = mul(add(rhs[col], -known), power(matrix[i][col], -1))
            unknown.discard(i)
            used.add(col)
            progress = True
        if not progress:
            return None
    return [solution[i] for i in range(n)]


def _eliminate(matrix: Matrix, rhs: Sequence[Expr], spec: SampleSpec) -> List[Expr]:
    # system: sum_i a_i * matrix[i][col] = rhs[col]; rows of the transposed system
    n = len(matrix)
    system = [[matrix[i][col] for i in range(n)] + [rhs[col]] for col in range(len(rhs))]
    names = sorted({x for row in system for e in row for x in free_vars(e)})
    sampler = PointSampler(names, spec)
    evaluator = None
    for _ in range(spec.max_rejections):
        try:
            evaluator = Evaluator(sampler.draw())
            for row in system:
                for e in row:
                    evaluator(e)
            break
        except DivisionByZero:
            evaluator = None
    if evaluator is None:
        raise SamplingExhausted(1, 0, spec.max_rejections)
    r = 0
    pivots = []
    for c in range(n):
        pivot = None
        for i in range(r, len(system)):
            e = system[i][c]
            if not e.is_zero() and not scalar_is_zero(evaluator(e)):
                pivot = i
                break
        if pivot is None:
            raise SingularFrame(f"no pivot for frame column {c}")
        system[r], system[pivot] = system[pivot], system[r]
        inv = power(system[r][c], -1)
        system[r] = [mul(x, inv) for x in system[r]]
        for i in range(len(system)):
            if i != r and not system[i][c].is_zero():
                factor = system[i][c]
                system[i] = [add(x, -mul(factor, y)) for x, y in zip(system[i], system[r])]
        pivots.append(c)
        r += 1
    return [system[i][n] for i in range(n)]


@dataclass(frozen=True)
class Coframe:
    names: Tuple[str, ...]
    forms: Tuple[OneForm, ...]

    def __getitem__(self, key: Union[int, str]) -> OneForm:
        if isinstance(key, str):
            return self.forms[self.names.index(key)]
        return self.forms[key]

    def values_on(self, frame: Frame) -> List[List[Expr]]:
        """``[omega^i(f_j)]``; the identity matrix for a dual pair."""
        return [[form(f) for f in frame.fields] for form in self.forms]

    def duality_residuals(self, frame: Frame) -> Dict[str, Expr]:
        out: Dict[str, Expr] = {}
        for i, row in enumerate(self.values_on(frame)):
            for j, value in enumerate(row):
                target = ONE if i == j else ZERO
                out[f"{self.names[i]}({frame.names[j]})"] = add(value, -target)
        return out


__all__ = ["Coframe", "Frame", "OneForm", "expand_in_frame"]
