"""Construction plans over Q(t) and the moduli-defining constraint.

A plan fixes four grid lines (x=0, x=z, y=0, y=z), gives the remaining
lines as rational-function coefficient triples (or joins of constructed
points), and lists the incidences the target combinatorics still
requires.  Evaluating those incidences symbolically leaves numerator
polynomials whose common factor — filtered through exact realization and
a lattice comparison at each root — is the constraint indexing the
moduli components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import ConfigTable, Permutation, is_lattice_isomorphism
from .errors import (ConstraintError, DegenerateError, ParseError, PoleError,
                     ValidationError)
from .fields import RATIONAL, FieldSpec, QuadExt, quad_roots
from .geometry import Arrangement, ProjLine, cross, lattice_of
from .polys import Poly, RatFunc, parse_ratfunc, poly_reduce, ratfunc_eval


@dataclass(frozen=True)
class GivenLine:
    index: int
    entries: tuple[RatFunc, RatFunc, RatFunc]


@dataclass(frozen=True)
class MeetPoint:
    name: str
    i: int
    j: int


@dataclass(frozen=True)
class JoinLine:
    index: int
    p: str
    q: str


@dataclass(frozen=True)
class Require:
    point: str
    line: int


_GRID = (
    (Fraction(1), Fraction(0), Fraction(0)),    # x = 0
    (Fraction(1), Fraction(0), Fraction(-1)),   # x = z
    (Fraction(0), Fraction(1), Fraction(0)),    # y = 0
    (Fraction(0), Fraction(1), Fraction(-1)),   # y = z
)


@dataclass(frozen=True)
class ConstructionPlan:
    name: str
    var: str
    n: int
    steps: tuple

    def requires(self) -> list[Require]:
        return [s for s in self.steps if isinstance(s, Require)]

    def grid_labels(self) -> tuple[int, int, int, int]:
        """Labels of the lines pinned to x=0, x=z, y=0, y=z."""
        found: dict[tuple, int] = {}
        for step in self.steps:
            if not isinstance(step, GivenLine):
                continue
            if not all(e.is_constant for e in step.entries):
                continue
            vals = tuple(e.constant_value() for e in step.entries)
            pivot = next((v for v in vals if v != 0), None)
            if pivot is None:
                continue
            found[tuple(v / pivot for v in vals)] = step.index
        try:
            return tuple(found[g] for g in _GRID)
        except KeyError:
            raise ValidationError("plan lacks the four grid lines "
                                  "x=0, x=z, y=0, y=z") from None


def _validate_plan(name: str, var: str, n: int, steps: list) -> ConstructionPlan:
    defined_lines: set[int] = set()
    defined_points: set[str] = set()
    for step in steps:
        if isinstance(step, GivenLine):
            if not 1 <= step.index <= n:
                raise ValidationError(f"line {step.index} out of range 1..{n}")
            if step.index in defined_lines:
                raise ValidationError(f"line {step.index} defined twice")
            defined_lines.add(step.index)
        elif isinstance(step, MeetPoint):
            if step.name in defined_points:
                raise ValidationError(f"point {step.name} defined twice")
            if step.i == step.j:
                raise ValidationError(f"point {step.name}: meet of a line with itself")
            for ref in (step.i, step.j):
                if ref not in defined_lines:
                    raise ValidationError(
                        f"point {step.name}: line {ref} used before definition")
            defined_points.add(step.name)
        elif isinstance(step, JoinLine):
            if not 1 <= step.index <= n:
                raise ValidationError(f"line {step.index} out of range 1..{n}")
            if step.index in defined_lines:
                raise ValidationError(f"line {step.index} defined twice")
            if step.p == step.q:
                raise ValidationError(f"line {step.index}: join of a point with itself")
            for ref in (step.p, step.q):
                if ref not in defined_points:
                    raise ValidationError(
                        f"line {step.index}: point {ref} used before definition")
            defined_lines.add(step.index)
        elif isinstance(step, Require):
            if step.point not in defined_points:
                raise ValidationError(
                    f"require: point {step.point} used before definition")
            if step.line not in defined_lines:
                raise ValidationError(
                    f"require: line {step.line} used before definition")
        else:
            raise ValidationError(f"unknown plan step {step!r}")
    if defined_lines != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - defined_lines)
        raise ValidationError(f"lines not defined: {missing}")
    plan = ConstructionPlan(name=name, var=var, n=n, steps=tuple(steps))
    plan.grid_labels()
    return plan


def parse_plan(text: str) -> ConstructionPlan:
    """Parse the .plan format."""
    name = None
    var = None
    n = None
    steps: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword = fields[0]
        if keyword == "plan":
            if len(fields) != 4 or fields[2] != "over":
                raise ParseError(f"line {lineno}: expected 'plan <name> over <var>'")
            name, var = fields[1], fields[3]
        elif keyword == "lines":
            if len(fields) != 2 or not fields[1].isdigit():
                raise ParseError(f"line {lineno}: expected 'lines <n>'")
            n = int(fields[1])
        elif keyword == "line":
            if var is None:
                raise ParseError(f"line {lineno}: 'plan' header must come first")
            head, _, rest = line.partition(":")
            head_fields = head.split()
            if len(head_fields) != 2 or not head_fields[1].isdigit():
                raise ParseError(f"line {lineno}: expected 'line <i> : ...'")
            index = int(head_fields[1])
            rest = rest.strip()
            if rest.startswith("join"):
                parts = rest.split()
                if len(parts) != 3:
                    raise ParseError(f"line {lineno}: expected 'join <P> <Q>'")
                steps.append(JoinLine(index=index, p=parts[1], q=parts[2]))
            else:
                parts = [p.strip() for p in rest.split(";")]
                if len(parts) != 3:
                    raise ParseError(
                        f"line {lineno}: expected three ';'-separated entries")
                try:
                    entries = tuple(parse_ratfunc(p, var) for p in parts)
                except ParseError as exc:
                    raise ParseError(f"line {lineno}: {exc}") from exc
                steps.append(GivenLine(index=index, entries=entries))
        elif keyword == "point":
            head, _, rest = line.partition(":")
            head_fields = head.split()
            if len(head_fields) != 2:
                raise ParseError(f"line {lineno}: expected 'point <P> : meet <i> <j>'")
            parts = rest.split()
            if len(parts) != 3 or parts[0] != "meet" or not parts[1].isdigit() \
                    or not parts[2].isdigit():
                raise ParseError(f"line {lineno}: expected 'meet <i> <j>'")
            steps.append(MeetPoint(name=head_fields[1],
                                   i=int(parts[1]), j=int(parts[2])))
        elif keyword == "require":
            if len(fields) != 4 or fields[2] != "on" or not fields[3].isdigit():
                raise ParseError(f"line {lineno}: expected 'require <P> on <i>'")
            steps.append(Require(point=fields[1], line=int(fields[3])))
        else:
            raise ParseError(f"line {lineno}: unknown directive {keyword!r}")
    if name is None or var is None:
        raise ParseError("missing 'plan' header")
    if n is None:
        raise ParseError("missing 'lines' header")
    try:
        return _validate_plan(name, var, n, steps)
    except ValidationError as exc:
        raise ParseError(str(exc)) from exc


def _run_symbolic(plan: ConstructionPlan):
    """Execute the plan over Q(t); returns line/point triples of RatFunc."""
    lines: dict[int, tuple] = {}
    points: dict[str, tuple] = {}
    for step in plan.steps:
        if isinstance(step, GivenLine):
            lines[step.index] = step.entries
        elif isinstance(step, MeetPoint):
            v = cross(lines[step.i], lines[step.j])
            if all(e.is_zero for e in v):
                raise DegenerateError(
                    f"lines {step.i},{step.j} coincide identically")
            points[step.name] = v
        elif isinstance(step, JoinLine):
            v = cross(points[step.p], points[step.q])
            if all(e.is_zero for e in v):
                raise DegenerateError(
                    f"points {step.p},{step.q} coincide identically")
            lines[step.index] = v
    return lines, points


def evaluate_plan(plan: ConstructionPlan, t0: QuadExt | Fraction | int) -> Arrangement:
    """Evaluate every entry exactly at t0.  Requirements are NOT checked."""
    if not isinstance(t0, QuadExt):
        t0 = QuadExt(t0)
    field = t0.field
    lines: dict[int, tuple] = {}
    points: dict[str, tuple] = {}
    for step in plan.steps:
        if isinstance(step, GivenLine):
            lines[step.index] = tuple(ratfunc_eval(e, t0) for e in step.entries)
        elif isinstance(step, MeetPoint):
            v = cross(lines[step.i], lines[step.j])
            if all(e.is_zero for e in v):
                raise DegenerateError(
                    f"lines {step.i},{step.j} coincide at {plan.var}={t0}")
            points[step.name] = v
        elif isinstance(step, JoinLine):
            v = cross(points[step.p], points[step.q])
            if all(e.is_zero for e in v):
                raise DegenerateError(
                    f"points {step.p},{step.q} coincide at {plan.var}={t0}")
            lines[step.index] = v
    return Arrangement(plan.name, field,
                       [ProjLine(lines[i], field) for i in range(1, plan.n + 1)])


def residual_numerators(plan: ConstructionPlan) -> list[tuple[str, int, Poly]]:
    """Numerator polynomial of each non-identically-satisfied requirement."""
    lines, points = _run_symbolic(plan)
    out = []
    for req in plan.requires():
        point = points[req.point]
        line = lines[req.line]
        expr = line[0] * point[0] + line[1] * point[1] + line[2] * point[2]
        if not expr.is_zero:
            out.append((req.point, req.line, expr.num))
    return out


@dataclass(frozen=True)
class ModuliConstraint:
    """The admissible factor: a quadratic (or degenerately linear) polynomial
    whose roots index the moduli components."""

    poly: Poly
    var: str
    field: FieldSpec
    roots: tuple[QuadExt, QuadExt]
    discarded: tuple[tuple[Poly, str], ...]

    def format(self) -> str:
        return self.poly.format(self.var)

    def __str__(self) -> str:
        return self.format()


def _primitive(poly: Poly) -> Poly:
    return poly.primitive()[1]


def _roots_of_factor(factor: Poly) -> tuple[FieldSpec, tuple[QuadExt, ...]]:
    if factor.degree == 1:
        r = QuadExt(-factor[0] / factor[1])
        return RATIONAL, (r,)
    field, rp, rm = quad_roots(factor[2], factor[1], factor[0])
    return field, (rp, rm)


def derive_constraint(plan: ConstructionPlan, target: ConfigTable) -> ModuliConstraint:
    """Extract the residual incidence constraint and keep the unique factor
    whose every root realizes the target combinatorics exactly.

    Factors of individual requirement numerators that are not common to
    all requirements are reported in `discarded`, as are common factors
    that fail realization (pole, degeneracy, or lattice mismatch).
    """
    if plan.n != target.n:
        raise ValidationError("plan and table have different line counts")
    numerators = [num for _, _, num in residual_numerators(plan)]
    discarded: list[tuple[Poly, str]] = []
    if not numerators:
        raise ConstraintError("no residual requirements: nothing constrains the parameter")

    common = numerators[0]
    for num in numerators[1:]:
        common = common.gcd(num)
    candidates = []
    if common.degree > 0:
        candidates = [f for f, _ in poly_reduce(common)]

    seen_noncommon = set()
    for num in numerators:
        for factor, _ in poly_reduce(num):
            if factor in candidates or factor in seen_noncommon:
                continue
            seen_noncommon.add(factor)
            discarded.append((factor, "not common to all requirements"))

    admissible = []
    for factor in candidates:
        field, roots = _roots_of_factor(factor)
        verdict = None
        for root in roots:
            try:
                realization = evaluate_plan(plan, root)
            except PoleError:
                verdict = f"pole at root of {factor.format(plan.var)}"
                break
            except (DegenerateError, ValidationError) as exc:
                verdict = f"degenerate: {exc}"
                break
            _, derived = lattice_of(realization)
            if not is_lattice_isomorphism(derived, target,
                                          Permutation.identity(plan.n)):
                verdict = "lattice mismatch"
                break
        if verdict is None:
            admissible.append((factor, field, roots))
        else:
            discarded.append((factor, verdict))

    if not admissible:
        raise ConstraintError(
            "zero admissible factors: no candidate realizes the target lattice "
            f"(discarded: {[(f.format(plan.var), r) for f, r in discarded]})")
    if len(admissible) > 1:
        polys = ", ".join(f.format(plan.var) for f, _, _ in admissible)
        raise ConstraintError(f"more than one admissible factor: {polys}")

    factor, field, roots = admissible[0]
    if len(roots) == 1:
        roots = (roots[0], roots[0])
    return ModuliConstraint(poly=_primitive(factor), var=plan.var, field=field,
                            roots=roots, discarded=tuple(discarded))


def realize_components(plan: ConstructionPlan,
                       constraint: ModuliConstraint) -> tuple[Arrangement, Arrangement]:
    """Evaluate the plan at both roots; the components are the "+" and "-"
    realizations."""
    if constraint.poly.degree != 2 or constraint.field.is_rational:
        raise ConstraintError("moduli not disconnected: constraint has a single "
                              "rational root")
    rp, rm = constraint.roots
    plus = evaluate_plan(plan, rp)
    minus = evaluate_plan(plan, rm)
    plus = Arrangement(plan.name + "+", plus.field, plus.lines)
    minus = Arrangement(plan.name + "-", minus.field, minus.lines)
    return plus, minus


def root_product(poly: Poly) -> Fraction:
    """Product of the two roots of a quadratic (Vieta: constant over leading)."""
    if poly.degree != 2:
        raise ValidationError("root_product expects a quadratic")
    return poly[0] / poly[2]
