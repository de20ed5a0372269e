"""Exact projective geometry over Q(sqrt d): lines, incidence, lattices.

Lines and points are coefficient triples normalized so the first nonzero
entry is 1; every equality test is syntactic equality of normal forms,
never numeric.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .combinatorics import ConfigTable, Permutation
from .errors import DegenerateError, ParseError, ValidationError
from .fields import RATIONAL, FieldSpec, QuadExt, format_scalar, parse_scalar


def _as_scalar(value, field: FieldSpec) -> QuadExt:
    if isinstance(value, QuadExt):
        return value.with_field(field)
    return QuadExt(value, 0, field)


def _normalize_triple(coords, field: FieldSpec) -> tuple[QuadExt, QuadExt, QuadExt]:
    vals = tuple(_as_scalar(v, field) for v in coords)
    if len(vals) != 3:
        raise ValidationError("expected a coefficient triple")
    pivot = next((v for v in vals if not v.is_zero), None)
    if pivot is None:
        raise ValidationError("all three coefficients are zero")
    inv = pivot.inverse()
    return tuple(v * inv for v in vals)


class _Triple:
    __slots__ = ("coords", "field")

    def __init__(self, coords, field: FieldSpec | None = None) -> None:
        if field is None:
            field = next((c.field for c in coords
                          if isinstance(c, QuadExt) and not c.field.is_rational),
                         RATIONAL)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", _normalize_triple(coords, field))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k: int) -> QuadExt:
        return self.coords[k]


class ProjLine(_Triple):
    """Projective line A*x + B*y + C*z = 0, normalized."""

    def incidence(self, point: "ProjPoint") -> QuadExt:
        a, b, c = self.coords
        x, y, z = point.coords
        return a * x + b * y + c * z

    def contains(self, point: "ProjPoint") -> bool:
        return self.incidence(point).is_zero

    def __repr__(self) -> str:
        return "ProjLine(%s; %s; %s)" % tuple(format_scalar(c) for c in self.coords)


class ProjPoint(_Triple):
    """Projective point [X : Y : Z], normalized like a line."""

    def __repr__(self) -> str:
        return "ProjPoint[%s : %s : %s]" % tuple(format_scalar(c) for c in self.coords)


def cross(u, v) -> tuple:
    """Cross product of coefficient/coordinate triples (works for any
    scalar type with ring operations)."""
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The unique common point of two distinct lines."""
    if l1 == l2:
        raise DegenerateError("intersect of identical lines")
    field = l1.field if not l1.field.is_rational else l2.field
    a = tuple(c.with_field(field) for c in l1.coords)
    b = tuple(c.with_field(field) for c in l2.coords)
    return ProjPoint(cross(a, b), field)


def lines_proj_equal(l1: ProjLine, l2: ProjLine) -> bool:
    """Projective equality: equal normalized coefficient triples."""
    return l1.coords == l2.coords


class Arrangement:
    """Ordered projective lines, labeled 1..n by position."""

    __slots__ = ("name", "field", "lines")

    def __init__(self, name: str, field: FieldSpec, lines) -> None:
        lns = tuple(ln if isinstance(ln, ProjLine) else ProjLine(ln, field)
                    for ln in lines)
        for ln in lns:
            if not ln.field.is_rational and ln.field != field:
                raise ValidationError("line field differs from arrangement field")
        seen = {}
        for idx, ln in enumerate(lns, start=1):
            if ln.coords in seen:
                raise DegenerateError(
                    f"lines {seen[ln.coords]} and {idx} coincide after normalization")
            seen[ln.coords] = idx
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "lines", lns)

    def __setattr__(self, name, value):
        raise AttributeError("Arrangement is immutable")

    @property
    def n(self) -> int:
        return len(self.lines)

    def line(self, label: int) -> ProjLine:
        return self.lines[label - 1]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Arrangement)
                and self.lines == other.lines)

    def __hash__(self) -> int:
        return hash(self.lines)

    def serialize(self) -> str:
        out = [f"arrangement {self.name}", f"field {self.field.header()}"]
        for idx, ln in enumerate(self.lines, start=1):
            triple = " ; ".join(format_scalar(c) for c in ln.coords)
            out.append(f"line {idx} : {triple}")
        return "\n".join(out) + "\n"

    def __repr__(self) -> str:
        return f"Arrangement({self.name!r}, n={self.n}, field={self.field})"


@dataclass(frozen=True)
class IntersectionLattice:
    """Every pairwise intersection grouped by coincident point; covers each
    unordered line pair exactly once."""

    points: tuple[tuple[ProjPoint, frozenset], ...]

    def multiple_points(self) -> list[tuple[ProjPoint, frozenset]]:
        return [(p, s) for p, s in self.points if len(s) >= 3]

    def census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, s in self.points:
            out[len(s)] = out.get(len(s), 0) + 1
        return out


def lattice_of(arrangement: Arrangement) -> tuple[IntersectionLattice, ConfigTable]:
    """Group all C(n,2) pairwise intersections by exact coincidence.

    The derived ConfigTable lists only points of multiplicity >= 3,
    labeled m1, m2, ... in lexicographic order of their sorted line sets.
    """
    groups: dict[tuple, set[int]] = {}
    reps: dict[tuple, ProjPoint] = {}
    for i, j in combinations(range(1, arrangement.n + 1), 2):
        p = intersect(arrangement.line(i), arrangement.line(j))
        key = p.coords
        groups.setdefault(key, set()).update((i, j))
        reps.setdefault(key, p)
    entries = sorted(((reps[k], frozenset(s)) for k, s in groups.items()),
                     key=lambda e: tuple(sorted(e[1])))
    lattice = IntersectionLattice(points=tuple(entries))
    total = sum(comb(len(s), 2) for _, s in lattice.points)
    if total != comb(arrangement.n, 2):
        raise ValidationError("lattice does not cover every line pair exactly once")
    multiple = [s for _, s in entries if len(s) >= 3]
    table = ConfigTable(arrangement.name, arrangement.n,
                        [(f"m{k}", s) for k, s in enumerate(multiple, start=1)])
    return lattice, table


def apply_coordinate_map(arrangement: Arrangement, swap: bool,
                         conjugate: bool) -> Arrangement:
    """Coordinate maps: swap sends (A,B,C) to (B,A,C) (the reflection
    exchanging x and y); conjugate applies the Galois conjugation to every
    coefficient.  Labels are preserved; output is renormalized."""
    new_lines = []
    for ln in arrangement.lines:
        a, b, c = ln.coords
        if swap:
            a, b = b, a
        if conjugate:
            a, b, c = a.conjugate(), b.conjugate(), c.conjugate()
        new_lines.append(ProjLine((a, b, c), arrangement.field))
    return Arrangement(arrangement.name, arrangement.field, new_lines)


def relabel(arrangement: Arrangement, sigma: Permutation) -> Arrangement:
    """Send line i to position sigma(i): result.lines[sigma(i)] = lines[i]."""
    if sigma.degree != arrangement.n:
        raise ValidationError("permutation degree differs from line count")
    slots: list[ProjLine | None] = [None] * arrangement.n
    for i in range(1, arrangement.n + 1):
        slots[sigma(i) - 1] = arrangement.line(i)
    return Arrangement(arrangement.name, arrangement.field, slots)


def parse_arrangement(text: str) -> Arrangement:
    """Parse the .arr format: field header plus consecutive line triples."""
    name = None
    field = None
    entries: dict[int, tuple] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword = fields[0]
        if keyword == "arrangement":
            if len(fields) != 2:
                raise ParseError(f"line {lineno}: expected 'arrangement <name>'")
            name = fields[1]
        elif keyword == "field":
            rest = fields[1:]
            if rest == ["rational"]:
                field = RATIONAL
            elif len(rest) == 2 and rest[0] == "sqrt":
                try:
                    field = FieldSpec.quadratic(int(rest[1]))
                except (ValueError, ValidationError) as exc:
                    raise ParseError(f"line {lineno}: bad field ({exc})") from exc
            else:
                raise ParseError(f"line {lineno}: expected 'field rational' or 'field sqrt <d>'")
        elif keyword == "line":
            if field is None:
                raise ParseError(f"line {lineno}: 'field' must precede line entries")
            m = re.match(r"^line\s+(\d+)\s*:\s*(.*)$", line)
            if not m:
                raise ParseError(f"line {lineno}: expected 'line <i> : a ; b ; c'")
            idx = int(m.group(1))
            parts = [p.strip() for p in m.group(2).split(";")]
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected three ';'-separated scalars")
            if idx in entries:
                raise ParseError(f"line {lineno}: duplicate line index {idx}")
            entries[idx] = tuple(parse_scalar(p, field) for p in parts)
        else:
            raise ParseError(f"line {lineno}: unknown directive {keyword!r}")
    if name is None or field is None or not entries:
        raise ParseError("missing 'arrangement', 'field', or line entries")
    n = len(entries)
    if sorted(entries) != list(range(1, n + 1)):
        raise ParseError("line indices must be 1..n consecutively")
    try:
        return Arrangement(name, field, [entries[i] for i in range(1, n + 1)])
    except (ValidationError, DegenerateError) as exc:
        raise ParseError(str(exc)) from exc
