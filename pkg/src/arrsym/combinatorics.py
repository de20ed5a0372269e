"""Configuration tables, lattice isomorphisms, and automorphism groups.

A configuration table records the multiple points (multiplicity >= 3) of
a line arrangement as sets of line labels; double points are implicit as
the uncovered pairs.  Automorphisms are found by backtracking on the
edge-weighted complete graph whose weight on {i, j} is the multiplicity
of the unique listed point through both lines (2 when none): weight
preservation prunes, and complete assignments get a full point-set check
(pairwise preservation alone is necessary, not sufficient).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import ParseError, ValidationError


class Permutation:
    """Bijection of {1..n}; images[i-1] = image of i."""

    __slots__ = ("images",)

    def __init__(self, images) -> None:
        imgs = tuple(int(v) for v in images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValidationError(f"not a permutation of 1..{n}: {imgs}")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def apply_set(self, labels) -> frozenset:
        return frozenset(self(i) for i in labels)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(i) = p(q(i))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.degree != other.degree:
            raise ValidationError("degree mismatch in composition")
        return Permutation(tuple(self(other(i)) for i in range(1, self.degree + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def order(self) -> int:
        k = 1
        acc = self
        ident = Permutation.identity(self.degree)
        while acc != ident:
            acc = acc * self
            k += 1
        return k

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    @property
    def is_involution(self) -> bool:
        return not self.is_identity and (self * self).is_identity

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "id"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({self.images})"

    def __str__(self) -> str:
        return self.cycle_string()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``(1 6)(2 5)(3 4)(7 8)``; ``id`` allowed."""
    s = text.strip()
    if s in ("id", "()", ""):
        return Permutation.identity(n)
    stripped = _CYCLE_RE.sub("", s)
    if stripped.strip():
        raise ParseError(f"malformed cycle notation {text!r}")
    images = list(range(1, n + 1))
    for body in _CYCLE_RE.findall(s):
        entries = [e for e in re.split(r"[,\s]+", body.strip()) if e]
        if len(entries) < 2:
            raise ParseError(f"cycle with fewer than two entries in {text!r}")
        try:
            vals = [int(e) for e in entries]
        except ValueError as exc:
            raise ParseError(f"non-integer label in {text!r}") from exc
        if len(set(vals)) != len(vals):
            raise ParseError(f"repeated label inside a cycle in {text!r}")
        for v in vals:
            if not 1 <= v <= n:
                raise ParseError(f"label {v} out of range 1..{n}")
            if images[v - 1] != v:
                raise ParseError(f"label {v} appears in two cycles")
        for a, b in zip(vals, vals[1:] + vals[:1]):
            images[a - 1] = b
    return Permutation(images)


class ConfigTable:
    """Multiple points of an arrangement: (label, set of incident lines)."""

    __slots__ = ("name", "n", "points", "_sets")

    def __init__(self, name: str, n: int, points) -> None:
        if n < 1:
            raise ValidationError("line count must be positive")
        pts = []
        labels = set()
        seen_pairs = {}
        for label, lines in points:
            lines = frozenset(int(v) for v in lines)
            if len(lines) < 3:
                raise ValidationError(f"point {label} has fewer than 3 lines")
            for v in lines:
                if not 1 <= v <= n:
                    raise ValidationError(f"point {label}: label {v} out of 1..{n}")
            if label in labels:
                raise ValidationError(f"duplicate point label {label}")
            labels.add(label)
            for pair in combinations(sorted(lines), 2):
                if pair in seen_pairs:
                    raise ValidationError(
                        f"lines {pair[0]},{pair[1]} lie on two points "
                        f"({seen_pairs[pair]} and {label}): two lines meet once")
                seen_pairs[pair] = label
            pts.append((str(label), lines))
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "_sets", frozenset(s for _, s in pts))

    def __setattr__(self, name, value):
        raise AttributeError("ConfigTable is immutable")

    @property
    def point_sets(self) -> frozenset:
        return self._sets

    def multiplicity_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for _, s in self.points:
            census[len(s)] = census.get(len(s), 0) + 1
        return census

    def double_count(self) -> int:
        return comb(self.n, 2) - sum(comb(len(s), 2) for _, s in self.points)

    def pair_weights(self) -> dict[tuple[int, int], int]:
        """weight{i,j} = multiplicity of the listed point through i and j, else 2."""
        w = {}
        for _, s in self.points:
            for pair in combinations(sorted(s), 2):
                w[pair] = len(s)
        return w

    def serialize(self) -> str:
        out = [f"arrangement {self.name}", f"lines {self.n}"]
        for label, s in self.points:
            out.append(f"point {label} : " + " ".join(str(v) for v in sorted(s)))
        return "\n".join(out) + "\n"

    def __eq__(self, other) -> bool:
        return (isinstance(other, ConfigTable) and self.n == other.n
                and self.point_sets == other.point_sets)

    def __hash__(self) -> int:
        return hash((self.n, self._sets))

    def __repr__(self) -> str:
        return f"ConfigTable({self.name!r}, n={self.n}, points={len(self.points)})"


def parse_config_table(text: str) -> ConfigTable:
    """Parse the .cfg format (line-oriented, # comments)."""
    name = None
    n = None
    points = []
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
        elif keyword == "lines":
            if len(fields) != 2 or not fields[1].isdigit():
                raise ParseError(f"line {lineno}: expected 'lines <n>'")
            n = int(fields[1])
        elif keyword == "point":
            m = re.match(r"^point\s+(\S+)\s*:\s*(.*)$", line)
            if not m:
                raise ParseError(f"line {lineno}: expected 'point <label> : <i> ...'")
            label, rest = m.group(1), m.group(2).split()
            if not rest or not all(v.isdigit() for v in rest):
                raise ParseError(f"line {lineno}: point needs integer line labels")
            if len(set(rest)) != len(rest):
                raise ParseError(f"line {lineno}: repeated line label in point {label}")
            points.append((label, [int(v) for v in rest]))
        else:
            raise ParseError(f"line {lineno}: unknown directive {keyword!r}")
    if name is None or n is None:
        raise ParseError("missing 'arrangement' or 'lines' header")
    try:
        return ConfigTable(name, n, points)
    except ValidationError as exc:
        raise ParseError(str(exc)) from exc


def is_lattice_isomorphism(a: ConfigTable, b: ConfigTable, tau: Permutation) -> bool:
    """True iff relabeling a's points through tau yields exactly b's points.

    Doubles agree automatically: they are the pairs not covered by any
    listed point."""
    if a.n != b.n or tau.degree != a.n:
        raise ValidationError("size mismatch between tables and permutation")
    return frozenset(tau.apply_set(s) for s in a.point_sets) == b.point_sets


@dataclass(frozen=True)
class AutGroup:
    """Full automorphism group of a configuration table."""

    n: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order_profile(self) -> dict[int, int]:
        profile: dict[int, int] = {}
        for g in self.elements:
            k = g.order()
            profile[k] = profile.get(k, 0) + 1
        return profile

    def is_abelian(self) -> bool:
        return all(g * h == h * g for g, h in combinations(self.elements, 2))

    def structure_name(self) -> str:
        """Convenience label from elementary tests; falls back to 'order N'."""
        n = self.order
        if n == 1:
            return "trivial"
        if n > 48:
            return f"order {n}"
        profile = tuple(sorted(self.element_order_profile().items()))
        known = {
            (24, ((1, 1), (2, 9), (3, 8), (4, 6))): "S4",
            (6, ((1, 1), (2, 3), (3, 2))): "S3",
            (48, ((1, 1), (2, 13), (3, 8), (4, 6), (6, 8), (8, 12))): "GL(2,F3)",
            (12, ((1, 1), (2, 7), (3, 2), (6, 2))): "S3 x Z2",
            (8, ((1, 1), (2, 5), (4, 2))): "D4",
        }
        label = known.get((n, profile))
        if label:
            return label
        if any(g.order() == n for g in self.elements):
            return f"Z{n}"
        if self.is_abelian():
            return f"abelian order {n}"
        return f"order {n}"


def _line_signatures(table: ConfigTable) -> dict[int, tuple[int, ...]]:
    w = table.pair_weights()
    sigs = {}
    for i in range(1, table.n + 1):
        sig = sorted(w.get((min(i, j), max(i, j)), 2)
                     for j in range(1, table.n + 1) if j != i)
        sigs[i] = tuple(sig)
    return sigs


def automorphism_group(table: ConfigTable) -> AutGroup:
    """Enumerate all lattice automorphisms of the table.

    Deterministic: elements are sorted lexicographically by image sequence.
    """
    n = table.n
    weights = table.pair_weights()

    def w(i: int, j: int) -> int:
        if i == j:
            return 0
        return weights.get((min(i, j), max(i, j)), 2)

    sigs = _line_signatures(table)
    classes: dict[tuple[int, ...], list[int]] = {}
    for i, sig in sigs.items():
        classes.setdefault(sig, []).append(i)
    # rarest signature first maximizes early pruning
    order = sorted(range(1, n + 1), key=lambda i: (len(classes[sigs[i]]), sigs[i], i))

    found: list[Permutation] = []
    image = {}
    used = set()

    def backtrack(k: int) -> None:
        if k == n:
            tau = Permutation(tuple(image[i] for i in range(1, n + 1)))
            if is_lattice_isomorphism(table, table, tau):
                found.append(tau)
            return
        i = order[k]
        for j in classes[sigs[i]]:
            if j in used:
                continue
            if any(w(i, prev) != w(j, image[prev]) for prev in order[:k]):
                continue
            image[i] = j
            used.add(j)
            backtrack(k + 1)
            used.discard(j)
            del image[i]

    backtrack(0)
    found.sort()
    return AutGroup(n=n, elements=tuple(found), generators=_minimal_generators(found))


def _closure(gens, n: int) -> frozenset:
    ident = Permutation.identity(n)
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                prod = g * h
                if prod not in elems:
                    elems.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return frozenset(elems)


def _minimal_generators(elements: list[Permutation]) -> tuple[Permutation, ...]:
    """Smallest generating subset found: exact search for small groups,
    greedy extension otherwise."""
    if not elements:
        return ()
    n = elements[0].degree
    everything = frozenset(elements)
    if len(elements) == 1:
        return ()
    non_identity = [g for g in sorted(elements) if not g.is_identity]
    if len(elements) <= 60:
        for size in (1, 2, 3):
            for combo in combinations(non_identity, size):
                if _closure(combo, n) == everything:
                    return combo
    gens: list[Permutation] = []
    generated = frozenset({Permutation.identity(n)})
    for g in non_identity:
        if g not in generated:
            gens.append(g)
            generated = _closure(gens, n)
            if generated == everything:
                break
    return tuple(gens)


def involutions(group: AutGroup) -> list[Permutation]:
    """All order-2 elements, in the group's deterministic element order."""
    return [g for g in group.elements if g.is_involution]
