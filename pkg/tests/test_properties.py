"""Property-based checks of the algebraic laws the package relies on."""

from fractions import Fraction as F

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from arrsym.combinatorics import Permutation
from arrsym.fields import FieldSpec, QuadExt, quad_roots
from arrsym.geometry import (Arrangement, ProjLine, ProjPoint,
                             apply_coordinate_map, intersect, lattice_of,
                             relabel)
from arrsym.polys import Poly, RatFunc, poly_reduce

rationals = st.builds(F, st.integers(-30, 30), st.integers(1, 12))
nonzero_rationals = rationals.filter(lambda q: q != 0)
field_specs = st.sampled_from([FieldSpec.quadratic(d)
                               for d in (5, -1, -3, 2, -2, 7)])


@st.composite
def scalars(draw, field=None):
    spec = field if field is not None else draw(field_specs)
    return QuadExt(draw(rationals), draw(rationals), spec)


@st.composite
def scalar_pairs(draw):
    spec = draw(field_specs)
    return (QuadExt(draw(rationals), draw(rationals), spec),
            QuadExt(draw(rationals), draw(rationals), spec))


@given(scalar_pairs())
def test_galois_conjugation_is_a_ring_map(pair):
    x, y = pair
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert x.conjugate().conjugate() == x


@given(scalar_pairs())
def test_exact_addition_cancels(pair):
    x, y = pair
    assert (x + y) - y == x


@given(scalar_pairs())
def test_exact_division_cancels(pair):
    x, y = pair
    assume(not y.is_zero)
    assert (x * y) / y == x


@given(nonzero_rationals, rationals, rationals)
def test_quad_roots_vieta(a, b, c):
    field, plus, minus = quad_roots(a, b, c)
    assert plus + minus == QuadExt(F(-b) / a).with_field(field)
    assert plus * minus == QuadExt(F(c) / a).with_field(field)
    if not field.is_rational:
        assert plus.b > 0 > minus.b


@given(st.lists(rationals, min_size=1, max_size=5),
       st.lists(rationals, min_size=1, max_size=5))
def test_poly_ring_laws(xs, ys):
    p, q = Poly(xs), Poly(ys)
    assert p + q == q + p
    assert p * q == q * p
    assert (p - q) + q == p
    if not q.is_zero:
        quo, rem = divmod(p, q)
        assert quo * q + rem == p
        assert rem.is_zero or rem.degree < q.degree


@given(st.lists(rationals, min_size=1, max_size=4).filter(lambda c: any(c)),
       st.integers(-6, 6), st.integers(1, 5), st.integers(0, 3))
def test_poly_reduce_recomposes(coeffs, root_num, root_den, power):
    base = Poly(coeffs) * (Poly((F(-root_num, root_den), 1)) ** power)
    try:
        factors = poly_reduce(base)
    except Exception:
        assume(False)
    product = Poly.one()
    for factor, mult in factors:
        product = product * factor ** mult
    content = base.leading / product.leading
    assert Poly.constant(content) * product == base


@given(st.lists(rationals, min_size=1, max_size=4),
       st.lists(rationals, min_size=1, max_size=3).filter(lambda c: any(c)),
       rationals)
def test_ratfunc_eval_is_a_homomorphism(num, den, at):
    f = RatFunc(Poly(num), Poly(den))
    g = RatFunc(Poly(den), Poly.one())
    x = QuadExt(at)
    assume(not f.den.eval(x).is_zero)
    assert (f + g).eval(x) == f.eval(x) + g.eval(x)
    assert (f * g).eval(x) == f.eval(x) * g.eval(x)


@st.composite
def small_permutations(draw):
    n = draw(st.integers(2, 8))
    images = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(images)


@given(small_permutations())
def test_permutation_inverse_law(p):
    ident = Permutation.identity(p.degree)
    assert p * p.inverse() == ident
    assert p.inverse() * p == ident
    from arrsym.combinatorics import parse_cycles
    assert parse_cycles(p.cycle_string(), p.degree) == p


@st.composite
def small_arrangements(draw):
    spec = draw(st.sampled_from([FieldSpec.quadratic(5), FieldSpec.quadratic(-1)]))
    n = draw(st.integers(3, 5))
    lines = []
    seen = set()
    small = st.builds(F, st.integers(-4, 4), st.integers(1, 3))
    for _ in range(n):
        for _attempt in range(30):
            coords = (QuadExt(draw(small), draw(small), spec),
                      QuadExt(draw(small), draw(small), spec),
                      QuadExt(draw(small), draw(small), spec))
            if all(c.is_zero for c in coords):
                continue
            line = ProjLine(coords, spec)
            if line.coords not in seen:
                seen.add(line.coords)
                lines.append(line)
                break
        else:
            assume(False)
    return Arrangement("h", spec, lines)


@settings(max_examples=40)
@given(small_arrangements(), st.booleans(), st.booleans())
def test_coordinate_maps_are_involutions(arrangement, swap, conjugate):
    twice = apply_coordinate_map(
        apply_coordinate_map(arrangement, swap, conjugate), swap, conjugate)
    assert twice == arrangement


@settings(max_examples=40)
@given(small_arrangements(), st.data())
def test_relabel_action_and_equivariance(arrangement, data):
    images = data.draw(st.permutations(list(range(1, arrangement.n + 1))))
    sigma = Permutation(images)
    assert relabel(relabel(arrangement, sigma), sigma.inverse()) == arrangement
    _, before = lattice_of(arrangement)
    _, after = lattice_of(relabel(arrangement, sigma))
    assert frozenset(sigma.apply_set(s) for s in before.point_sets) \
        == after.point_sets


@settings(max_examples=40)
@given(small_arrangements())
def test_intersections_lie_on_both_lines(arrangement):
    for i in range(1, arrangement.n + 1):
        for j in range(i + 1, arrangement.n + 1):
            point = intersect(arrangement.line(i), arrangement.line(j))
            assert arrangement.line(i).contains(point)
            assert arrangement.line(j).contains(point)


@settings(max_examples=40)
@given(small_arrangements())
def test_conjugation_commutes_with_intersection(arrangement):
    conj = apply_coordinate_map(arrangement, swap=False, conjugate=True)
    for i in range(1, arrangement.n):
        direct = intersect(conj.line(i), conj.line(i + 1))
        original = intersect(arrangement.line(i), arrangement.line(i + 1))
        mapped = ProjPoint(tuple(c.conjugate() for c in original.coords),
                           arrangement.field)
        assert direct == mapped
