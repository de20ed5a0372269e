from itertools import permutations
from math import comb

import pytest

from arrsym import corpus
from arrsym.combinatorics import (ConfigTable, Permutation, automorphism_group,
                                  involutions, is_lattice_isomorphism,
                                  parse_config_table, parse_cycles)
from arrsym.errors import ParseError, ValidationError

TABLE1_TEXT = """\
# multiple points of the first ten-line case
arrangement {1}
lines 10
point q1 : 1 2 3 10
point q2 : 4 5 6 10
point e1 : 7 8 10
point e2 : 3 4 9
point e3 : 5 7 9
point e4 : 2 6 7
point e5 : 2 8 9
point e6 : 3 6 8
point e7 : 1 5 8
point e8 : 1 4 7
"""


def table1():
    return parse_config_table(TABLE1_TEXT)


def brute_force_automorphisms(table):
    """Definitional oracle: test every permutation of the labels."""
    return [Permutation(images)
            for images in permutations(range(1, table.n + 1))
            if is_lattice_isomorphism(table, table, Permutation(images))]


def test_parse_table1():
    t = table1()
    assert t.n == 10
    assert t.point_sets == frozenset(map(frozenset, [
        {1, 2, 3, 10}, {4, 5, 6, 10}, {7, 8, 10}, {3, 4, 9}, {5, 7, 9},
        {2, 6, 7}, {2, 8, 9}, {3, 6, 8}, {1, 5, 8}, {1, 4, 7}]))
    assert t.multiplicity_census() == {4: 2, 3: 8}
    assert t.double_count() == 9


def test_parse_generic_table():
    t = parse_config_table("arrangement G\nlines 3\n")
    assert t.n == 3 and not t.points


@pytest.mark.parametrize("text", [
    "arrangement x\nlines 4\npoint a : 1 2\n",                      # < 3 lines
    "arrangement x\nlines 4\npoint a : 1 2 3\npoint b : 1 2 4\n",   # repeated pair
    "arrangement x\nlines 4\npoint a : 1 2 9\n",                    # out of range
    "arrangement x\nlines 4\npoint a : 1 2 3\npoint a : 1 4 2\n",   # reused pair via label
    "arrangement x\nlines 4\npoint a : 1 1 2\n",                    # repeated label
    "lines 4\n",                                                    # missing header
    "arrangement x\nlines 4\nbogus directive\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_config_table(text)


def test_serialize_round_trip():
    t = table1()
    assert parse_config_table(t.serialize()).serialize() == t.serialize()


def test_is_lattice_isomorphism_examples():
    t = table1()
    sigma = parse_cycles("(1 6)(2 5)(3 4)(7 8)", 10)
    assert is_lattice_isomorphism(t, t, sigma)
    # (1 2) sends {1,5,8} to {2,5,8}, which is not a point
    assert not is_lattice_isomorphism(t, t, parse_cycles("(1 2)", 10))
    assert is_lattice_isomorphism(t, t, Permutation.identity(10))


def test_is_lattice_isomorphism_size_mismatch():
    with pytest.raises(ValidationError):
        is_lattice_isomorphism(table1(), ConfigTable("s", 4, []),
                               Permutation.identity(4))


def test_automorphism_group_table1():
    group = automorphism_group(table1())
    assert group.order == 2
    assert parse_cycles("(1 6)(2 5)(3 4)(7 8)", 10) in group.elements
    assert group.structure_name() == "Z2"
    assert len(group.generators) == 1


def test_automorphism_group_all_doubles():
    group = automorphism_group(ConfigTable("generic", 4, []))
    assert group.order == 24
    assert group.structure_name() == "S4"


@pytest.mark.parametrize("name,order,label", [
    ("{7}", 24, "S4"),
    ("maclane", 48, "GL(2,F3)"),
    ("falk-sturmfels", 4, "Z4"),
    ("nazir-yoshinaga", 6, "S3"),
])
def test_structure_names(name, order, label):
    group = automorphism_group(corpus.get_case(name).config)
    assert group.order == order
    assert group.structure_name() == label


def test_falk_sturmfels_four_cycle():
    group = automorphism_group(corpus.get_case("falk-sturmfels").config)
    four_cycle = parse_cycles("(1 3 2 4)(5 7 6 8)", 9)
    assert four_cycle in group.elements
    assert involutions(group) == [four_cycle * four_cycle]


SMALL_TABLES = [
    (4, []),
    (4, [{1, 2, 3}]),
    (5, [{1, 2, 3}, {1, 4, 5}]),
    (6, [{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}]),   # Pasch-like
    (6, [{1, 2, 3, 4}]),
    (6, [{1, 2, 3}, {3, 4, 5}, {5, 6, 1}]),
    (7, [{1, 2, 3}, {1, 4, 5}, {2, 4, 7}, {3, 4, 6}]),
]


@pytest.mark.parametrize("n,points", SMALL_TABLES)
def test_backtracker_matches_brute_force(n, points):
    table = ConfigTable("small", n, [(f"p{k}", s) for k, s in enumerate(points, 1)])
    expected = sorted(brute_force_automorphisms(table))
    got = list(automorphism_group(table).elements)
    assert got == expected


@pytest.mark.parametrize("n,points", SMALL_TABLES)
def test_group_axioms_by_enumeration(n, points):
    table = ConfigTable("small", n, [(f"p{k}", s) for k, s in enumerate(points, 1)])
    group = automorphism_group(table)
    elements = set(group.elements)
    assert Permutation.identity(n) in elements
    for g in elements:
        assert g.inverse() in elements
        for h in elements:
            assert g * h in elements


def test_generators_generate(realized):
    for name in corpus.list_cases():
        group = automorphism_group(corpus.get_case(name).config)
        generated = {Permutation.identity(group.n)}
        frontier = list(generated)
        while frontier:
            nxt = []
            for g in frontier:
                for h in group.generators:
                    p = g * h
                    if p not in generated:
                        generated.add(p)
                        nxt.append(p)
            frontier = nxt
        assert generated == set(group.elements), name


def test_signature_preservation():
    for name in ("{1}", "{7}", "maclane"):
        table = corpus.get_case(name).config
        weights = table.pair_weights()

        def signature(i):
            return sorted(weights.get((min(i, j), max(i, j)), 2)
                          for j in range(1, table.n + 1) if j != i)

        for tau in automorphism_group(table).elements:
            for i in range(1, table.n + 1):
                assert signature(i) == signature(tau(i))


def test_isomorphism_composition():
    t = table1()
    group = automorphism_group(t)
    for tau in group.elements:
        for rho in group.elements:
            assert is_lattice_isomorphism(t, t, rho * tau)


def test_pair_budget():
    for name in corpus.list_cases():
        table = corpus.get_case(name).config
        assert sum(comb(len(s), 2) for _, s in table.points) <= comb(table.n, 2)


def test_involutions_ordering_and_triviality():
    group = automorphism_group(table1())
    assert [g.cycle_string() for g in involutions(group)] == ["(1 6)(2 5)(3 4)(7 8)"]
    trivial = automorphism_group(ConfigTable("t", 1, []))
    assert involutions(trivial) == []


def test_cycle_notation_round_trip():
    sigma = parse_cycles("(1 6)(2 5)(3 4)(7 8)", 10)
    assert parse_cycles(sigma.cycle_string(), 10) == sigma
    assert parse_cycles("id", 5) == Permutation.identity(5)
    assert Permutation.identity(5).cycle_string() == "id"
    with pytest.raises(ParseError):
        parse_cycles("(1 2)(2 3)", 4)
    with pytest.raises(ParseError):
        parse_cycles("(1 99)", 4)
    with pytest.raises(ParseError):
        parse_cycles("1 2 3", 4)


def test_permutation_laws():
    p = parse_cycles("(1 2 3)", 5)
    q = parse_cycles("(3 4)", 5)
    assert (p * q).inverse() == q.inverse() * p.inverse()
    assert p.order() == 3 and q.order() == 2
    assert (p * p * p).is_identity
    assert q.is_involution and not p.is_involution
