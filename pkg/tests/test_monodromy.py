import json
import math

import pytest

from braidlinks import braid as b
from braidlinks import halftwist as ht
from braidlinks import monodromy as m
from braidlinks.braid import BraidWord
from braidlinks.monodromy import ConfigError, DegenerationDiagram, SingularityType, UnsupportedFeature


def W(text, n):
    return ht.evaluate(text, n)


def test_epsilon_values():
    assert [t.epsilon for t in SingularityType] == [1, 2, 2, 3, 4, 2]


@pytest.mark.parametrize("mm", [2, 3, 4, 5, 6])
def test_generic_lines_give_full_twist(mm):
    fac = m.generic_line_factorization(mm)
    assert len(fac) == math.comb(mm, 2)
    prod = m.table_product(fac)
    assert b.exponent_sum(prod) == mm * (mm - 1)
    assert b.equal(prod, m.full_twist(mm))


def test_generic_small_cases():
    assert m.generic_line_factorization(2).words() == [W("s1^2", 2)]
    assert m.full_twist(2) == W("s1^2", 2)
    with pytest.raises(ValueError):
        m.generic_line_factorization(1)


def test_empty_factorization_is_identity():
    assert m.table_product(m.Factorization(3, ())) == BraidWord.identity(3)


def test_factorization_rejects_mixed_strands():
    with pytest.raises(b.BraidError):
        m.Factorization(3, (("a", W("s1", 3)), ("b", W("s1", 2))))


GOLDEN = {
    "triangle": ("s1 s2^2 s1 s2^2", 3),
    "table1": ("s2 s3 s1 s2 (s1 s2 s3)^2", 4),
    "prop16-A": ("s2^2 s1 s2^2", 3),
    "prop16-B": ("s2 s1^2 s2 s1", 3),
    "prop17-A": ("s2^2 s3 s1 s2^2", 4),
    "prop17-B": ("s2 s3^2 s1^2 s2 s3 s1 s2^2", 4),
    "2pt-A": ("s2 s3^2 s2 s1 s3 s2 s3^2 s2", 4),
    "2pt-B": ("s2 s1^2 s2 s1 s3 s2 s1^2 s2", 4),
    "3pt-type1-A": (m.TYPE1_A_WORD, 6),
    "3pt-type1-B": (m.TYPE1_B_WORD, 6),
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_builtin_products_match_stated_words(name):
    text, n = GOLDEN[name]
    assert b.equal(m.builtin(name).product(), W(text, n))


@pytest.mark.parametrize("name", sorted(m.BUILTIN))
def test_exponent_accounting(name):
    config = m.builtin(name)
    fac = config.factorization()
    for sing, (_, word) in zip(config.local_singularities(), fac.factors):
        assert b.exponent_sum(word) == sing.degree
    assert b.exponent_sum(config.product()) == config.expected_degree()


def test_node_at_infinity_is_left_out_of_local_product():
    config = m.builtin("table1")
    assert len(config.factorization()) == 3
    assert len(config.factorization(include_infinity=True)) == 4
    assert config.expected_degree() == 10


def test_type2_product_is_conjugate_to_stated_word():
    p = m.builtin("3pt-type2").product()
    stated = W(m.TYPE2_WORD, 6)
    assert b.exponent_sum(p) == 28
    assert len(stated.letters) == 28 and all(s > 0 for _, s in stated.letters)
    # the five listed factors do not multiply to the stated word on the nose
    assert not b.equal(p, stated)
    assert b.equal(b.conjugate(p, m.type2_conjugator()), stated)
    pos = b.positive_conjugate(p)
    assert pos is not None and len(pos.letters) == 28


def test_type2_second_factor():
    fac = m.three_point_type2_factorization()
    assert b.equal(fac.factors[1][1], W("s4^-1 s3^-2 s4^-1 s5 s4 s3^2 s4", 6))


def test_type2_permutation_has_four_cycles():
    p = m.builtin("3pt-type2").product()
    assert len(b.permutation_image(p).cycles()) == 4


def test_type1_rotation():
    a = m.builtin("3pt-type1-A").product()
    c = m.builtin("3pt-type1-C").product()
    assert b.equal(b.rotate(c), a)


def test_two_point_rotation():
    assert b.equal(b.rotate(m.builtin("2pt-A").product()), m.builtin("2pt-B").product())


def test_unknown_builtin():
    with pytest.raises(KeyError):
        m.builtin("nope")


# -- regeneration rules ------------------------------------------------------------------


def test_four_node_regeneration():
    n = 4
    direct = ht.compile(m.regenerate_node(1, 2, "both", n), n)
    expanded = b.product([ht.compile(e, n) for e in m.expand_node_regeneration(1, 2, "both", n)], n)
    want = W("s2 s1 s3 s2^2 s1 s3 s2", n)
    assert b.equal(direct, want) and b.equal(expanded, want)
    assert b.permutation_image(direct).is_identity()


@pytest.mark.parametrize("mode", ["first", "second", "both"])
def test_node_regeneration_modes_agree_with_expansion(mode):
    for i, j, n in [(1, 2, 4), (1, 3, 6), (2, 3, 6), (1, 2, 6)]:
        direct = ht.compile(m.regenerate_node(i, j, mode, n), n)
        expanded = b.product([ht.compile(e, n) for e in m.expand_node_regeneration(i, j, mode, n)], n)
        assert b.equal(direct, expanded)


@pytest.mark.parametrize("i", [1, 2])
def test_tangency_becomes_three_cusps(i):
    n = 2 * i + 2
    a, bb, c = 2 * i - 1, 2 * i, 2 * i + 1
    left = b.product([ht.compile(e, n) for e in m.regenerate_tangency(i, i + 1, "left", n)], n)
    right = b.product([ht.compile(e, n) for e in m.regenerate_tangency(i, i + 1, "right", n)], n)
    assert b.equal(left, W(f"s{bb} s{c}^3 s{bb} s{c}^3 s{bb}", n))
    assert b.equal(right, W(f"s{bb} s{a}^3 s{bb} s{a}^3 s{bb}", n))
    assert b.exponent_sum(left) == b.exponent_sum(right) == 9


def test_regenerated_branches():
    n = 4
    left = ht.compile(m.regenerated_branch(1, 2, "left", n), n)
    assert b.equal(left, W("(s2 s3^2 s2)^-1 s1 (s2 s3^2 s2)", n))
    right = ht.compile(m.regenerated_branch(1, 2, "right", n), n)
    assert b.equal(right, W("(s2 s1^2 s2)^-1 s3 (s2 s1^2 s2)", n))


def test_regeneration_range_errors():
    with pytest.raises(b.BraidError):
        m.regenerate_node(1, 3, "both", 5)
    with pytest.raises(b.BraidError):
        m.regenerate_tangency(2, 1, "left", 6)
    with pytest.raises(ValueError):
        m.regenerate_node(1, 2, "sideways", 4)


# -- diagrams ----------------------------------------------------------------------------


def test_vertex_order_on_two_square_strip():
    d = m.surface_2pt_diagram()
    order = [d.name(v) for v in m.lex_order_vertices(d)]
    assert order == ["v1", "v2", "v3", "v4", "v5", "v6"]


def test_line_order_on_two_square_strip():
    d = m.surface_2pt_diagram()
    # e1 = v1v5, e2 = v2v5, e3 = v2v6
    assert m.lex_order_lines(d) == [0, 1, 2]


def test_vertex_order_small():
    assert m.lex_order_vertices(DegenerationDiagram(((3, 4),), ())) == [0]
    grid = DegenerationDiagram(((1, 1), (0, 1), (1, 0), (0, 0)), ())
    assert [grid.vertices[v] for v in m.lex_order_vertices(grid)] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    with pytest.raises(b.BraidError, match="duplicate"):
        m.lex_order_vertices(DegenerationDiagram(((0, 0), (0, 0)), ()))


def test_line_order_tie_break():
    d = DegenerationDiagram(((1, 0), (0, 0), (0, 1)), ((0, 2, "diag"), (1, 2, "vert")))
    assert m.lex_order_lines(d) == [1, 0]
    assert m.lex_order_lines(DegenerationDiagram(((0, 0), (1, 0)), ((0, 1, "horiz"),))) == [0]


def test_two_points_of_the_strip():
    d = m.surface_2pt_diagram()
    twos = [d.name(k.vertex) for k in m.classify_k_points(d) if k.k == 2]
    assert twos == ["v2", "v5"]


def test_pillow_corners_are_type_one():
    d = m.pillow_diagram()
    corners = [d.names.index(x) for x in ("v1", "v3", "v6", "v8")]
    found = m.classify_k_points(d, corners)
    assert [(k.k, k.kind) for k in found] == [(3, "I")] * 4


def test_pillow_inner_vertices_are_unsupported():
    d = m.pillow_diagram()
    with pytest.raises(UnsupportedFeature, match="6-point"):
        m.classify_k_points(d, [d.names.index("v9")])
    with pytest.raises(UnsupportedFeature):
        m.classify_k_points(d)


def test_pillow_cases_per_order():
    d = m.pillow_diagram()
    corners = [d.names.index(x) for x in ("v1", "v3", "v6", "v8")]
    orders = m.pillow_orders()
    assert [m.type1_case(d, v, orders["boundary"]) for v in corners] == ["A"] * 4
    assert [m.type1_case(d, v, orders["clockwise"]) for v in corners] == ["A"] * 4
    assert [m.type1_case(d, v, orders["lexicographic"]) for v in corners] == ["A", "C", "A", "A"]


def test_toric_diagram_vertex_two_is_type_two():
    d = m.toric_diagram()
    (kp,) = m.classify_k_points(d, [d.names.index("v2")])
    assert (kp.k, kp.kind) == (3, "II")
    with pytest.raises(UnsupportedFeature):
        m.classify_k_points(d, [d.names.index("v5")])


def test_three_point_shapes():
    kinds = {name: [k.kind for k in m.classify_k_points(s) if k.k == 3] for name, s in m.three_point_shapes().items()}
    assert kinds == {"I": ["I"], "II": ["II"]}


def test_bad_three_points():
    no_diag = DegenerationDiagram(((0, 0), (1, 0), (0, 1), (-1, 0)), ((0, 1, "horiz"), (0, 2, "vert"), (0, 3, "horiz")))
    with pytest.raises(b.BraidError, match="diagonals"):
        m.classify_k_points(no_diag, [0])
    all_diag = DegenerationDiagram(((0, 0), (1, 1), (-1, -1), (1, -1)), ((0, 1, "diag"), (0, 2, "diag"), (0, 3, "diag")))
    with pytest.raises(b.BraidError, match="diagonals"):
        m.classify_k_points(all_diag, [0])


def test_strip_of_length_four():
    d = m.cp1xcp1_diagram(4)
    kinds = [(k.k, k.kind) for k in m.classify_k_points(d) if k.k == 3]
    assert kinds == [(3, "II")] * 3


def test_diagram_validation_and_json():
    with pytest.raises(b.BraidError):
        DegenerationDiagram(((0, 0),), ((0, 1, "diag"),))
    with pytest.raises(b.BraidError):
        DegenerationDiagram(((0, 0), (1, 1)), ((0, 1, "slanted"),))
    d = m.pillow_diagram()
    again = DegenerationDiagram.from_json(json.loads(json.dumps(d.to_json())))
    assert again == d


# -- configuration files -----------------------------------------------------------------


def _conic_line_json():
    return {
        "name": "conic and tangent line",
        "strands": 3,
        "components": [{"kind": "conic", "label": "C"}, {"kind": "line", "label": "L"}],
        "singularities": [
            {"type": "tangency", "incident": ["C", "L"], "expr": "Z[2,3]^4"},
            {"type": "branch", "incident": ["C"], "expr": "Z[1,2] ^ { Z[2,3]^2 }"},
        ],
    }


def test_configuration_from_json():
    config = m.configuration_from_json(_conic_line_json())
    assert config.component_count == 2
    assert b.equal(config.product(), W("s2^2 s1 s2^2", 3))
    assert config.expected_degree() == 5


def test_builtin_round_trips_through_json():
    for name in ("table1", "2pt-A", "3pt-type2"):
        config = m.builtin(name)
        again = m.configuration_from_json(json.loads(json.dumps(config.to_json())))
        assert b.equal(again.product(), config.product())
        assert again.expected_degree() == config.expected_degree()


@pytest.mark.parametrize(
    "mutate, path",
    [
        (lambda d: d.pop("strands"), "$"),
        (lambda d: d["singularities"][1].__setitem__("type", "swallowtail"), "$.singularities[1].type"),
        (lambda d: d["components"][0].__setitem__("kind", "cubic"), "$.components[0].kind"),
        (lambda d: d["singularities"][0].__setitem__("expr", "Z[2,"), "$.singularities[0].expr"),
    ],
)
def test_schema_errors_name_the_field(mutate, path):
    data = _conic_line_json()
    mutate(data)
    with pytest.raises(ConfigError) as info:
        m.configuration_from_json(data)
    assert info.value.path == path


def test_unknown_component_label():
    data = _conic_line_json()
    data["singularities"][0]["incident"] = ["C", "M"]
    with pytest.raises(b.BraidError, match="unknown components"):
        m.configuration_from_json(data)


def test_five_point_is_unsupported():
    data = _conic_line_json()
    data["singularities"].append({"type": "multipoint", "incident": ["C"], "expr": "Z[1,2]^2", "multiplicity": 5})
    with pytest.raises(UnsupportedFeature):
        m.configuration_from_json(data)


def test_triple_point_degree():
    row = m.Singularity(SingularityType.MULTI_POINT, ("a", "b", "c"), ht.parse("Z[1,2,3]^2"), multiplicity=3)
    assert row.degree == 6
    assert b.exponent_sum(ht.compile(row.expr, 3)) == 6
