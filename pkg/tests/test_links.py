import json
import random

import pytest

from braidlinks import braid as b
from braidlinks import halftwist as ht
from braidlinks import links as L
from braidlinks import monodromy as m
from braidlinks.braid import BraidWord
from braidlinks.laurent import LaurentPoly

from helpers import random_word, scramble


def W(text, n):
    return ht.evaluate(text, n)


def s_poly(terms):
    return LaurentPoly(terms, "s")


ONE = s_poly({0: 1})

# Frozen values in s = t^(1/2), taken from standard tables (right-handed
# trefoil t + t^3 - t^4, figure eight t^-2 - t^-1 + 1 - t + t^2, positive Hopf
# link -t^(1/2) - t^(5/2)).
FROZEN = {
    ("s1 s1 s1", 2): {2: 1, 6: 1, 8: -1},
    ("s1 s2^-1 s1 s2^-1", 3): {-4: 1, -2: -1, 0: 1, 2: -1, 4: 1},
    ("s1 s1", 2): {1: -1, 5: -1},
    ("", 3): {-2: 1, 0: 2, 2: 1},
}


@pytest.mark.parametrize("key", list(FROZEN))
def test_frozen_jones_values(key):
    assert L.jones(W(*key)) == s_poly(FROZEN[key])


def test_jones_of_unknot_diagrams():
    assert L.jones(BraidWord.identity(1)) == ONE
    assert L.jones(W("s1", 2)) == ONE
    assert L.jones(W("s1^-1 s2 s3^-1", 4)) == ONE
    assert L.kauffman_bracket(W("s1", 2)) == -LaurentPoly.monomial(3, var="A")


def test_mirror_flips_jones():
    w = W("s1^3", 2)
    assert L.jones(b.inverse(w)) == L.jones(w).mirror()


def _skein_ok(w: BraidWord, pos: int) -> bool:
    """t^-1 V(L+) - t V(L-) = (t^1/2 - t^-1/2) V(L0) at one crossing."""
    letters = list(w.letters)
    i, _ = letters[pos]
    plus = BraidWord(w.strands, tuple(letters[:pos] + [(i, 1)] + letters[pos + 1 :]))
    minus = BraidWord(w.strands, tuple(letters[:pos] + [(i, -1)] + letters[pos + 1 :]))
    zero = BraidWord(w.strands, tuple(letters[:pos] + letters[pos + 1 :]))
    lhs = L.jones(plus).shift(-2) - L.jones(minus).shift(2)
    rhs = L.jones(zero) * s_poly({1: 1, -1: -1})
    return lhs == rhs


def test_skein_relation_holds_on_random_words():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(2, 5)
        w = random_word(rng, n, rng.randint(1, 14))
        assert _skein_ok(w, rng.randrange(len(w.letters))), w


def test_t24_by_skein():
    # V(s1^4) from the values of s1^2 and s1^3
    hopf, trefoil = L.jones(W("s1^2", 2)), L.jones(W("s1^3", 2))
    expected = (hopf.shift(2) + trefoil * s_poly({1: 1, -1: -1})).shift(2)
    assert L.jones(W("s1^4", 2)) == expected


def test_bracket_matches_state_sum_on_sixteen_states():
    w = W("s1^4", 2)
    assert L.kauffman_bracket(w) == L.state_sum_bracket(w)


def test_bracket_matches_state_sum_on_random_words():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randint(1, 4)
        w = random_word(rng, n, rng.randint(0, 12))
        assert L.kauffman_bracket(w) == L.state_sum_bracket(w), w


def test_bracket_strand_limit():
    with pytest.raises(b.BraidError):
        L.kauffman_bracket(BraidWord.identity(L.MAX_BRACKET_STRANDS + 1))


# -- components and linking --------------------------------------------------------------


def test_components():
    assert L.closure_components(BraidWord.identity(3)) == [(1,), (2,), (3,)]
    assert L.closure_components(W("s2 s3^2 s2 s1 s3 s2 s3^2 s2", 4)) == [(1, 2), (3, 4)]
    assert len(L.closure_components(m.builtin("3pt-type2").product())) == 4


def test_linking_numbers():
    assert L.linking_matrix(W("s1^2", 2)) == [[0, 1], [1, 0]]
    assert L.linking_matrix(W("s1^4", 2))[0][1] == 2
    for mm in (3, 4):
        mat = L.linking_matrix(L.torus_braid(mm, mm))
        assert all(mat[a][c] == 1 for a in range(mm) for c in range(mm) if a != c)


def test_linking_matrix_of_type2_product():
    want = [[0, 1, 2, 2], [1, 0, 2, 2], [2, 2, 0, 4], [2, 2, 4, 0]]
    got = L.linking_matrix(m.builtin("3pt-type2").product())
    assert L.same_matrix_up_to_relabel(got, want)
    assert not L.same_matrix_up_to_relabel(got, [[0, 2, 2, 2], [2, 0, 2, 2], [2, 2, 0, 2], [2, 2, 2, 0]])


def test_extract_component():
    assert L.extract_component(BraidWord.identity(3), (2,)) == BraidWord.identity(1)
    w = W("s2 s3^2 s2 s1 s3 s2 s3^2 s2", 4)
    piece = L.extract_component(w, (3, 4))
    assert piece.strands == 2 and b.exponent_sum(piece) % 2 == 1
    for comp in L.closure_components(L.torus_braid(3, 3)):
        assert L.jones(L.extract_component(L.torus_braid(3, 3), comp)) == ONE
    with pytest.raises(b.BraidError):
        L.extract_component(w, (1, 3))


def test_torus_braids():
    assert L.torus_braid(2, 4) == W("s1^4", 2)
    assert len(L.closure_components(L.torus_braid(3, 3))) == 3
    for p in range(2, 6):
        assert L.jones(L.torus_braid(p, 1)) == ONE


# -- identification ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, n, name",
    [
        ("s1^2", 2, "L2a1"),
        ("s1^-2", 2, "L2a1"),
        ("s1^4", 2, "L4a1 / T(2,4)"),
        ("s1 s2^2 s1 s2^2", 3, "T(3,3)"),
        ("", 1, "unknot"),
        ("s1 s2", 3, "unknot"),
        ("", 2, "unlink(2)"),
        ("s1^3", 2, "unidentified"),
    ],
)
def test_identify(text, n, name):
    assert L.identify(L.summarize(W(text, n))) == name


# -- cables ------------------------------------------------------------------------------


def test_trivial_cable_is_a_relabelling():
    w = W("s1^3 s2^-1", 3)
    assert b.equal(L.cable(w, L.CableSpec(0, 1, 0)), w)


def test_cable_doubles_strands_and_linking():
    w = L.torus_braid(2, 4)
    c = L.cable(w, L.CableSpec(0, 2, 1))
    s = L.summarize(c)
    assert c.strands == 3 and s.component_count == 2
    assert s.unknotted_components
    assert sorted(s.pairwise_linking()) == [4]


def test_cable_of_l4a1_matches_two_point_closure():
    model = L.cable(L.torus_braid(2, 4), L.CableSpec(0, 2, 1))
    eq7 = m.builtin("2pt-A").product()
    assert L.summarize(model).same_link_invariants(L.summarize(eq7))


def test_cable_of_t33_matches_type1_closure():
    model = L.cable_all(L.torus_braid(3, 3), 2, 1)
    assert L.jones(model) == L.jones(m.builtin("3pt-type1-A").product())


def test_cable_framing_convention_matters():
    # t counts half twists; a whole extra twist gives a different link
    w = L.torus_braid(2, 4)
    one, three = L.cable(w, L.CableSpec(0, 2, 1)), L.cable(w, L.CableSpec(0, 2, 3))
    assert L.jones(one) != L.jones(three)


def test_cable_errors():
    with pytest.raises(b.BraidError):
        L.cable(W("s1^2", 2), L.CableSpec(5, 2, 0))
    with pytest.raises(ValueError):
        L.CableSpec(0, 0, 0)


def test_blackboard_framing():
    assert L.blackboard_framing(W("s1^3", 2), 0) == 3
    assert L.blackboard_framing(W("s1^2", 2), 0) == 0


# -- summary and json --------------------------------------------------------------------


def test_summary_json_round_trip():
    s = L.summarize(m.builtin("2pt-A").product())
    data = json.loads(json.dumps(s.to_json()))
    assert data["component_count"] == 2
    assert data["linking_matrix"] == [[0, 4], [4, 0]]
    assert L.jones_from_json(data["jones"]) == s.jones
    assert all(key.endswith("/2") for key in data["jones"])


def test_jones_json_rejects_other_denominators():
    with pytest.raises(ValueError):
        L.jones_from_json({"1/3": 1})


def test_invariance_under_moves():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(2, 4)
        w = random_word(rng, n, rng.randint(0, 12))
        base = L.summarize(w)
        conj = b.conjugate(w, random_word(rng, n, 4))
        stab = BraidWord(n + 1, w.letters + ((n, rng.choice((1, -1))),))
        for other in (scramble(w, rng), conj, b.rotate(w), stab):
            assert base.same_link_invariants(L.summarize(other))
