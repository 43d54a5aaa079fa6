"""Regression suite of the published braid and link claims.

Every check is a plain function returning ``(passed, detail)``. Checks are
registered under a dotted id whose first part names the result it exercises
(``lemma25.c``, ``prop16.destabilize``); ``--filter`` matches substrings of
that id.
"""

from __future__ import annotations

import dataclasses
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import braid as b
from . import halftwist as ht
from . import links as L
from . import monodromy as m

CheckFn = Callable[[], "tuple[bool, str]"]


@dataclasses.dataclass(frozen=True)
class Check:
    id: str
    claim: str
    fn: CheckFn


@dataclasses.dataclass(frozen=True)
class CheckResult:
    id: str
    claim: str
    passed: bool
    detail: str
    seconds: float

    def to_json(self) -> dict:
        return {"claim": self.claim, "passed": self.passed, "detail": self.detail}


REGISTRY: dict[str, Check] = {}


def check(check_id: str, claim: str):
    def deco(fn: CheckFn) -> CheckFn:
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id}")
        REGISTRY[check_id] = Check(check_id, claim, fn)
        return fn

    return deco


def W(text: str, n: int) -> b.BraidWord:
    return ht.evaluate(text, n)


def _eq(lhs: b.BraidWord, rhs: b.BraidWord) -> tuple[bool, str]:
    ok = b.equal(lhs, rhs)
    return ok, f"{b.format_word(b.free_reduce(lhs))}  {'==' if ok else '!='}  {b.format_word(rhs)}"


def _all(pairs) -> tuple[bool, str]:
    """Run (label, ok) pairs; report the first failure or the count."""
    total = 0
    for label, ok in pairs:
        total += 1
        if not ok:
            return False, f"fails at {label}"
    return True, f"{total} cases"


def _unknotted(w: b.BraidWord) -> bool:
    return all(L.jones(L.extract_component(w, c)) == 1 for c in L.closure_components(w))


def _offdiag(mat) -> set[int]:
    return {mat[a][c] for a in range(len(mat)) for c in range(len(mat)) if a != c}


# ---------------------------------------------------------------- notation


@check("property1.double-identity", "both expansions of Z_ij and Zb_ij agree, 1 <= i < j <= n <= 7")
def _property1():
    def cases():
        for n in range(2, 8):
            for j in range(2, n + 1):
                for i in range(1, j):
                    for bar in (False, True):
                        one = ht.compile_z(i, j, bar=bar, n=n, form=1)
                        two = ht.compile_z(i, j, bar=bar, n=n, form=2)
                        yield (n, i, j, bar), b.equal(one, two)
    return _all(cases())


@check("property2.chain-full-twist", "the chain on m strands is Δ, its square is Δ² = (σ1⋯σ_{m-1})^m, m <= 5")
def _property2():
    def cases():
        for mm in range(2, 6):
            chain = ht.compile_chain(1, mm - 1, n=mm)
            yield (mm, "Δ"), b.normal_form(chain) == b.NormalForm(mm, 1, ())
            yield (mm, "Δ²"), b.equal(b.power(chain, 2), m.full_twist(mm))
    return _all(cases())


@check("property2.multipoint", "Z²_{134} = σ1(σ3σ2σ3)²σ1⁻¹ on 4 strands")
def _multipoint():
    return _eq(W("Z[1,3,4]^2", 4), W("s1 (s3 s2 s3)^2 s1^-1", 4))


@check("generic.full-twist", "node factors of m generic lines multiply to Δ², m = 3, 4, 5")
def _generic():
    return _all(((mm,), b.equal(m.table_product(m.generic_line_factorization(mm)), m.full_twist(mm))) for mm in (3, 4, 5))


# ------------------------------------------------------------ arrangements


@check("example2.product", "triangle factors multiply to σ1σ2²σ1σ2²")
def _triangle():
    return _eq(m.builtin("triangle").product(), W("s1 s2^2 s1 s2^2", 3))


@check("example2.closure", "triangle closure is T(3,3): 3 unknotted components, pairwise lk 1")
def _triangle_closure():
    w = m.builtin("triangle").product()
    s = L.summarize(w)
    ok = s.component_count == 3 and _unknotted(w) and _offdiag(s.linking_matrix) == {1} and L.identify(s) == "T(3,3)"
    return ok, f"components={s.component_count} lk={s.linking_matrix} atlas={L.identify(s)}"


@check("table1.product", "triple point table multiplies to σ2σ3σ1σ2(σ1σ2σ3)²")
def _table1():
    return _eq(m.builtin("table1").product(), W("s2 s3 s1 s2 (s1 s2 s3)^2", 4))


@check("table1.closure", "4 unknotted components; 1 and 2 unlinked, other pairs lk 1")
def _table1_closure():
    w = m.builtin("table1").product()
    lk = L.linking_matrix(w)
    want = [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    ok = len(L.closure_components(w)) == 4 and _unknotted(w) and lk == want
    return ok, f"lk={lk}"


@check("table1.cable", "local closure has the Jones polynomial of the Hopf link with (2,0) and (2,2) cables")
def _table1_cable():
    w = m.builtin("table1").product()
    model = L.cable_many(L.torus_braid(2, 2), [L.CableSpec(0, 2, 0), L.CableSpec(1, 2, 2)])
    ok = L.jones(w) == L.jones(model) and L.same_matrix_up_to_relabel(L.linking_matrix(w), L.linking_matrix(model))
    return ok, L.format_jones(L.jones(w))


@check("prop16.cases-agree", "tangent and secant conic-line tables give the same braid σ2²σ1σ2²")
def _prop16_cases():
    a, bb = m.builtin("prop16-A").product(), m.builtin("prop16-B").product()
    ok = b.equal(a, bb) and b.equal(a, W("s2^2 s1 s2^2", 3))
    return ok, f"A={b.format_word(a)} B={b.format_word(bb)}"


@check("prop16.destabilize", "destabilizes to σ1⁴ on 2 strands, identified as L4a1 = T(2,4)")
def _prop16_destab():
    d = b.markov_destabilize(m.builtin("prop16-A").product())
    name = L.identify(L.summarize(d))
    ok = d.strands == 2 and b.equal(d, W("s1^4", 2)) and name == "L4a1 / T(2,4)"
    return ok, f"{d.strands} strands: {b.format_word(d)} ({name})"


@check("prop17.product", "six two-conic factors multiply to σ2σ3²σ1²σ2σ3σ1σ2²")
def _prop17():
    return _eq(m.builtin("prop17-B").product(), W("s2 s3^2 s1^2 s2 s3 s1 s2^2", 4))


@check("prop17.three-strand", "same Jones polynomial as σ2σ1³σ2σ1³σ2 on 3 strands, and destabilizes to 3 strands")
def _prop17_three():
    w = m.builtin("prop17-B").product()
    d = b.markov_destabilize(w)
    ok = L.jones(w) == L.jones(W("s2 s1^3 s2 s1^3 s2", 3)) and d.strands <= 3 and L.jones(d) == L.jones(w)
    return ok, f"destabilized to {d.strands} strands"


@check("prop17.cable", "matches L4a1 with one component (2,1)-cabled and the Hopf link with both (2,1)-cabled")
def _prop17_cable():
    w = m.builtin("prop17-B").product()
    one = L.cable(L.torus_braid(2, 4), L.CableSpec(0, 2, 1))
    both = L.cable_all(L.torus_braid(2, 2), 2, 1)
    ok = all(
        L.jones(w) == L.jones(x) and L.same_matrix_up_to_relabel(L.linking_matrix(w), L.linking_matrix(x))
        for x in (one, both)
    )
    return ok, L.format_jones(L.jones(w))


@check("prop17.tangent-case", "tangent two-conic table σ2²σ3σ1σ2² closes to L4a1")
def _prop17_tangent():
    w = m.builtin("prop17-A").product()
    ok = b.equal(w, W("s2^2 s3 s1 s2^2", 4)) and L.identify(L.summarize(w)) == "L4a1 / T(2,4)"
    return ok, b.format_word(w)


# --------------------------------------------------------------- lemma 25

LEMMA25 = {
    "a": ("Z[{i} {i}',{j}]^2", "Z[{i}',{j}]^2 Z[{i},{j}]^2"),
    "b": ("Z[{i}',{j} {j}']^2", "Z[{i}',{j}']^2 Z[{i}',{j}]^2"),
    "c": ("Z[{i}',{j} {j}']^-2", "Z[{i}',{j}]^-2 Z[{i}',{j}']^-2"),
    "d": ("Zb[{i}',{j} {j}']^-2", "Zb[{i}',{j}']^-2 Zb[{i}',{j}]^-2"),
    "e": ("Z[{i} {i}',{j}]^-2", "Z[{i},{j}]^-2 Z[{i}',{j}]^-2"),
    "f": ("Z[{i} {i}',{j} {j}']^2", "Z[{i}',{j} {j}']^2 Z[{i},{j} {j}']^2"),
    "g": ("Z[{i} {i}',{j} {j}']^-2", "Z[{i},{j} {j}']^-2 Z[{i}',{j} {j}']^-2"),
}


def lemma25_cases(max_strands: int = 8):
    """(i, j, n) with i < j and 2j <= n <= max_strands."""
    for n in range(4, max_strands + 1):
        for j in range(2, n // 2 + 1):
            for i in range(1, j):
                yield i, j, n


def _lemma25(key: str):
    lhs, rhs = LEMMA25[key]

    def run():
        return _all(
            ((i, j, n), b.equal(W(lhs.format(i=i, j=j), n), W(rhs.format(i=i, j=j), n)))
            for i, j, n in lemma25_cases()
        )

    return run


for _key, (_lhs, _rhs) in LEMMA25.items():
    check(f"lemma25.{_key}", f"{_lhs.format(i='i', j='j')} = {_rhs.format(i='i', j='j')}")(_lemma25(_key))


# ----------------------------------------------------- cusps and branches

PROP19 = {
    "left-cusps": (
        lambda i, n: b.product([ht.compile(e, n) for e in m.regenerate_tangency(i, i + 1, "left", n)], n),
        "(s{c}^-1 s{b}^3 s{c}) s{b}^3 (s{c} s{b}^3 s{c}^-1)",
    ),
    "left-branch": (
        lambda i, n: ht.compile(m.regenerated_branch(i, i + 1, "left", n), n),
        "(s{b} s{c}^2 s{b})^-1 s{a} (s{b} s{c}^2 s{b})",
    ),
    "right-cusps": (
        lambda i, n: b.product([ht.compile(e, n) for e in m.regenerate_tangency(i, i + 1, "right", n)], n),
        "s{b}^3 (s{b}^-1 s{a}^3 s{b}) (s{a}^2 s{b}^3 s{a}^-2)",
    ),
    "right-branch": (
        lambda i, n: ht.compile(m.regenerated_branch(i, i + 1, "right", n), n),
        "(s{b} s{a}^2 s{b})^-1 s{c} (s{b} s{a}^2 s{b})",
    ),
}


def _letters(i: int) -> dict:
    return {"a": 2 * i - 1, "b": 2 * i, "c": 2 * i + 1}


def _prop19(key: str):
    build, stated = PROP19[key]

    def run():
        def cases():
            for i in (1, 2):
                n = 2 * i + 2
                got = build(i, n)
                yield (key, i, "stated"), b.equal(got, W(stated.format(**_letters(i)), n))
                if key.endswith("cusps"):
                    side = "c" if key.startswith("left") else "a"
                    short = "s{b} s{x}^3 s{b} s{x}^3 s{b}".format(x=_letters(i)[side], **_letters(i))
                    yield (key, i, "simplified"), b.equal(got, W(short, n))
        return _all(cases())

    return run


for _key in PROP19:
    check(f"prop19.{_key}", f"regenerated {_key.replace('-', ' ')} compile to the stated σ-words, i = 1, 2")(_prop19(_key))


@check("prop19.conjugated-example", "(Z_12)^{Z²_24 Z²_23} reduces to σ2⁻¹σ3⁻²σ2⁻¹σ1σ2σ3²σ2")
def _conj_example():
    got = W("Z[1,2] ^ { Z[2,4]^2 Z[2,3]^2 }", 4)
    want = W("s2^-1 s3^-2 s2^-1 s1 s2 s3^2 s2", 4)
    red = b.free_reduce(got)
    return red == want, b.format_word(red)


# ---------------------------------------------------------------- rotation


@check("prop20.four-nodes", "Z²_{11',22'} expands to σ2σ1σ3σ2²σ1σ3σ2, invariant under rotation")
def _four_nodes():
    n = 4
    direct = ht.compile(m.regenerate_node(1, 2, "both", n), n)
    expanded = b.product([ht.compile(e, n) for e in m.expand_node_regeneration(1, 2, "both", n)], n)
    word = W("s2 s1 s3 s2^2 s1 s3 s2", n)
    ok = b.equal(direct, word) and b.equal(expanded, word) and b.equal(b.rotate(word), word)
    return ok, b.format_word(word)


@check("prop20.cusps", "rotating the left cusp triple gives the right cusp triple")
def _cusp_rotation():
    n = 4
    left = b.product([ht.compile(e, n) for e in m.regenerate_tangency(1, 2, "left", n)], n)
    right = b.product([ht.compile(e, n) for e in m.regenerate_tangency(1, 2, "right", n)], n)
    return _eq(b.rotate(left), right)


@check("prop20.closures", "rotated words close to links with identical summaries")
def _rotation_closure():
    words = [
        W("s2 s1 s3 s2^2 s1 s3 s2", 4),
        m.builtin("2pt-A").product(),
        m.builtin("3pt-type1-A").product(),
    ]

    def same(w):
        s, r = L.summarize(w), L.summarize(b.rotate(w))
        return s.same_link_invariants(r)

    return _all((b.format_word(w)[:30], same(w)) for w in words)


# ---------------------------------------------------------------- 2-points


@check("ex21.products", "2-point products are σ2σ3²σ2(σ1σ3)σ2σ3²σ2 and σ2σ1²σ2(σ1σ3)σ2σ1²σ2, related by rotation")
def _ex21_products():
    a, bb = m.builtin("2pt-A").product(), m.builtin("2pt-B").product()
    ok = (
        b.equal(a, W("s2 s3^2 s2 s1 s3 s2 s3^2 s2", 4))
        and b.equal(bb, W("s2 s1^2 s2 s1 s3 s2 s1^2 s2", 4))
        and b.equal(b.rotate(a), bb)
    )
    return ok, f"A={b.format_word(a)}"


@check("ex21.closure", "2 unknotted components with lk 4; both cases share a Jones polynomial")
def _ex21_closure():
    a, bb = m.builtin("2pt-A").product(), m.builtin("2pt-B").product()
    s = L.summarize(a)
    ok = s.component_count == 2 and _unknotted(a) and s.linking_matrix[0][1] == 4 and L.jones(a) == L.jones(bb)
    return ok, f"lk={s.linking_matrix} V={L.format_jones(s.jones)}"


@check("ex21.cable", "Jones polynomial of L4a1 with one component (2,1)-cabled")
def _ex21_cable():
    a = m.builtin("2pt-A").product()
    model = L.cable(L.torus_braid(2, 4), L.CableSpec(0, 2, 1))
    stab = W("s1 s2^2 s1 s2 s1 s2^2 s1", 3)
    ok = L.jones(a) == L.jones(model) == L.jones(stab)
    return ok, L.format_jones(L.jones(model))


# ---------------------------------------------------------------- 3-points


def _is_positive_27(w: b.BraidWord) -> bool:
    return len(w.letters) == 27 and all(s > 0 for _, s in w.letters)


@check("ex22.words", "type-1 items for cases A and B multiply to the two stated positive words of length 27")
def _ex22_words():
    def cases():
        for case, text in (("A", m.TYPE1_A_WORD), ("B", m.TYPE1_B_WORD)):
            stated = W(text, 6)
            prod = m.builtin(f"3pt-type1-{case}").product()
            yield case, _is_positive_27(stated) and b.equal(prod, stated) and b.exponent_sum(prod) == 27
    return _all(cases())


@check("ex22.rotation", "case C rotates to case A")
def _ex22_rotation():
    return _eq(b.rotate(m.builtin("3pt-type1-C").product()), m.builtin("3pt-type1-A").product())


@check("ex22.closure", "3 unknotted components, every pair lk 4, cases A and B share a Jones polynomial")
def _ex22_closure():
    a, bb = m.builtin("3pt-type1-A").product(), m.builtin("3pt-type1-B").product()
    ok = True
    for w in (a, bb):
        s = L.summarize(w)
        ok &= s.component_count == 3 and _unknotted(w) and _offdiag(s.linking_matrix) == {4}
    ok &= L.jones(a) == L.jones(bb)
    return bool(ok), L.format_jones(L.jones(a))


@check("ex22.cable", "Jones polynomial of T(3,3) with every component (2,1)-cabled")
def _ex22_cable():
    a = m.builtin("3pt-type1-A").product()
    model = L.cable_all(L.torus_braid(3, 3), 2, 1)
    ok = L.jones(a) == L.jones(model) and L.same_matrix_up_to_relabel(L.linking_matrix(a), L.linking_matrix(model))
    return ok, f"model on {model.strands} strands"


TYPE2_MATRIX = [[0, 1, 2, 2], [1, 0, 2, 2], [2, 2, 0, 4], [2, 2, 4, 0]]


@check("ex23.degree", "five type-2 items have total exponent 28 and 4 closure components")
def _ex23_degree():
    p = m.builtin("3pt-type2").product()
    ok = b.exponent_sum(p) == 28 and len(L.closure_components(p)) == 4
    return ok, f"exponent sum {b.exponent_sum(p)}"


@check("ex23.positive-word", "the stated length-28 positive word is conjugate to the item product")
def _ex23_word():
    p = m.builtin("3pt-type2").product()
    stated = W(m.TYPE2_WORD, 6)
    positive = len(stated.letters) == 28 and all(s > 0 for _, s in stated.letters)
    conj = b.equal(b.conjugate(p, m.type2_conjugator()), stated)
    literal = b.equal(p, stated)
    return positive and conj, f"conjugate: {conj}; literally equal: {literal}"


@check("ex23.closure", "4 unknotted components with the stated linking matrix")
def _ex23_closure():
    p = m.builtin("3pt-type2").product()
    lk = L.linking_matrix(p)
    ok = _unknotted(p) and L.same_matrix_up_to_relabel(lk, TYPE2_MATRIX)
    return ok, f"lk={lk}"


@check("ex23.cable", "Jones polynomial of T(3,3) with cables (2,1), (2,1), (2,2)")
def _ex23_cable():
    p = m.builtin("3pt-type2").product()
    model = L.cable_many(L.torus_braid(3, 3), [L.CableSpec(0, 2, 1), L.CableSpec(1, 2, 1), L.CableSpec(2, 2, 2)])
    return L.jones(p) == L.jones(model), L.format_jones(L.jones(p))


@check("cor24.distinct", "type-1 and type-2 3-points give different links (3 vs 4 components)")
def _cor24():
    one = L.summarize(m.builtin("3pt-type1-A").product())
    two = L.summarize(m.builtin("3pt-type2").product())
    ok = one.component_count == 3 and two.component_count == 4 and not one.same_link_invariants(two)
    return ok, f"{one.component_count} vs {two.component_count}"


# ----------------------------------------------------------------- running


def select(filter_text: str | None = None) -> list[Check]:
    return [c for c in REGISTRY.values() if not filter_text or filter_text in c.id]


def run_check(check_id: str) -> CheckResult:
    c = REGISTRY[check_id]
    start = time.perf_counter()
    try:
        passed, detail = c.fn()
    except Exception as exc:  # a crashing check is a failing check
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(c.id, c.claim, bool(passed), detail, time.perf_counter() - start)


def run(filter_text: str | None = None, jobs: int = 1) -> list[CheckResult]:
    """Run the selected checks; results come back sorted by id whatever `jobs` is."""
    ids = [c.id for c in select(filter_text)]
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_check, ids))
    else:
        results = [run_check(i) for i in ids]
    return sorted(results, key=lambda r: r.id)
