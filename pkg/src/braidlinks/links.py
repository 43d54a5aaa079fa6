"""
Links obtained by closing braids, and the invariants used to tell them apart.

The Kauffman bracket is computed by sweeping the word through the
Temperley–Lieb algebra: σ_i ↦ A·1 + A⁻¹·e_i and σ_i⁻¹ ↦ A⁻¹·1 + A·e_i, with
loop value δ = -A² - A⁻². The closure is evaluated with the Markov trace,
normalised so the bracket of a single circle is 1. The Jones polynomial is

    V(t) = (-A³)^(-writhe) ⟨closure⟩,   t = A⁻⁴,

stored as an integer Laurent polynomial in s = t^{1/2}.
With this convention the positive Hopf link σ1² has V = -t^{1/2} - t^{5/2}.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .braid import BraidError, BraidWord, Letter, exponent_sum, permutation_image
from .laurent import LaurentPoly

MAX_BRACKET_STRANDS = 10

A = LaurentPoly.monomial(1, var="A")
DELTA_LOOP = LaurentPoly({2: -1, -2: -1}, var="A")

Component = Union[int, Sequence[int]]


# --------------------------------------------------------------------------
# components and linking


def closure_components(w: BraidWord) -> list[tuple[int, ...]]:
    """Strand positions grouped by the link component they close up into."""
    return permutation_image(w).cycles()


def _resolve_component(w: BraidWord, component: Component) -> tuple[int, ...]:
    comps = closure_components(w)
    if isinstance(component, int):
        if not 0 <= component < len(comps):
            raise BraidError(f"component index {component} out of range ({len(comps)} components)")
        return comps[component]
    wanted = tuple(sorted(component))
    for c in comps:
        if tuple(sorted(c)) == wanted:
            return c
    raise BraidError(f"{tuple(component)} is not a component of the closure (components: {comps})")


def _crossing_tally(w: BraidWord) -> tuple[list[list[int]], list[int]]:
    comps = closure_components(w)
    owner = {}
    for k, c in enumerate(comps):
        for strand in c:
            owner[strand - 1] = k
    at = [owner[p] for p in range(w.strands)]
    m = len(comps)
    between = [[0] * m for _ in range(m)]
    self_writhe = [0] * m
    for i, s in w.letters:
        a, b = at[i - 1], at[i]
        if a == b:
            self_writhe[a] += s
        else:
            between[a][b] += s
            between[b][a] += s
        at[i - 1], at[i] = b, a
    return between, self_writhe


def linking_matrix(w: BraidWord) -> list[list[int]]:
    """Symmetric matrix of pairwise linking numbers, ordered as closure_components."""
    between, _ = _crossing_tally(w)
    out = []
    for row in between:
        for x in row:
            if x % 2:
                raise AssertionError("odd crossing count between closed components")
        out.append([x // 2 for x in row])
    return out


def self_writhes(w: BraidWord) -> list[int]:
    """Signed count of crossings of each component with itself."""
    return _crossing_tally(w)[1]


def blackboard_framing(w: BraidWord, component: Component) -> int:
    """Framing of a component induced by the closed braid diagram (its self-writhe)."""
    comp = _resolve_component(w, component)
    return self_writhes(w)[closure_components(w).index(comp)]


def extract_component(w: BraidWord, component: Component) -> BraidWord:
    """Braid on the strands of one component only.

    Strands outside the component are deleted; crossings involving a deleted
    strand disappear and the remaining positions are renumbered in order.
    """
    comp = set(_resolve_component(w, component))
    keep = [p + 1 in comp for p in range(w.strands)]
    letters: list[Letter] = []
    for i, s in w.letters:
        if keep[i - 1] and keep[i]:
            letters.append((sum(keep[: i - 1]) + 1, s))
        keep[i - 1], keep[i] = keep[i], keep[i - 1]
    return BraidWord(len(comp), tuple(letters))


def same_matrix_up_to_relabel(m1: Sequence[Sequence[int]], m2: Sequence[Sequence[int]]) -> bool:
    """True if the matrices agree after simultaneously permuting rows and columns."""
    k = len(m1)
    if k != len(m2):
        return False
    return any(
        all(m1[a][b] == m2[perm[a]][perm[b]] for a in range(k) for b in range(k))
        for perm in itertools.permutations(range(k))
    )


# --------------------------------------------------------------------------
# Temperley-Lieb bracket


def _identity_matching(n: int) -> tuple[int, ...]:
    return tuple(list(range(n, 2 * n)) + list(range(n)))


def _apply_e(match: tuple[int, ...], n: int, i: int) -> tuple[tuple[int, ...], int]:
    """Stack e_i under the diagram; returns the new diagram and the loops closed off."""
    x, y = n + i - 1, n + i
    if match[x] == y:
        return match, 1
    m = list(match)
    a, b = m[x], m[y]
    m[a], m[b] = b, a
    m[x], m[y] = y, x
    return tuple(m), 0


def _closure_loops(match: tuple[int, ...], n: int) -> int:
    seen = [False] * (2 * n)
    loops = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        loops += 1
        p = start
        while not seen[p]:
            seen[p] = True
            q = match[p]
            seen[q] = True
            p = q + n if q < n else q - n  # closure arc: top k <-> bottom k
    return loops


def kauffman_bracket(w: BraidWord) -> LaurentPoly:
    """Kauffman bracket of the closure, as a Laurent polynomial in A."""
    n = w.strands
    if n > MAX_BRACKET_STRANDS:
        raise BraidError(f"bracket limited to {MAX_BRACKET_STRANDS} strands, got {n}")
    state: dict[tuple[int, ...], LaurentPoly] = {_identity_matching(n): LaurentPoly.constant(1, "A")}
    ainv = A ** -1
    for i, s in w.letters:
        keep_w, cup_w = (A, ainv) if s > 0 else (ainv, A)
        nxt: dict[tuple[int, ...], LaurentPoly] = {}
        for diag, c in state.items():
            nxt[diag] = nxt.get(diag, LaurentPoly(var="A")) + c * keep_w
            d2, loops = _apply_e(diag, n, i)
            term = c * cup_w * (DELTA_LOOP if loops else 1)
            nxt[d2] = nxt.get(d2, LaurentPoly(var="A")) + term
        state = {d: c for d, c in nxt.items() if not c.is_zero()}
    total = LaurentPoly(var="A")
    for diag, c in state.items():
        total = total + c * DELTA_LOOP ** (_closure_loops(diag, n) - 1)
    return total


def state_sum_bracket(w: BraidWord) -> LaurentPoly:
    """Kauffman bracket by summing over all 2^c smoothings (test oracle)."""
    n, c = w.strands, len(w.letters)
    node = lambda t, p: t * n + p  # noqa: E731
    total: dict[int, int] = {}
    for choice in itertools.product((0, 1), repeat=c):
        parent = list(range((c + 1) * n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        a_power = 0
        for t, ((i, s), horizontal) in enumerate(zip(w.letters, choice)):
            for p in range(n):
                if p not in (i - 1, i):
                    union(node(t, p), node(t + 1, p))
            if horizontal:
                union(node(t, i - 1), node(t, i))
                union(node(t + 1, i - 1), node(t + 1, i))
                a_power -= s
            else:
                union(node(t, i - 1), node(t + 1, i - 1))
                union(node(t, i), node(t + 1, i))
                a_power += s
        for p in range(n):
            union(node(c, p), node(0, p))
        loops = len({find(x) for x in range(len(parent))})
        poly = DELTA_LOOP ** (loops - 1)
        for e, coef in poly.terms.items():
            total[e + a_power] = total.get(e + a_power, 0) + coef
    return LaurentPoly(total, "A")


def jones(w: BraidWord) -> LaurentPoly:
    """Jones polynomial of the closure in s = t^{1/2}."""
    writhe = exponent_sum(w)
    v = (-(A ** 3)) ** (-writhe) * kauffman_bracket(w)
    # A = t^{-1/4} = s^{-1/2}
    return v.divide_exponents(2).mirror().with_var("s")


def format_jones(v: LaurentPoly) -> str:
    """Render a polynomial in s = t^{1/2} with t exponents (halves where needed)."""
    if v.is_zero():
        return "0"
    out = []
    for k in sorted(v.terms):
        c = v.coeff(k)
        e = Fraction(k, 2)
        mono = "" if e == 0 else ("t" if e == 1 else f"t^({e})" if e.denominator != 1 else f"t^{e}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        out.append(("-" if c < 0 else "+", body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    return text + "".join(f" {sgn} {b}" for sgn, b in out[1:])


def unlink_jones(k: int) -> LaurentPoly:
    """Jones polynomial of the k-component unlink, (-t^{1/2} - t^{-1/2})^{k-1}."""
    return LaurentPoly({1: -1, -1: -1}, "s") ** (k - 1)


# --------------------------------------------------------------------------
# models and constructions


def torus_braid(p: int, q: int) -> BraidWord:
    """(σ1 σ2 ⋯ σ_{p-1})^q on p strands, whose closure is T(p, q)."""
    if p < 2 or q < 1:
        raise ValueError(f"torus_braid needs p >= 2 and q >= 1, got ({p}, {q})")
    return BraidWord(p, tuple((i, 1) for i in range(1, p)) * q)


@dataclasses.dataclass(frozen=True)
class CableSpec:
    """Replace one component by p parallel copies twisted t half-twists.

    The twist is the torus pattern (σ1⋯σ_{p-1})^t on the copies, so (2,1)
    merges the two copies into one component and (2,2) leaves two copies
    linked once. It is added on top of the blackboard framing of the diagram.
    """

    component: Component
    p: int
    t: int = 0

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"cable needs p >= 1, got {self.p}")


def _block_crossing(offset: int, wa: int, wb: int, sign: int) -> list[Letter]:
    """Every strand of the left block crosses every strand of the right block."""
    return [(offset + a + b + 1, sign) for a in reversed(range(wa)) for b in range(wb)]


def cable(w: BraidWord, spec: CableSpec) -> BraidWord:
    """Satellite of the closure with one component replaced by a (p, t)-cable.

    The copies follow the blackboard framing of the closed braid diagram (see
    :func:`blackboard_framing`) and the t half-twists are inserted at the top
    of the braid, at the component's first strand.
    """
    return cable_many(w, [spec])


def cable_many(w: BraidWord, specs: Iterable[CableSpec]) -> BraidWord:
    """Cable several distinct components in one pass."""
    per_strand: dict[int, CableSpec] = {}
    firsts = []
    for spec in specs:
        comp = _resolve_component(w, spec.component)
        if any(s in per_strand for s in comp):
            raise BraidError(f"component {comp} cabled twice")
        for s in comp:
            per_strand[s] = spec
        firsts.append((min(comp), spec))
    widths = [per_strand[pos + 1].p if pos + 1 in per_strand else 1 for pos in range(w.strands)]
    letters: list[Letter] = []
    for first, spec in sorted(firsts, key=lambda x: x[0]):
        if spec.p > 1 and spec.t:
            offset = sum(widths[: first - 1])
            sign = 1 if spec.t > 0 else -1
            letters.extend([(offset + k, sign) for k in range(1, spec.p)] * abs(spec.t))
    for i, s in w.letters:
        offset = sum(widths[: i - 1])
        letters.extend(_block_crossing(offset, widths[i - 1], widths[i], s))
        widths[i - 1], widths[i] = widths[i], widths[i - 1]
    return BraidWord(sum(widths), tuple(letters))


def cable_all(w: BraidWord, p: int, t: int) -> BraidWord:
    """Apply the same (p, t)-cable to every component."""
    return cable_many(w, [CableSpec(c, p, t) for c in closure_components(w)])


# --------------------------------------------------------------------------
# summaries and identification


@dataclasses.dataclass(frozen=True)
class LinkSummary:
    component_count: int
    components: tuple[tuple[int, ...], ...]
    linking_matrix: tuple[tuple[int, ...], ...]
    self_writhes: tuple[int, ...]
    jones: LaurentPoly
    per_component_jones: tuple[LaurentPoly, ...]

    @property
    def unknotted_components(self) -> bool:
        """Every component has trivial Jones polynomial (evidence, not proof, of unknottedness)."""
        return all(v == LaurentPoly.constant(1, "s") for v in self.per_component_jones)

    def pairwise_linking(self) -> list[int]:
        k = self.component_count
        return [self.linking_matrix[a][b] for a in range(k) for b in range(a + 1, k)]

    def same_link_invariants(self, other: "LinkSummary") -> bool:
        """Component count, linking matrix up to relabeling, and Jones polynomial agree."""
        return (
            self.component_count == other.component_count
            and same_matrix_up_to_relabel(self.linking_matrix, other.linking_matrix)
            and self.jones == other.jones
            and sorted(map(_poly_key, self.per_component_jones)) == sorted(map(_poly_key, other.per_component_jones))
        )

    def to_json(self) -> dict:
        return {
            "component_count": self.component_count,
            "components": [list(c) for c in self.components],
            "linking_matrix": [list(r) for r in self.linking_matrix],
            "self_writhes": list(self.self_writhes),
            "jones": jones_to_json(self.jones),
            "per_component_jones": [jones_to_json(v) for v in self.per_component_jones],
            "atlas_match": identify(self),
        }


def _poly_key(p: LaurentPoly) -> tuple:
    return tuple(sorted(p.terms.items()))


def jones_to_json(v: LaurentPoly) -> dict[str, int]:
    """Coefficients keyed by the t-exponent written as 'num/2'."""
    return {f"{k}/2": v.coeff(k) for k in sorted(v.terms)}


def jones_from_json(d: dict[str, int]) -> LaurentPoly:
    out = {}
    for key, c in d.items():
        num, den = key.split("/")
        if den != "2":
            raise ValueError(f"bad exponent key {key!r}")
        out[int(num)] = int(c)
    return LaurentPoly(out, "s")


def summarize(w: BraidWord, with_jones: bool = True) -> LinkSummary:
    comps = closure_components(w)
    between, selfw = _crossing_tally(w)
    lk = tuple(tuple(x // 2 for x in row) for row in between)
    if with_jones:
        v = jones(w)
        per = tuple(jones(extract_component(w, c)) for c in comps)
    else:
        v, per = LaurentPoly(var="s"), ()
    return LinkSummary(len(comps), tuple(comps), lk, tuple(selfw), v, per)


def _jones_class(v: LaurentPoly) -> tuple:
    """Key invariant under mirroring, sign and multiplication by s^k."""
    keys = []
    for p in (v, v.mirror()):
        if p.is_zero():
            return ()
        p = p.shift(-p.min_degree())
        if p.coeff(0) < 0:
            p = -p
        keys.append(_poly_key(p))
    return min(keys)


def _linking_profile(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    k = len(m)
    return tuple(sorted(abs(m[a][b]) for a in range(k) for b in range(a + 1, k)))


@functools.lru_cache(maxsize=1)
def atlas() -> tuple[tuple[str, int, tuple[int, ...], tuple], ...]:
    """Built-in table: (name, components, linking profile, Jones class)."""
    entries: list[tuple[str, BraidWord]] = [("unknot", BraidWord.identity(1))]
    entries += [(f"unlink({k})", BraidWord.identity(k)) for k in range(2, 7)]
    entries += [("L2a1", torus_braid(2, 2)), ("L4a1 / T(2,4)", torus_braid(2, 4))]
    entries += [(f"T({m},{m})", torus_braid(m, m)) for m in range(3, 7)]
    out = []
    for name, word in entries:
        s = summarize(word, with_jones=False)
        out.append((name, s.component_count, _linking_profile(s.linking_matrix), _jones_class(jones(word))))
    return tuple(out)


def identify(s: LinkSummary) -> str:
    """Atlas name of the link, or 'unidentified'."""
    key = (s.component_count, _linking_profile(s.linking_matrix), _jones_class(s.jones))
    for name, count, profile, jclass in atlas():
        if (count, profile, jclass) == key:
            return name
    return "unidentified"
