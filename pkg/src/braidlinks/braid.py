"""
Braid words in the Artin generators of B_n.

A word is stored exactly as written (no implicit cancellation), so intermediate
expressions can be displayed verbatim. Equality in the group is decided with the
left Garside normal form

    w = Δ^k · f_1 ⋯ f_r

where every f_i is a permutation braid (a positive braid in which each pair of
strands crosses at most once), no f_i is trivial or equal to Δ, and consecutive
factors are left-weighted.

Permutation braids are handled through their image in S_n. A permutation is a
0-based tuple internally; σ_i corresponds to the transposition of positions
i-1 and i, and the braid word σ_a σ_b ⋯ maps to the composite s_a ∘ s_b ∘ ⋯.
With that convention the right descent set of a simple element x (the
generators a word for x may end with) is {i : x[i-1] > x[i]}.

Conjugation follows a^b = b⁻¹ a b throughout the package. It is a choice, not
a theorem: it is the convention under which (Z_{1 2})^{Z²_{2 3}} expands to
σ2⁻² σ1 σ2², as in the conic-line computation.
"""

from __future__ import annotations

import dataclasses
import itertools
import re
from collections import deque
from typing import Iterable, Sequence

Letter = tuple[int, int]


class BraidError(ValueError):
    """Raised for malformed braid words or incompatible operands."""


def _check_same_strands(a: "BraidWord", b: "BraidWord") -> None:
    if a.strands != b.strands:
        raise BraidError(f"strand counts differ: {a.strands} != {b.strands}")


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in σ_1^{±1}, …, σ_{n-1}^{±1}.

    `letters` holds (index, sign) pairs. Python equality compares words
    letter-by-letter; use :func:`equal` for equality in the braid group.
    """

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.strands, int) or self.strands < 1:
            raise BraidError(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.strands - 1:
                raise BraidError(f"generator index {i} out of range for {self.strands} strands")
            if s not in (1, -1):
                raise BraidError(f"letter sign must be +1 or -1, got {s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n, ())

    @classmethod
    def from_ints(cls, n: int, ints: Iterable[int]) -> "BraidWord":
        """Build from signed integers: 2 means σ2, -2 means σ2⁻¹."""
        letters = []
        for k in ints:
            if k == 0:
                raise BraidError("0 is not a generator")
            letters.append((abs(k), 1 if k > 0 else -1))
        return cls(n, tuple(letters))

    @classmethod
    def parse(cls, n: int, text: str) -> "BraidWord":
        """Parse whitespace separated `s<k>` / `s<k>^<e>` tokens (e may be negative)."""
        letters: list[Letter] = []
        for token in text.split():
            m = _TOKEN.fullmatch(token)
            if m is None:
                raise BraidError(f"cannot parse braid token {token!r}")
            index = int(m.group(1))
            exponent = int(m.group(2)) if m.group(2) is not None else 1
            sign = 1 if exponent > 0 else -1
            letters.extend([(index, sign)] * abs(exponent))
        return cls(n, tuple(letters))

    @property
    def ints(self) -> tuple[int, ...]:
        return tuple(i * s for i, s in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __pow__(self, e: int) -> "BraidWord":
        return power(self, e)

    def __str__(self) -> str:
        return format_word(self)


_TOKEN = re.compile(r"s(\d+)(?:\^\(?(-?\d+)\)?)?")


def format_word(w: BraidWord, compact: bool = True) -> str:
    """Render as `s1 s2^-1 ...`; with `compact`, runs of one letter use exponents."""
    if not w.letters:
        return "e"
    parts = []
    groups = itertools.groupby(w.letters) if compact else ((l, [l]) for l in w.letters)
    for (i, s), run in groups:
        e = s * len(list(run))
        parts.append(f"s{i}" if e == 1 else f"s{i}^{e}")
    return " ".join(parts)


def generator(n: int, i: int, e: int = 1) -> BraidWord:
    """σ_i^e on n strands."""
    return BraidWord(n, ((i, 1 if e > 0 else -1),) * abs(e))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same_strands(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def product(words: Iterable[BraidWord], n: int) -> BraidWord:
    """Left-to-right product of `words`, identity on n strands if empty."""
    letters: list[Letter] = []
    for w in words:
        if w.strands != n:
            raise BraidError(f"strand counts differ: {w.strands} != {n}")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple((i, -s) for i, s in reversed(w.letters)))


def power(w: BraidWord, e: int) -> BraidWord:
    base = w if e >= 0 else inverse(w)
    return BraidWord(w.strands, base.letters * abs(e))


def conjugate(w: BraidWord, by: BraidWord) -> BraidWord:
    """w^by = by⁻¹ · w · by."""
    _check_same_strands(w, by)
    return BraidWord(w.strands, inverse(by).letters + w.letters + by.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for i, s in w.letters:
        if stack and stack[-1] == (i, -s):
            stack.pop()
        else:
            stack.append((i, s))
    return BraidWord(w.strands, tuple(stack))


def cyclically_reduce(w: BraidWord) -> BraidWord:
    """Free reduction followed by cancelling inverse letters at the two ends."""
    letters = list(free_reduce(w).letters)
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == (letters[hi - 1][0], -letters[hi - 1][1]):
        lo += 1
        hi -= 1
    return BraidWord(w.strands, tuple(letters[lo:hi]))


def exponent_sum(w: BraidWord) -> int:
    return sum(s for _, s in w.letters)


def rotate(w: BraidWord) -> BraidWord:
    """Rotation about a line parallel to the strands: σ_k^{±1} ↦ σ_{n-k}^{±1}."""
    n = w.strands
    return BraidWord(n, tuple((n - i, s) for i, s in w.letters))


def delta(n: int) -> BraidWord:
    """The positive half twist Δ = (σ1⋯σ_{n-1})(σ1⋯σ_{n-2})⋯σ1."""
    letters = [(i, 1) for top in range(n - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord(n, tuple(letters))


# --------------------------------------------------------------------------
# permutations


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of {1, …, n}; `images[k-1]` is the image of k."""

    size: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if len(images) != self.size or sorted(images) != list(range(1, self.size + 1)):
            raise BraidError(f"not a permutation of 1..{self.size}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def _from0(cls, p: Sequence[int]) -> "Permutation":
        return cls(len(p), tuple(x + 1 for x in p))

    def _to0(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.size + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its least element."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in moved)


def permutation_image(w: BraidWord) -> Permutation:
    """Image in S_n, ignoring crossing signs.

    The image of k is the bottom position reached by the strand that starts at
    top position k when the word is read top to bottom.
    """
    n = w.strands
    where = list(range(n))  # where[pos] = top position of the strand now at pos
    for i, _ in w.letters:
        where[i - 1], where[i] = where[i], where[i - 1]
    images = [0] * n
    for pos, top in enumerate(where):
        images[top] = pos + 1
    return Permutation(n, tuple(images))


# --------------------------------------------------------------------------
# Garside normal form


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """Left normal form Δ^delta_power · factors[0] ⋯ factors[-1]."""

    strands: int
    delta_power: int
    factors: tuple[Permutation, ...]

    def to_word(self) -> BraidWord:
        n = self.strands
        letters: list[Letter] = list(power(delta(n), self.delta_power).letters)
        for f in self.factors:
            letters.extend((i, 1) for i in _reduced_word(f._to0()))
        return BraidWord(n, tuple(letters))

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        inner = " . ".join("[" + " ".join(f"s{i}" for i in _reduced_word(f._to0())) + "]" for f in self.factors)
        head = f"D^{self.delta_power}"
        return head if not inner else f"{head} . {inner}"


def _reduced_word(p: tuple[int, ...]) -> list[int]:
    """A reduced word i_1 … i_k (1-based generators) for the permutation p."""
    p = list(p)
    out: list[int] = []
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                out.append(i + 1)
                break
        else:
            break
    out.reverse()
    return out


def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _left_weight(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Move generators from the front of b to the back of a until L(b) ⊆ R(a)."""
    a = list(a)
    b = list(b)
    n = len(a)
    while True:
        binv = _inv(tuple(b))
        for i in range(n - 1):
            if binv[i] > binv[i + 1] and a[i] < a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                # s_i ∘ b: swap the values i and i+1
                b[binv[i]], b[binv[i + 1]] = i + 1, i
                break
        else:
            return tuple(a), tuple(b)


def _normalize_simples(n: int, delta_power: int, simples: Iterable[tuple[int, ...]]) -> NormalForm:
    ident = tuple(range(n))
    top = tuple(range(n - 1, -1, -1))
    factors: list[tuple[int, ...]] = []
    for y in simples:
        if y == ident:
            continue
        factors.append(y)
        k = len(factors) - 1
        while k > 0:
            pair = _left_weight(factors[k - 1], factors[k])
            if pair == (factors[k - 1], factors[k]):
                break
            factors[k - 1], factors[k] = pair
            k -= 1
        while factors and factors[-1] == ident:
            factors.pop()
    lead = 0
    while lead < len(factors) and factors[lead] == top:
        lead += 1
    return NormalForm(n, delta_power + lead, tuple(Permutation._from0(f) for f in factors[lead:]))


def normal_form(w: BraidWord) -> NormalForm:
    """Left-greedy Garside normal form.

    Each σ_i⁻¹ is rewritten as Δ⁻¹ · (Δσ_i⁻¹) and the Δ⁻¹ are pushed to the
    front; a simple factor passed by an odd number of them is conjugated by Δ
    (σ_k ↦ σ_{n-k}).
    """
    n = w.strands
    top = tuple(range(n - 1, -1, -1))
    negatives = sum(1 for _, s in w.letters if s < 0)
    seen_neg = 0
    simples = []
    for i, s in w.letters:
        if s > 0:
            x = list(range(n))
            x[i - 1], x[i] = x[i], x[i - 1]
        else:
            seen_neg += 1
            x = list(top)
            x[i - 1], x[i] = x[i], x[i - 1]  # w0 ∘ s_i
        if (negatives - seen_neg) % 2:
            x = [n - 1 - x[n - 1 - k] for k in range(n)]
        simples.append(tuple(x))
    return _normalize_simples(n, -negatives, simples)


def equal(a: BraidWord, b: BraidWord) -> bool:
    """Equality in B_n."""
    _check_same_strands(a, b)
    return normal_form(a) == normal_form(b)


def is_identity(w: BraidWord) -> bool:
    return normal_form(w) == NormalForm(w.strands, 0, ())



def _tau(p: tuple[int, ...]) -> tuple[int, ...]:
    n = len(p)
    return tuple(n - 1 - p[n - 1 - k] for k in range(n))


def cycle(nf: NormalForm) -> NormalForm:
    """One Garside cycling step: move the first simple factor to the end.

    The result is a conjugate of the input. Repeated cycling raises the
    infimum (the Δ-power) whenever some conjugate has a larger one.
    """
    if not nf.factors:
        return nf
    first = nf.factors[0]._to0()
    if nf.delta_power % 2:
        first = _tau(first)
    rest = [f._to0() for f in nf.factors[1:]]
    return _normalize_simples(nf.strands, nf.delta_power, rest + [first])


def positive_conjugate(w: BraidWord) -> BraidWord | None:
    """A positive word conjugate to w, or None when no conjugate is positive.

    Cycling is repeated; if the infimum stays below zero for n(n-1)/2
    consecutive steps it is already maximal over the conjugacy class.
    """
    nf = normal_form(w)
    patience = max(1, w.strands * (w.strands - 1) // 2)
    stale = 0
    while nf.delta_power < 0:
        nxt = cycle(nf)
        if nxt.delta_power > nf.delta_power:
            stale = 0
        else:
            stale += 1
            if stale > patience:
                return None
        nf = nxt
    return nf.to_word()

# --------------------------------------------------------------------------
# Markov destabilization


def _drop_single(w: BraidWord) -> BraidWord | None:
    """Remove a strand if σ_{n-1} or σ_1 occurs exactly once in w."""
    n = w.strands
    if n < 2:
        return None
    counts = [0] * n
    for i, _ in w.letters:
        counts[i] += 1
    if counts[n - 1] == 1:
        return BraidWord(n - 1, tuple(l for l in w.letters if l[0] != n - 1))
    if counts[1] == 1:
        return BraidWord(n - 1, tuple((i - 1, s) for i, s in w.letters if i != 1))
    return None


def _positive_neighbours(word: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    m = len(word)
    if m:
        yield word[1:] + word[:1]
    for k in range(m - 1):
        a, b = word[k], word[k + 1]
        if abs(a - b) >= 2:
            yield word[:k] + (b, a) + word[k + 2:]
    for k in range(m - 2):
        a, b, c = word[k], word[k + 1], word[k + 2]
        if a == c and abs(a - b) == 1:
            yield word[:k] + (b, a, b) + word[k + 3:]


def _search_positive(w: BraidWord, limit: int) -> BraidWord | None:
    """Breadth-first search through positive words equal to a cyclic conjugate of w."""
    n = w.strands
    start = tuple(i for i, _ in w.letters)
    seen = {start}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        dropped = _drop_single(BraidWord(n, tuple((i, 1) for i in word)))
        if dropped is not None:
            return dropped
        for nxt in _positive_neighbours(word):
            if nxt not in seen:
                if len(seen) >= limit:
                    return None
                seen.add(nxt)
                queue.append(nxt)
    return None


def markov_destabilize(w: BraidWord, search_limit: int = 20000) -> BraidWord:
    """Greedily remove strands by Markov destabilization.

    A strand is removed when some cyclic conjugate of the (cyclically reduced)
    word uses σ_{n-1} exactly once (delete it) or σ_1 exactly once (delete it
    and shift the remaining indices down). When neither holds and the word is
    conjugate to a positive braid (found by cycling), positive words reachable by braid relations and cyclic rotation
    are searched, up to `search_limit` words, for the same condition.
    Every step preserves the link type of the closure, and each step drops a
    strand, so the loop stops after at most n - 1 rounds.
    """
    current = cyclically_reduce(w)
    while current.strands > 1:
        nxt = _drop_single(current)
        if nxt is None and current.letters:
            positive = current if all(s > 0 for _, s in current.letters) else positive_conjugate(current)
            if positive is not None:
                nxt = _search_positive(positive, search_limit)
        if nxt is None:
            break
        current = cyclically_reduce(nxt)
    return current
