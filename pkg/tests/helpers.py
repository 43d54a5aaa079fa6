"""Shared test helpers: random words, relation rewrites and independent oracles."""

from __future__ import annotations

import random

from braidlinks import BraidWord


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord.identity(n)
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))


def rewrite_once(letters: list, n: int, rng: random.Random) -> list:
    """Apply one random defining relation (or free insertion/deletion) somewhere, if one applies."""
    moves = []
    for k in range(len(letters) - 1):
        (a, s), (c, t) = letters[k], letters[k + 1]
        if abs(a - c) >= 2:
            moves.append(("swap", k))
        if a == c and s == -t:
            moves.append(("cancel", k))
    for k in range(len(letters) - 2):
        (a, s), (c, t), (e, u) = letters[k : k + 3]
        if a == e and abs(a - c) == 1 and s == t == u:
            moves.append(("braid", k))
    if n >= 2:
        moves.append(("insert", rng.randint(0, len(letters))))
    if not moves:
        return letters
    kind, k = rng.choice(moves)
    out = list(letters)
    if kind == "swap":
        out[k], out[k + 1] = out[k + 1], out[k]
    elif kind == "cancel":
        del out[k : k + 2]
    elif kind == "braid":
        (a, s), (c, _), _ = out[k : k + 3]
        out[k : k + 3] = [(c, s), (a, s), (c, s)]
    else:
        i, e = rng.randint(1, n - 1), rng.choice((1, -1))
        out[k:k] = [(i, e), (i, -e)]
    return out


def scramble(w: BraidWord, rng: random.Random, steps: int = 30) -> BraidWord:
    letters = list(w.letters)
    for _ in range(steps):
        letters = rewrite_once(letters, w.strands, rng)
    return BraidWord(w.strands, tuple(letters))


# -- Artin's faithful action of B_n on the free group F_n ------------------------------
# Generators x_1..x_n are the integers 1..n, inverses are negative. A braid is
# trivial exactly when it fixes every x_i, so comparing images decides equality
# without using any Garside machinery.


def _reduce(word: list[int]) -> list[int]:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return out


def _inv(word: list[int]) -> list[int]:
    return [-g for g in reversed(word)]


def artin_action(w: BraidWord) -> tuple[tuple[int, ...], ...]:
    images = {k: [k] for k in range(1, w.strands + 1)}

    def substitute(word, table):
        out = []
        for g in word:
            out.extend(table[g] if g > 0 else _inv(table[-g]))
        return _reduce(out)

    for i, s in w.letters:
        # Apply σ_i^s as a substitution on the current images (right action).
        table = {k: [k] for k in range(1, w.strands + 1)}
        if s > 0:
            table[i] = [i, i + 1, -i]
            table[i + 1] = [i]
        else:
            table[i] = [i + 1]
            table[i + 1] = [-(i + 1), i, i + 1]
        images = {k: substitute(table_word, table) for k, table_word in images.items()}
    return tuple(tuple(images[k]) for k in range(1, w.strands + 1))


def oracle_equal(a: BraidWord, b: BraidWord) -> bool:
    return artin_action(a) == artin_action(b)
