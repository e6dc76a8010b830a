"""Shared test oracles and random-case generators.

Everything in this file is deliberately independent of the package's own
normal-form / linear-algebra code paths: brute-force rewriting closure for
positive braid words, gcd-of-minors invariant factors, an unwrap-based winding
count, and a tiny standalone permutation calculus.  The package is tested
against these, never the other way around.
"""

from __future__ import annotations

import itertools
import math
import random

import numpy as np

# ---------------------------------------------------------------------------
# positive-word equality in B_k by exhaustive relation-rewriting closure


def rewrite_neighbours(word: tuple[int, ...], k: int) -> list[tuple[int, ...]]:
    """All words obtained from one substring rewrite by a defining relation."""
    out = []
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if abs(a - b) >= 2:
            out.append(word[:p] + (b, a) + word[p + 2 :])
    for p in range(len(word) - 2):
        a, b, c = word[p], word[p + 1], word[p + 2]
        if a == c and abs(a - b) == 1:
            out.append(word[:p] + (b, a, b) + word[p + 3 :])
    return out


def closure_class(word: tuple[int, ...], k: int, cap: int = 200_000) -> frozenset:
    """The set of positive words reachable by relation rewrites (B_k monoid class)."""
    seen = {word}
    queue = [word]
    while queue:
        w = queue.pop()
        for v in rewrite_neighbours(w, k):
            if v not in seen:
                if len(seen) >= cap:
                    raise RuntimeError("rewriting closure exceeded cap")
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


def positive_words_equal(u: tuple[int, ...], v: tuple[int, ...], k: int) -> bool:
    """Equality of positive words in B_k (positive words are equal in the group
    iff connected by positive relation rewrites)."""
    if len(u) != len(v):
        return False
    return v in closure_class(u, k)


# ---------------------------------------------------------------------------
# integer determinant and gcd-of-minors invariant factors


def det_int(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * det_int(minor)
        total += -term if j % 2 else term
    return total


def minor_gcd_invariants(rows: list[list[int]]) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... via determinantal divisors:
    d_i = D_i / D_{i-1} with D_i = gcd of all i x i minors."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    divisors = [1]
    for size in range(1, min(m, n) + 1):
        g = 0
        for ri in itertools.combinations(range(m), size):
            for ci in itertools.combinations(range(n), size):
                sub = [[rows[r][c] for c in ci] for r in ri]
                g = math.gcd(g, det_int(sub))
        if g == 0:
            break
        divisors.append(g)
    return tuple(divisors[i] // divisors[i - 1] for i in range(1, len(divisors)))


# ---------------------------------------------------------------------------
# winding count by numpy's phase unwrapping (independent of the package's
# incremental-argument implementation)


def unwrap_winding(values: np.ndarray) -> int:
    angles = np.unwrap(np.angle(np.asarray(values)))
    turns = (angles[-1] - angles[0]) / (2 * np.pi)
    assert abs(turns - round(turns)) < 1e-6
    return int(round(turns))


# ---------------------------------------------------------------------------
# standalone permutation calculus (one-line tuples on 0..size-1, words act
# left to right: (a then b)(x) = b(a(x)))


def perm_compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(b[x] for x in a)


def perm_transposition(size: int, x: int, y: int) -> tuple[int, ...]:
    images = list(range(size))
    images[x], images[y] = images[y], images[x]
    return tuple(images)


def perm_of_letters(size: int, swaps: list[tuple[int, int]]) -> tuple[int, ...]:
    p = tuple(range(size))
    for x, y in swaps:
        p = perm_compose(p, perm_transposition(size, x, y))
    return p


def perm_inversions(p: tuple[int, ...]) -> int:
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


# ---------------------------------------------------------------------------
# random words and relator insertion (letters are (index, sign) pairs)


def random_letters(rng: random.Random, k: int, length: int) -> list[tuple[int, int]]:
    return [(rng.randint(1, k - 1), rng.choice((1, -1))) for _ in range(length)]


def braid_relator_letters(k: int, rng: random.Random) -> list[tuple[int, int]]:
    """A defining relator of B_k spelled as a word equal to the identity."""
    kind = rng.randrange(3)
    if kind == 0 or k < 3:  # free cancellation (the only relator type in B_2)
        i = rng.randint(1, k - 1)
        s = rng.choice((1, -1))
        return [(i, s), (i, -s)]
    if kind == 1 or k < 4:  # braid relation
        i = rng.randint(1, k - 2)
        j = i + 1
        return [(i, 1), (j, 1), (i, 1), (j, -1), (i, -1), (j, -1)]
    # commuting relation
    i = rng.randint(1, k - 3)
    j = rng.randint(i + 2, k - 1)
    return [(i, 1), (j, 1), (i, -1), (j, -1)]


def insert_relator(
    letters: list[tuple[int, int]], k: int, rng: random.Random
) -> list[tuple[int, int]]:
    pos = rng.randint(0, len(letters))
    rel = braid_relator_letters(k, rng)
    if rng.random() < 0.5:
        rel = [(i, -s) for i, s in reversed(rel)]
    return letters[:pos] + rel + letters[pos:]


def insert_word_relator(
    letters: list[tuple[int, int]],
    relators: list[list[tuple[int, int]]],
    rng: random.Random,
) -> list[tuple[int, int]]:
    """Insert one of the given relator words (or its inverse) at a random spot."""
    pos = rng.randint(0, len(letters))
    rel = list(relators[rng.randrange(len(relators))])
    if rng.random() < 0.5:
        rel = [(i, -s) for i, s in reversed(rel)]
    return list(letters[:pos]) + rel + list(letters[pos:])
