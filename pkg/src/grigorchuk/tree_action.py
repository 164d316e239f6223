"""Action of words on the rooted binary tree.

Vertices are finite 0/1 strings.  The generators act by the standard
recursions: 'a' flips the first bit, and

    b = (a, c)    c = (a, d)    d = (1, b)

meaning e.g. that b flips the second bit under a 0 and acts as c on the
remainder under a 1.  A word acts with its rightmost letter applied
first, so apply(u + v, x) == apply(u, apply(v, x)).

This module never rewrites words; it only evaluates them, which makes
it an independent check on the algebraic machinery.  Triviality testing
composes whole-level permutations (one per letter, cached per depth)
and deepens one level at a time: an automorphism moving a vertex moves
all its descendants, so early exits are exact.
"""

from __future__ import annotations

import numpy as np

from .words import LETTERS, WordError

# section pairs of the level-one stabilizing generators
_SECTIONS = {"b": ("a", "c"), "c": ("a", "d"), "d": ("", "b")}


def apply_letter(letter: str, vertex: str) -> str:
    if letter == "a":
        if not vertex:
            return vertex
        return ("1" if vertex[0] == "0" else "0") + vertex[1:]
    sec0, sec1 = _SECTIONS[letter]
    if not vertex:
        return vertex
    if vertex[0] == "0":
        return "0" + apply_word(sec0, vertex[1:])
    return "1" + apply_word(sec1, vertex[1:])


def apply_word(word: str, vertex: str) -> str:
    for ch in vertex:
        if ch not in "01":
            raise ValueError(f"invalid vertex bit {ch!r}")
    for letter in reversed(word):
        if letter not in LETTERS:
            raise WordError(f"invalid letter {letter!r}")
        vertex = apply_letter(letter, vertex)
    return vertex


# depth -> {letter: permutation of the 2**depth level vertices}
_perm_cache: dict[int, dict[str, np.ndarray]] = {}


def _level_perms(depth: int) -> dict[str, np.ndarray]:
    perms = _perm_cache.get(depth)
    if perms is None:
        count = 1 << depth
        perms = {}
        for letter in LETTERS:
            images = [
                int(apply_letter(letter, format(v, f"0{depth}b")), 2)
                for v in range(count)
            ]
            perms[letter] = np.array(images, dtype=np.int64)
        _perm_cache[depth] = perms
    return perms


def _identity_at_level(word: str, depth: int) -> bool:
    perms = _level_perms(depth)
    current = np.arange(1 << depth, dtype=np.int64)
    for letter in reversed(word):
        current = perms[letter][current]
    return bool(np.array_equal(current, np.arange(1 << depth)))


def is_trivial_at_depth(word: str, depth: int) -> bool:
    """True iff the word fixes every vertex of the given depth (hence
    every shallower vertex too)."""
    if depth <= 0:
        raise ValueError("depth must be positive")
    for letter in word:
        if letter not in LETTERS:
            raise WordError(f"invalid letter {letter!r}")
    for level in range(1, depth + 1):
        if not _identity_at_level(word, level):
            return False
    return True


def oracle_depth(n: int) -> int:
    """Depth sufficient to decide triviality of any word of length <= n."""
    m = max(n, 2)
    return (m - 1).bit_length() + 4
