"""Level-one sections of even words, computed by letter substitution.

A reduced word of even a-parity fixes both level-one subtrees, so it
factors through the pair of its sections (w0, w1).  Scanning left to
right, an even reduced word decomposes uniquely into factors that are
either a single letter from {b, c, d} or a conjugated triple "a?a"; the
sections are obtained by substituting each factor's pair of section
letters and reducing.

Substitution table (single letter -> (w0 part, w1 part)):
    b -> (a, c)      aba -> (c, a)
    c -> (a, d)      aca -> (d, a)
    d -> (1, b)      ada -> (b, 1)

Odd words do not fix the subtrees; split_shifted first multiplies by
'a' on the right to land in the even case.
"""

from __future__ import annotations

from typing import NamedTuple

from .words import a_parity, is_reduced, reduce_word

# Section letters of a single star u; a conjugated triple "a u a" swaps
# the two entries.
_SEC0 = {"b": "a", "c": "a", "d": ""}
_SEC1 = {"b": "c", "c": "d", "d": "b"}


class SplitPair(NamedTuple):
    left: str
    right: str


def factor_decomposition(word: str) -> list[str]:
    """Factors of an even reduced word, each "u" or "aua" with u in
    {b, c, d}.  Their concatenation is the word itself."""
    if not is_reduced(word):
        raise ValueError("word must be reduced")
    if a_parity(word) != 0:
        raise ValueError("word must have even a-parity")
    factors = []
    i = 0
    n = len(word)
    while i < n:
        if word[i] != "a":
            factors.append(word[i])
            i += 1
        else:
            # alternation plus even parity guarantee the full triple
            factors.append(word[i:i + 3])
            i += 3
    return factors


def split(word: str) -> SplitPair:
    """Sections (w0, w1) of a reduced word of even a-parity."""
    part0 = []
    part1 = []
    for f in factor_decomposition(word):
        if len(f) == 1:
            part0.append(_SEC0[f])
            part1.append(_SEC1[f])
        else:
            u = f[1]
            part0.append(_SEC1[u])
            part1.append(_SEC0[u])
    return SplitPair(reduce_word("".join(part0)), reduce_word("".join(part1)))


def split_shifted(word: str) -> SplitPair:
    """Sections of word*a for a reduced word of odd a-parity."""
    if not is_reduced(word):
        raise ValueError("word must be reduced")
    if a_parity(word) != 1:
        raise ValueError("word must have odd a-parity")
    return split(reduce_word(word + "a"))
