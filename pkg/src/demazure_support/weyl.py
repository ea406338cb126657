"""Weyl groups of type A as permutations in one-line notation.

An element ``w`` of W(A_l) is stored as the tuple ``(w(1), ..., w(l+1))``.
Products are compositions of functions, so ``from_word([i, j])`` is
``s_i s_j`` and acts on roots by applying ``s_j`` first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

__all__ = [
    "WeylElement",
    "SimpleSubset",
    "identity",
    "simple_reflection",
    "from_word",
    "reduced_word",
    "all_reduced_words",
    "all_elements",
    "bruhat_leq",
    "support",
    "long_element",
    "longest_element",
    "min_coset_reps",
    "longest_coset_rep",
    "parabolic_lower_bounds",
    "ParabolicBound",
    "format_word",
    "parse_word",
]

SimpleSubset = frozenset


@dataclass(frozen=True, order=False)
class WeylElement:
    perm: tuple[int, ...]
    length: int = field(default=-1, compare=False, repr=False)

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{len(self.perm)}")
        object.__setattr__(self, "length", _inversions(self.perm))

    @property
    def rank(self) -> int:
        return len(self.perm) - 1

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.rank != self.rank:
            raise ValueError("cannot multiply elements of different rank")
        return WeylElement(tuple(self.perm[j - 1] for j in other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for pos, val in enumerate(self.perm, start=1):
            inv[val - 1] = pos
        return WeylElement(tuple(inv))

    def has_left_descent(self, i: int) -> bool:
        # l(s_i w) < l(w) iff i+1 precedes i in the one-line notation
        return self.perm.index(i) > self.perm.index(i + 1)

    def has_right_descent(self, i: int) -> bool:
        return self.perm[i - 1] > self.perm[i]

    def __str__(self) -> str:
        return format_word(reduced_word(self))


def _inversions(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])


def identity(rank: int) -> WeylElement:
    return WeylElement(tuple(range(1, rank + 2)))


def simple_reflection(rank: int, i: int) -> WeylElement:
    if not 1 <= i <= rank:
        raise ValueError(f"simple index {i} out of range for rank {rank}")
    perm = list(range(1, rank + 2))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return WeylElement(tuple(perm))


def from_word(word: Iterable[int], rank: int) -> WeylElement:
    """Multiply simple reflections left to right.

    >>> from_word([1, 2, 1], 2) == from_word([2, 1, 2], 2)
    True
    """
    w = identity(rank)
    for i in word:
        w = w * simple_reflection(rank, i)
    return w


def reduced_word(w: WeylElement) -> list[int]:
    """Lexicographically least reduced word, by stripping the smallest left descent."""
    return list(_reduced_word(w.perm))


@lru_cache(maxsize=None)
def _reduced_word(perm: tuple[int, ...]) -> tuple[int, ...]:
    w = WeylElement(perm)
    rank = w.rank
    word = []
    while w.length:
        i = next(i for i in range(1, rank + 1) if w.has_left_descent(i))
        word.append(i)
        w = simple_reflection(rank, i) * w
    return tuple(word)


def all_reduced_words(w: WeylElement) -> list[list[int]]:
    """Every reduced word of ``w``, in lexicographic order."""
    if w.length == 0:
        return [[]]
    out = []
    for i in range(1, w.rank + 1):
        if w.has_left_descent(i):
            rest = simple_reflection(w.rank, i) * w
            out.extend([i] + tail for tail in all_reduced_words(rest))
    return out


def all_elements(rank: int) -> list[WeylElement]:
    """All of W(A_rank), sorted by length and then by reduced word."""
    elems = [WeylElement(p) for p in permutations(range(1, rank + 2))]
    return sorted(elems, key=lambda w: (w.length, reduced_word(w)))


def longest_element(rank: int) -> WeylElement:
    return WeylElement(tuple(range(rank + 1, 0, -1)))


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Subword criterion against the canonical reduced word of ``v``."""
    if u.rank != v.rank:
        raise ValueError("elements of different rank are incomparable")
    if u.length > v.length:
        return False
    if u.length == v.length:
        return u == v
    return u.perm in _subword_products(v.perm)


@lru_cache(maxsize=None)
def _subword_products(perm: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    v = WeylElement(perm)
    reached = {identity(v.rank).perm}
    for i in reduced_word(v):
        s = simple_reflection(v.rank, i)
        reached |= {(WeylElement(p) * s).perm for p in reached}
    return frozenset(reached)


def support(v: WeylElement) -> SimpleSubset:
    return frozenset(reduced_word(v))


def long_element(I: Iterable[int], rank: int) -> WeylElement:
    """Longest element of the parabolic subgroup W_I: reverse each run of I."""
    I = frozenset(I)
    perm = list(range(1, rank + 2))
    i = 1
    while i <= rank:
        if i in I:
            j = i
            while j + 1 in I:
                j += 1
            # W_I acts on positions i..j+1 as a full symmetric group
            perm[i - 1:j + 1] = reversed(perm[i - 1:j + 1])
            i = j + 1
        else:
            i += 1
    return WeylElement(tuple(perm))


def min_coset_reps(J: Iterable[int], rank: int) -> list[WeylElement]:
    """Minimal length representatives of the cosets w W_J."""
    J = frozenset(J)
    return [w for w in all_elements(rank) if not any(w.has_right_descent(j) for j in J)]


def longest_coset_rep(J: Iterable[int], rank: int) -> WeylElement:
    return max(min_coset_reps(J, rank), key=lambda w: w.length)


def subsets(rank: int) -> list[SimpleSubset]:
    idx = range(1, rank + 1)
    return [frozenset(c) for k in range(rank + 1) for c in combinations(idx, k)]


@dataclass(frozen=True)
class ParabolicBound:
    I: SimpleSubset
    element: WeylElement
    # not below any other w_K <= v in the Bruhat order
    maximal: bool
    # of maximal length among all w_K <= v
    longest: bool


def parabolic_lower_bounds(v: WeylElement) -> list[ParabolicBound]:
    """All subsets I with w_I <= v, flagging Bruhat-maximal and longest ones.

    The two flags differ in general: for v = s1 s2 s3 in A3 both s1 s3 and
    s2 are Bruhat-maximal, while s1 s3 alone is longest.
    """
    rank = v.rank
    below = [(I, long_element(I, rank)) for I in subsets(rank)]
    below = [(I, wI) for I, wI in below if bruhat_leq(wI, v)]
    top = max(wI.length for _, wI in below)
    out = []
    for I, wI in below:
        dominated = any(wI != wK and bruhat_leq(wI, wK) for _, wK in below)
        out.append(ParabolicBound(I, wI, not dominated, wI.length == top))
    return out


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(i) for i in word) if word else "e"


def parse_word(text: str, rank: int) -> WeylElement:
    """Parse ``"1 2 1"``, ``"e"`` or ``"w0"``."""
    text = text.strip()
    if text in ("", "e"):
        return identity(rank)
    if text == "w0":
        return longest_element(rank)
    try:
        word = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"cannot parse Weyl word {text!r}") from None
    return from_word(word, rank)
