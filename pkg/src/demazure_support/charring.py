"""Characters in Z[X(T)] and the isobaric Demazure operators."""

from __future__ import annotations

import json
from collections.abc import Mapping
from typing import Iterator, Sequence

from .rootsys import RootDomainError, RootSystemData, is_dominant
from .weyl import WeylElement, reduced_word

__all__ = [
    "Character",
    "demazure_step",
    "demazure_character",
    "demazure_character_from_word",
    "dimension",
    "a2_demazure_dim_formula",
    "a2_weyl_dimension",
]


class Character(Mapping):
    """A finitely supported map from weights to nonzero integer multiplicities."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mu, m in dict(terms or {}).items():
            mu = tuple(mu)
            m = clean.get(mu, 0) + int(m)
            if m:
                clean[mu] = m
            else:
                clean.pop(mu, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, mu: Sequence[int], mult: int = 1) -> "Character":
        return cls({tuple(mu): mult})

    def __getitem__(self, mu):
        return self._terms.get(tuple(mu), 0)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, mu) -> bool:
        return tuple(mu) in self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Character):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "Character") -> "Character":
        out = dict(self._terms)
        for mu, m in other._terms.items():
            out[mu] = out.get(mu, 0) + m
        return Character(out)

    def __neg__(self) -> "Character":
        return Character({mu: -m for mu, m in self._terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __repr__(self) -> str:
        body = " + ".join(f"{m}*e{mu}" for mu, m in self.items())
        return f"Character({body or '0'})"

    def to_json_obj(self) -> list[dict]:
        return [{"weight": list(mu), "mult": m} for mu, m in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "Character":
        return cls({tuple(t["weight"]): t["mult"] for t in json.loads(text)})


def _step_monomial(rs: RootSystemData, mu: tuple[int, ...], i: int) -> dict:
    alpha = rs.cartan[i - 1]  # alpha_i in fundamental coordinates
    m = mu[i - 1]

    def shift(k):
        return tuple(c - k * a for c, a in zip(mu, alpha))

    if m >= 0:
        return {shift(k): 1 for k in range(m + 1)}
    if m == -1:
        return {}
    return {shift(-k): -1 for k in range(1, -m)}


def demazure_step(rs: RootSystemData, f: Character, i: int) -> Character:
    """Apply the isobaric Demazure operator for the simple root alpha_i.

    On e^mu with m = <mu, alpha_i^vee>: for m >= 0 the alpha_i-string
    e^mu + e^(mu - alpha_i) + ... + e^(mu - m alpha_i); for m = -1 zero; for
    m <= -2 minus e^(mu + alpha_i) + ... + e^(mu + (-m-1) alpha_i).
    """
    if not 1 <= i <= rs.rank:
        raise RootDomainError(f"simple index {i} out of range for {rs.name}")
    out: dict = {}
    for mu, mult in f.items():
        for nu, c in _step_monomial(rs, mu, i).items():
            out[nu] = out.get(nu, 0) + mult * c
    return Character(out)


def demazure_character_from_word(rs: RootSystemData, word: Sequence[int], lam: Sequence[int]) -> Character:
    """D_{word[0]} ... D_{word[-1]} e^lam (rightmost operator applied first)."""
    f = Character.monomial(lam)
    for i in reversed(word):
        f = demazure_step(rs, f, i)
    return f


def demazure_character(rs: RootSystemData, w: WeylElement, lam: Sequence[int]) -> Character:
    """Character of the Demazure module H^0(w, lam) for dominant ``lam``.

    >>> from demazure_support.rootsys import build_root_system
    >>> from demazure_support.weyl import from_word
    >>> A2 = build_root_system("A", 2)
    >>> dimension(demazure_character(A2, from_word([1, 2], 2), (2, 1)))
    7
    """
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise RootDomainError(f"weight {lam} has wrong length for {rs.name}")
    if not is_dominant(lam):
        raise RootDomainError(f"weight {lam} is not dominant")
    if w.rank != rs.rank:
        raise RootDomainError(f"Weyl element of rank {w.rank} used with {rs.name}")
    return demazure_character_from_word(rs, reduced_word(w), lam)


def dimension(f: Character) -> int:
    return sum(f.values())


def a2_demazure_dim_formula(lam: Sequence[int]) -> int:
    """Closed form for dim H^0(s_alpha s_beta, lam) in type A2."""
    if len(lam) != 2:
        raise RootDomainError("closed form is for rank 2 weights")
    l1, l2 = lam
    if l1 < 0 or l2 < 0:
        raise RootDomainError(f"weight {tuple(lam)} is not dominant")
    return (l2 + 1) * (2 * l1 + l2 + 2) // 2


def a2_weyl_dimension(lam: Sequence[int]) -> int:
    l1, l2 = lam
    return (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) // 2
