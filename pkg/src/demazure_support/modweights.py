"""Modular weight data: the roots singular for lam + rho mod p.

For a dominant weight ``lam`` and a prime ``p`` the set of positive roots
``alpha`` with ``<lam + rho, alpha^vee>`` divisible by ``p`` is a closed
subsystem.  For good primes it is Weyl-conjugate to the positive system of a
standard Levi, and the conjugating pair ``(x, I)`` drives the support
classification.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .rootsys import (
    RootDomainError,
    RootSystemData,
    RootVec,
    act_on_root,
    is_dominant,
    is_positive,
    pairing,
    rho,
    roots_spanned_by,
)
from .weyl import SimpleSubset, WeylElement, all_elements, reduced_word

__all__ = [
    "NotConjugateError",
    "ModularProfile",
    "is_prime",
    "phi_lambda_p",
    "is_p_regular",
    "j_lambda",
    "conjugate_to_simple",
    "is_good_prime",
    "modular_profile",
]


class NotConjugateError(ValueError):
    """No Weyl element carries the root set onto a standard subsystem."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check(rs: RootSystemData, lam: Sequence[int], p: int) -> tuple[int, ...]:
    lam = tuple(lam)
    if not is_prime(p):
        raise RootDomainError(f"{p} is not prime")
    if len(lam) != rs.rank:
        raise RootDomainError(f"weight {lam} has wrong length for {rs.name}")
    if not is_dominant(lam):
        raise RootDomainError(f"weight {lam} is not dominant")
    return lam


def phi_lambda_p(rs: RootSystemData, lam: Sequence[int], p: int) -> tuple[RootVec, ...]:
    lam = _check(rs, lam, p)
    shifted = tuple(a + b for a, b in zip(lam, rho(rs)))
    return tuple(a for a in rs.positive_roots if pairing(rs, shifted, a) % p == 0)


def is_p_regular(rs: RootSystemData, lam: Sequence[int], p: int) -> bool:
    return not phi_lambda_p(rs, lam, p)


def j_lambda(lam: Sequence[int]) -> SimpleSubset:
    if not is_dominant(lam):
        raise RootDomainError(f"weight {tuple(lam)} is not dominant")
    return frozenset(i for i, c in enumerate(lam, start=1) if c == 0)


def is_good_prime(rs: RootSystemData, p: int) -> bool:
    # type A has no bad primes
    if rs.type_letter == "A":
        return True
    raise RootDomainError(f"good primes are not tabulated for type {rs.type_letter}")


def _standard_image(rs: RootSystemData, x: WeylElement, phi_sub) -> Optional[SimpleSubset]:
    image = set()
    for a in phi_sub:
        b = act_on_root(rs, x, a)
        if not is_positive(b):
            return None
        image.add(b)
    I = frozenset(i for i, a in enumerate(rs.simple_roots, start=1) if a in image)
    if image == set(roots_spanned_by(rs, I)):
        return I
    return None


def conjugate_to_simple(
    rs: RootSystemData,
    phi_sub: Iterable[Sequence[int]],
    within: Optional[Iterable[int]] = None,
) -> tuple[WeylElement, SimpleSubset]:
    """Find x carrying the positive roots ``phi_sub`` onto Phi_I for some I.

    Then also x(phi_sub ∪ -phi_sub) = Phi_I ∪ -Phi_I.  Searches W (or the parabolic subgroup W_within) in order of length and
    then reduced word, so the first hit is the canonical choice.
    """
    phi_sub = [tuple(a) for a in phi_sub]
    allowed = None if within is None else frozenset(within)
    for x in all_elements(rs.rank):
        if allowed is not None and not set(reduced_word(x)) <= allowed:
            continue
        I = _standard_image(rs, x, phi_sub)
        if I is not None:
            return x, I
    raise NotConjugateError(f"{phi_sub} is not conjugate to a standard subsystem of {rs.name}")


@dataclass(frozen=True)
class ModularProfile:
    rs: RootSystemData
    lam: tuple[int, ...]
    p: int
    phi_lambda_p: tuple[RootVec, ...]
    regular: bool
    j_lambda: SimpleSubset
    conjugation: Optional[tuple[WeylElement, SimpleSubset]]

    @property
    def I(self) -> Optional[SimpleSubset]:
        return None if self.conjugation is None else self.conjugation[1]

    def to_json_obj(self) -> dict:
        conj = None
        if self.conjugation is not None:
            x, I = self.conjugation
            conj = {"x": reduced_word(x), "I": sorted(I)}
        return {
            "type": self.rs.name,
            "lambda": list(self.lam),
            "p": self.p,
            "phi_lambda_p": [list(a) for a in self.phi_lambda_p],
            "regular": self.regular,
            "j_lambda": sorted(self.j_lambda),
            "conjugation": conj,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def modular_profile(rs: RootSystemData, lam: Sequence[int], p: int) -> ModularProfile:
    lam = _check(rs, lam, p)
    phi = phi_lambda_p(rs, lam, p)
    try:
        conj = conjugate_to_simple(rs, phi)
    except NotConjugateError:
        conj = None
    return ModularProfile(
        rs=rs,
        lam=lam,
        p=p,
        phi_lambda_p=phi,
        regular=not phi,
        j_lambda=j_lambda(lam),
        conjugation=conj,
    )
