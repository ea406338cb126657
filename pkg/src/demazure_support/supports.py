"""B_1-support varieties of Demazure modules H^0(w, lam).

Concrete answers are produced for root systems A1 and A2, where every
B-stable irreducible closed subvariety of the nilradical u is one of

    0  ⊂  k X_{a+b}  ⊂  u_a = k X_a + k X_{a+b},  u_b = k X_b + k X_{a+b}  ⊂  u

and supports are unions of these.  In higher rank only the cases settled in
closed form (w the longest element of W^{J_lam}, or w = w_I at the level of
the parabolic P_I) are answered, symbolically; everything else is reported
as unresolved together with its parabolic bound sandwich.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .modweights import conjugate_to_simple, j_lambda, phi_lambda_p
from .rootsys import RootDomainError, RootSystemData, build_root_system, is_dominant, roots_spanned_by
from .weyl import (
    SimpleSubset,
    WeylElement,
    all_elements,
    bruhat_leq,
    from_word,
    long_element,
    longest_coset_rep,
    parabolic_lower_bounds,
    subsets,
    support,
)

__all__ = [
    "Variety",
    "GSatIntersect",
    "LeviSatIntersect",
    "FullNullcone",
    "Unresolved",
    "Orbit",
    "SymbolicGU",
    "SymbolicMeet",
    "Classification",
    "SupportQuery",
    "Bounds",
    "restricted_nullcone_u",
    "b_stable_closure",
    "support_A1",
    "support_A2",
    "classify_A2",
    "classify",
    "support_variety",
    "support_w0J_symbolic",
    "support_wI_symbolic",
    "resolve",
    "g_saturate",
    "saturation_violations",
    "check_saturation_monotone",
    "parabolic_bounds",
    "condition_A",
    "condition_B",
]


def _fmt_set(I: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(I)) + "}"


class Variety(enum.Enum):
    """B-stable closed subvarieties of u in rank at most 2."""

    ZERO = "0"
    LINE_HIGH = "line[a+b]"
    UA = "u_a"
    UB = "u_b"
    UAUB = "u_a|u_b"
    FULL_U = "u"

    def __str__(self) -> str:
        return self.value

    @property
    def pieces(self) -> frozenset[str]:
        return _PIECES[self]

    def leq(self, other: "Variety") -> bool:
        return self.pieces <= other.pieces

    def meet(self, other: "Variety") -> "Variety":
        return _BY_PIECES[self.pieces & other.pieces]

    def swap(self) -> "Variety":
        """Exchange the roles of alpha and beta."""
        return {Variety.UA: Variety.UB, Variety.UB: Variety.UA}.get(self, self)


# each label as the set of irreducible B-stable pieces it contains
_PIECES = {
    Variety.ZERO: frozenset({"0"}),
    Variety.LINE_HIGH: frozenset({"0", "L"}),
    Variety.UA: frozenset({"0", "L", "Ua"}),
    Variety.UB: frozenset({"0", "L", "Ub"}),
    Variety.UAUB: frozenset({"0", "L", "Ua", "Ub"}),
    Variety.FULL_U: frozenset({"0", "L", "Ua", "Ub", "U"}),
}
_BY_PIECES = {v: k for k, v in _PIECES.items()}


@dataclass(frozen=True)
class GSatIntersect:
    """(G · u_I) ∩ N_1(u)."""

    I: SimpleSubset

    def __str__(self) -> str:
        return f"GSat(I={_fmt_set(self.I)})∩N1(u)"


@dataclass(frozen=True)
class LeviSatIntersect:
    """(L_I · u_J) ∩ N_1(p_I); a (P_I)_1-support, not a B_1-support."""

    I: SimpleSubset
    J: SimpleSubset
    level: str = "P_I"

    def __str__(self) -> str:
        return f"LSat(I={_fmt_set(self.I)},J={_fmt_set(self.J)})∩N1(p_I)"


@dataclass(frozen=True)
class FullNullcone:
    def __str__(self) -> str:
        return "N1(u)"


class Orbit(enum.Enum):
    """G-saturations in sl_3 (and sl_2), totally ordered."""

    ZERO = "0"
    MIN = "Omin"
    NILCONE = "N"

    def __str__(self) -> str:
        return self.value

    def __le__(self, other: "Orbit") -> bool:
        return _ORBIT_RANK[self] <= _ORBIT_RANK[other]

    def __lt__(self, other: "Orbit") -> bool:
        return _ORBIT_RANK[self] < _ORBIT_RANK[other]

    def meet(self, other: "Orbit") -> "Orbit":
        return self if self <= other else other


_ORBIT_RANK = {Orbit.ZERO: 0, Orbit.MIN: 1, Orbit.NILCONE: 2}


@dataclass(frozen=True)
class SymbolicGU:
    """The closure of G · u_I."""

    I: SimpleSubset

    def __str__(self) -> str:
        return f"G·u_{_fmt_set(self.I)}"


@dataclass(frozen=True)
class SymbolicMeet:
    parts: tuple[SymbolicGU, ...]

    def __str__(self) -> str:
        return " ∩ ".join(str(p) for p in self.parts) if self.parts else "N"


OrbitLabel = Union[Orbit, SymbolicGU, SymbolicMeet]


@dataclass(frozen=True)
class Bounds:
    lower: OrbitLabel
    upper: OrbitLabel
    lower_element: WeylElement
    upper_elements: tuple[WeylElement, ...]


@dataclass(frozen=True)
class Unresolved:
    """No closed form is known; only the saturated bounds are reported."""

    bounds: Bounds

    def __str__(self) -> str:
        return f"unresolved[{self.bounds.lower} ⊆ G·V ⊆ {self.bounds.upper}]"


VarietyExpr = Union[Variety, GSatIntersect, LeviSatIntersect, FullNullcone, Unresolved]


@dataclass(frozen=True)
class Classification:
    variety: VarietyExpr
    branch: str


@dataclass(frozen=True)
class SupportQuery:
    rs: RootSystemData
    p: int
    w: WeylElement
    lam: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(self.lam))
        _validate(self.rs, self.w, self.lam, self.p)


def _validate(rs: RootSystemData, w: WeylElement, lam: Sequence[int], p: int) -> None:
    if w.rank != rs.rank:
        raise RootDomainError(f"Weyl element of rank {w.rank} used with {rs.name}")
    if len(lam) != rs.rank:
        raise RootDomainError(f"weight {tuple(lam)} has wrong length for {rs.name}")
    if not is_dominant(lam):
        raise RootDomainError(f"weight {tuple(lam)} is not dominant")
    phi_lambda_p(rs, lam, p)  # validates p


def restricted_nullcone_u(rs: RootSystemData, p: int) -> VarietyExpr:
    """N_1(u): all of u unless p = 2 in rank 2, where it is u_a ∪ u_b."""
    if rs.rank > 2:
        return FullNullcone()
    return _nullcone(rs.rank, p)


def _nullcone(rank: int, p: int) -> Variety:
    if rank == 1:
        return Variety.FULL_U
    return Variety.FULL_U if p >= 3 else Variety.UAUB


def b_stable_closure(a, b, c) -> Variety:
    """Smallest B-stable label containing a X_a + b X_b + c X_{a+b}."""
    if a and b:
        return Variety.FULL_U
    if a:
        return Variety.UA
    if b:
        return Variety.UB
    if c:
        return Variety.LINE_HIGH
    return Variety.ZERO


def _as_weight(lam) -> tuple[int, ...]:
    return (lam,) if isinstance(lam, int) else tuple(lam)


def support_A1(w: WeylElement, lam, p: int) -> Variety:
    lam = _as_weight(lam)
    if w.rank != 1 or len(lam) != 1:
        raise RootDomainError("support_A1 needs rank-1 input")
    if lam[0] < 0:
        raise RootDomainError(f"weight {lam} is not dominant")
    if w.length == 0:
        return Variety.FULL_U
    return Variety.ZERO if (lam[0] + 1) % p == 0 else Variety.FULL_U


def condition_A(lam: Sequence[int], p: int) -> bool:
    """lam is p-regular: p divides none of l1+1, l2+1, l1+l2+2."""
    l1, l2 = lam
    return (l1 + 1) % p != 0 and (l2 + 1) % p != 0 and (l1 + l2 + 2) % p != 0


def condition_B(lam: Sequence[int], p: int) -> bool:
    """p does not divide dim H^0(s_a s_b, lam) = (l2+1)(2 l1 + l2 + 2)/2."""
    l1, l2 = lam
    return (l2 + 1) % p != 0 and (2 * l1 + l2 + 2) % p != 0


def _length_two(lam: tuple[int, int], p: int) -> Classification:
    """Support of H^0(s_a s_b, lam)."""
    l1, l2 = lam
    if p == 2:
        if l2 == 0 and l1 % 2 == 1:
            return Classification(Variety.UA, "length 2, p=2, lam=(2n-1,0)")
        if l2 == 0:
            return Classification(Variety.UAUB, "length 2, p=2, lam=(2n,0)")
        return Classification(Variety.UAUB, "length 2, p=2, lam2!=0")
    if condition_A(lam, p):
        return Classification(Variety.FULL_U, "length 2, (A): lam p-regular")
    if condition_B(lam, p):
        return Classification(Variety.FULL_U, "length 2, (B): p does not divide dim")
    if l2 == 0:
        # the case split is exhaustive: failing (A) and (B) with l2 = 0 forces p | l1+1
        assert (l1 + 1) % p == 0, (lam, p)
        return Classification(Variety.UA, "length 2, lam=(np-1,0)")
    return Classification(Variety.UAUB, "length 2, lam2!=0, neither (A) nor (B)")


def _swapped(result: Classification) -> Classification:
    return Classification(result.variety.swap(), result.branch + " [alpha<->beta]")


_S_A = from_word([1], 2)
_S_B = from_word([2], 2)
_S_AB = from_word([1, 2], 2)
_S_BA = from_word([2, 1], 2)
_A2 = build_root_system("A", 2)


def _resolve_I(rank: int, I: SimpleSubset, p: int) -> Variety:
    # (G·u_I) ∩ N_1(u): G·u_∅ is the nilpotent cone; for |I|=1 in sl_3 it is the
    # minimal orbit closure (rank <= 1), which meets u in {ab = 0} = u_a ∪ u_b
    if not I:
        return _nullcone(rank, p)
    if len(I) == rank:
        return Variety.ZERO
    if rank == 2:
        return Variety.UAUB
    raise RootDomainError("concrete resolution only in rank <= 2")


def classify_A2(w: WeylElement, lam: Sequence[int], p: int) -> Classification:
    """Total classifier for type A2, with the table or theorem branch used."""
    rs = _A2
    lam = tuple(lam)
    _validate(rs, w, lam, p)
    l1, l2 = lam
    top = _nullcone(2, p)
    if w.length == 0:
        return Classification(top, "w=e, all lam")
    if w == _S_A:
        if (l1 + 1) % p == 0:
            return Classification(Variety.UA, "w=s_a, p | l1+1")
        return Classification(top, "w=s_a, p !| l1+1")
    if w == _S_B:
        if (l2 + 1) % p == 0:
            return Classification(Variety.UB, "w=s_b, p | l2+1")
        return Classification(top, "w=s_b, p !| l2+1")
    if w == _S_AB:
        return _length_two(lam, p)
    if w == _S_BA:
        return _swapped(_length_two((l2, l1), p))
    x, I = conjugate_to_simple(rs, phi_lambda_p(rs, lam, p))
    return Classification(_resolve_I(2, I, p), f"w=w0, |I|={len(I)}")


def support_A2(w: WeylElement, lam: Sequence[int], p: int) -> Variety:
    return classify_A2(w, lam, p).variety


def support_w0J_symbolic(rs: RootSystemData, lam: Sequence[int], p: int) -> GSatIntersect:
    """Support of H^0(w, lam) for w the longest element of W^{J_lam}."""
    _, I = conjugate_to_simple(rs, phi_lambda_p(rs, lam, p))
    return GSatIntersect(I)


def support_wI_symbolic(rs: RootSystemData, I: Iterable[int], lam: Sequence[int], p: int) -> LeviSatIntersect:
    """(P_I)_1-support of H^0(w_I, lam), conjugating only inside W_I."""
    I = frozenset(I)
    levi_roots = set(roots_spanned_by(rs, I))
    phi = [a for a in phi_lambda_p(rs, lam, p) if a in levi_roots]
    _, J = conjugate_to_simple(rs, phi, within=I)
    return LeviSatIntersect(I, J)


def resolve(rs: RootSystemData, expr: VarietyExpr, p: int) -> VarietyExpr:
    """Turn a symbolic value into a concrete label where rank allows."""
    if isinstance(expr, Variety) or rs.rank > 2:
        return expr
    if isinstance(expr, GSatIntersect):
        return _resolve_I(rs.rank, expr.I, p)
    if isinstance(expr, FullNullcone):
        return restricted_nullcone_u(rs, p)
    return expr


def g_saturate(v: VarietyExpr) -> OrbitLabel:
    if isinstance(v, Variety):
        if v is Variety.ZERO:
            return Orbit.ZERO
        if v is Variety.FULL_U:
            return Orbit.NILCONE
        return Orbit.MIN
    if isinstance(v, GSatIntersect):
        return SymbolicGU(v.I)
    if isinstance(v, LeviSatIntersect):
        return SymbolicGU(v.J)
    if isinstance(v, FullNullcone):
        return SymbolicGU(frozenset())
    raise TypeError(f"cannot saturate {v!r}")


def classify(rs: RootSystemData, w: WeylElement, lam: Sequence[int], p: int) -> Classification:
    """Dispatch on rank: concrete in rank <= 2, symbolic or unresolved above."""
    lam = tuple(lam)
    _validate(rs, w, lam, p)
    if rs.rank == 1:
        branch = "w=e" if w.length == 0 else ("w=s_a, p | l+1" if (lam[0] + 1) % p == 0 else "w=s_a, p !| l+1")
        return Classification(support_A1(w, lam, p), branch)
    if rs.rank == 2:
        return classify_A2(w, lam, p)
    if w == longest_coset_rep(j_lambda(lam), rs.rank):
        return Classification(support_w0J_symbolic(rs, lam, p), "w=w_{0,J_lam}")
    for I in subsets(rs.rank):
        if w == long_element(I, rs.rank):
            return Classification(support_wI_symbolic(rs, I, lam, p), "w=w_I, (P_I)_1-support")
    return Classification(Unresolved(parabolic_bounds(rs, w, lam, p)), "unresolved, parabolic bounds")


def support_variety(rs: RootSystemData, w: WeylElement, lam: Sequence[int], p: int) -> VarietyExpr:
    return classify(rs, w, lam, p).variety


def _saturated(rs, w, lam, p) -> OrbitLabel:
    return g_saturate(support_variety(rs, w, lam, p))


def saturation_violations(
    rs: RootSystemData, p: int, lam: Sequence[int], order: str = "bruhat"
) -> list[tuple[WeylElement, WeylElement, Orbit, Orbit]]:
    """Pairs w1 < w2 whose saturated supports fail G·V(w2) ⊆ G·V(w1).

    ``order`` is ``"bruhat"`` or ``"left-weak"`` (w2 = s w1 with lengths adding).
    """
    if rs.rank > 2:
        raise RootDomainError("saturation check needs concrete labels (rank <= 2)")
    elems = all_elements(rs.rank)
    sat = {w: _saturated(rs, w, lam, p) for w in elems}
    out = []
    for w1 in elems:
        for w2 in elems:
            if w1 == w2 or not _below(w1, w2, order):
                continue
            if not sat[w2] <= sat[w1]:
                out.append((w1, w2, sat[w1], sat[w2]))
    return out


def _below(u: WeylElement, v: WeylElement, order: str) -> bool:
    if order == "bruhat":
        return bruhat_leq(u, v)
    if order == "left-weak":
        # v = x u with l(v) = l(x) + l(u)
        x = v * u.inverse()
        return x.length + u.length == v.length
    raise ValueError(f"unknown order {order!r}")


def check_saturation_monotone(rs: RootSystemData, p: int, lam: Sequence[int], order: str = "bruhat") -> bool:
    return not saturation_violations(rs, p, lam, order)


def parabolic_bounds(rs: RootSystemData, v: WeylElement, lam: Sequence[int], p: int) -> Bounds:
    """Saturated support at w_{S(v)} and the meet over maximal w_I <= v."""
    lower_el = long_element(support(v), rs.rank)
    maximal = [b for b in parabolic_lower_bounds(v) if b.maximal]
    if rs.rank <= 2:
        lower = _saturated(rs, lower_el, lam, p)
        upper = Orbit.NILCONE
        for b in maximal:
            upper = upper.meet(_saturated(rs, b.element, lam, p))
    else:
        lower = g_saturate(support_wI_symbolic(rs, support(v), lam, p))
        upper = SymbolicMeet(tuple(g_saturate(support_wI_symbolic(rs, b.I, lam, p)) for b in maximal))
    return Bounds(lower, upper, lower_el, tuple(b.element for b in maximal))
