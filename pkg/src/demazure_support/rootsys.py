"""Root-system data for simply-laced types.

Weights are stored in the fundamental-weight basis, so ``lam[i]`` is the
pairing of ``lam`` with the i-th simple coroot.  Roots are stored in the
simple-root basis.  Only type A is guaranteed; the Cartan matrix is kept
general so that the layout does not assume it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .weyl import WeylElement

__all__ = [
    "ConfigurationError",
    "RootDomainError",
    "RootSystemData",
    "RootVec",
    "WeightVec",
    "build_root_system",
    "pairing",
    "rho",
    "reflect_weight",
    "reflect_root",
    "act_on_root",
    "simple_root",
    "root_to_weight",
]

# a root in simple-root coordinates
RootVec = tuple[int, ...]

# a weight in fundamental-weight coordinates
WeightVec = tuple[int, ...]

MAX_GUARANTEED_RANK = 4


class ConfigurationError(ValueError):
    """Unsupported Dynkin type or rank."""


class RootDomainError(ValueError):
    """An argument lies outside the domain of a root-system operation."""


def cartan_matrix(type_letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    if type_letter != "A":
        raise ConfigurationError(f"unsupported Dynkin type {type_letter!r}; only 'A' is implemented")
    if not 1 <= rank <= MAX_GUARANTEED_RANK:
        raise ConfigurationError(f"rank must be in 1..{MAX_GUARANTEED_RANK}, got {rank}")
    rows = []
    for i in range(rank):
        row = [0] * rank
        row[i] = 2
        if i > 0:
            row[i - 1] = -1
        if i < rank - 1:
            row[i + 1] = -1
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class RootSystemData:
    type_letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[RootVec, ...]
    coxeter_number: int

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    @property
    def simple_roots(self) -> tuple[RootVec, ...]:
        return tuple(simple_root(self.rank, i) for i in range(1, self.rank + 1))

    @property
    def roots(self) -> tuple[RootVec, ...]:
        return self.positive_roots + tuple(negate(a) for a in self.positive_roots)

    def is_root(self, alpha: Sequence[int]) -> bool:
        alpha = tuple(alpha)
        return alpha in self._root_set

    @cached_property
    def _root_set(self) -> frozenset[RootVec]:
        return frozenset(self.roots)

    def __str__(self) -> str:
        return self.name


def simple_root(rank: int, i: int) -> RootVec:
    """The i-th simple root (1-based) in simple-root coordinates."""
    return tuple(1 if j == i - 1 else 0 for j in range(rank))


def negate(alpha: RootVec) -> RootVec:
    return tuple(-c for c in alpha)


def _coroot_pairing(cartan, beta: Sequence[int], i: int) -> int:
    # <beta, alpha_i^vee> = sum_j beta_j * <alpha_j, alpha_i^vee> = sum_j beta_j * A[j][i]
    return sum(b * cartan[j][i - 1] for j, b in enumerate(beta))


def reflect_root(rs: RootSystemData, alpha: Sequence[int], i: int) -> RootVec:
    """Apply the simple reflection s_i to a root given in simple-root coordinates."""
    _check_index(rs, i)
    m = _coroot_pairing(rs.cartan, alpha, i)
    out = list(alpha)
    out[i - 1] -= m
    return tuple(out)


def _generate_positive_roots(rank: int, cartan) -> tuple[RootVec, ...]:
    found = [simple_root(rank, i) for i in range(1, rank + 1)]
    seen = set(found)
    frontier = list(found)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(1, rank + 1):
                m = _coroot_pairing(cartan, beta, i)
                image = list(beta)
                image[i - 1] -= m
                image = tuple(image)
                if any(c < 0 for c in image) or image in seen:
                    continue
                seen.add(image)
                nxt.append(image)
        found.extend(nxt)
        frontier = nxt
    return tuple(sorted(found, key=lambda r: (sum(r), tuple(-c for c in r))))


def build_root_system(type_letter: str, rank: int) -> RootSystemData:
    """Build the Cartan data and positive roots of a root system.

    >>> build_root_system("A", 2).positive_roots
    ((1, 0), (0, 1), (1, 1))
    """
    cartan = cartan_matrix(type_letter, rank)
    positive = _generate_positive_roots(rank, cartan)
    highest = max(positive, key=sum)
    return RootSystemData(
        type_letter=type_letter,
        rank=rank,
        cartan=cartan,
        positive_roots=positive,
        coxeter_number=sum(highest) + 1,
    )


def parse_type(spec: str) -> RootSystemData:
    """Parse a tag such as ``"A2"`` into root-system data."""
    spec = spec.strip()
    if len(spec) < 2 or not spec[1:].isdigit():
        raise ConfigurationError(f"cannot parse root system type {spec!r}")
    return build_root_system(spec[0].upper(), int(spec[1:]))


def _check_index(rs: RootSystemData, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise RootDomainError(f"simple index {i} out of range for {rs.name}")


def _check_weight(rs: RootSystemData, lam: Sequence[int]) -> None:
    if len(lam) != rs.rank:
        raise RootDomainError(f"weight {tuple(lam)} has wrong length for {rs.name}")


def pairing(rs: RootSystemData, lam: Sequence[int], alpha: Sequence[int]) -> int:
    """Return <lam, alpha^vee> for a weight in fundamental coordinates.

    In a simply-laced system the coroot of ``alpha`` has the same simple-coroot
    coordinates as ``alpha`` itself.
    """
    _check_weight(rs, lam)
    if not rs.is_root(alpha):
        raise RootDomainError(f"{tuple(alpha)} is not a root of {rs.name}")
    return sum(l * a for l, a in zip(lam, alpha))


def rho(rs: RootSystemData) -> WeightVec:
    return (1,) * rs.rank


def root_to_weight(rs: RootSystemData, alpha: Sequence[int]) -> WeightVec:
    """Express a root-lattice element in fundamental-weight coordinates."""
    return tuple(
        sum(a * rs.cartan[j][i] for j, a in enumerate(alpha)) for i in range(rs.rank)
    )


def reflect_weight(rs: RootSystemData, lam: Sequence[int], i: int) -> WeightVec:
    """s_i(lam) = lam - <lam, alpha_i^vee> alpha_i."""
    _check_index(rs, i)
    _check_weight(rs, lam)
    m = lam[i - 1]
    row = rs.cartan[i - 1]
    return tuple(l - m * a for l, a in zip(lam, row))


def is_dominant(lam: Sequence[int]) -> bool:
    return all(c >= 0 for c in lam)


def act_on_root(rs: RootSystemData, w: "WeylElement", alpha: Sequence[int]) -> RootVec:
    """Apply a Weyl group element to a root."""
    from .weyl import reduced_word

    if not rs.is_root(alpha):
        raise RootDomainError(f"{tuple(alpha)} is not a root of {rs.name}")
    out = tuple(alpha)
    for i in reversed(reduced_word(w)):
        out = reflect_root(rs, out, i)
    return out


def is_positive(alpha: Sequence[int]) -> bool:
    return all(c >= 0 for c in alpha) and any(alpha)


def roots_spanned_by(rs: RootSystemData, indices) -> tuple[RootVec, ...]:
    """Positive roots in the span of the simple roots with the given indices."""
    allowed = set(indices)
    return tuple(
        a for a in rs.positive_roots
        if all(c == 0 or (j + 1) in allowed for j, c in enumerate(a))
    )
