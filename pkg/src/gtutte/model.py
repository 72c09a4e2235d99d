"""The central data model: an ambient group with a finite multiset of elements.

An arrangement is (gamma, elements) where gamma is a finitely generated
abelian group presented by free rank and torsion invariant factors, and each
element is an integer coordinate vector (free coordinates first, then one
residue per torsion factor).  Duplicates are legal and order-stable: the
element list is a multiset.

Every invariant in this package is a sum over element subsets, weighted by
two numbers computed here once per subset and memoized: the rank of the
spanned subgroup and the invariant factors of the torsion of the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .intlinalg import FGAbelianGroup, IntMatrix, cokernel, saturation

MAX_ELEMENTS = 24  # every invariant sweeps all 2^n subsets


class CapExceeded(ValueError):
    """Input is beyond the documented desk-scale limits."""


def _invariant_chain(factors) -> tuple:
    """Canonicalize cyclic factors to an invariant-factor chain, e.g. (2,3)->(6,)."""
    fs = [int(f) for f in factors if int(f) > 1]
    changed = True
    while changed:
        changed = False
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                if fs[j] % fs[i]:
                    g = gcd(fs[i], fs[j])
                    fs[i], fs[j] = g, fs[i] * fs[j] // g
                    changed = True
    fs = [f for f in fs if f > 1]
    fs.sort()
    return tuple(fs)


@dataclass(frozen=True)
class GroupSpec:
    """Target group F x (S^1)^circles x R^reals, F finite abelian.

    The finite part is stored as an invariant-factor chain; arbitrary cyclic
    factor lists are canonicalized on construction.
    """

    f_torsion: tuple = ()
    circles: int = 0
    reals: int = 0

    def __post_init__(self):
        object.__setattr__(self, "f_torsion", _invariant_chain(self.f_torsion))
        if self.circles < 0 or self.reals < 0:
            raise ValueError("factor counts must be nonnegative")

    @staticmethod
    def cyclic(k: int) -> "GroupSpec":
        if k < 1:
            raise ValueError("cyclic order must be positive")
        return GroupSpec(f_torsion=(k,) if k > 1 else ())

    @staticmethod
    def circle() -> "GroupSpec":
        return GroupSpec(circles=1)

    @staticmethod
    def real(n: int = 1) -> "GroupSpec":
        return GroupSpec(reals=n)

    @staticmethod
    def trivial() -> "GroupSpec":
        return GroupSpec()

    @property
    def dim(self) -> int:
        return self.circles + self.reals

    @property
    def f_order(self) -> int:
        n = 1
        for f in self.f_torsion:
            n *= f
        return n


@dataclass(frozen=True)
class SubsetData:
    """Per-subset summary: rank of <S> and torsion factors of gamma/<S>."""

    mask: int
    rank: int
    torsion_factors: tuple


def multiplicity(data: SubsetData, spec: GroupSpec) -> int:
    """Number of homomorphisms from the quotient torsion into the target.

    Each torsion factor d contributes d per circle factor and gcd(d, f) per
    finite cyclic factor; real factors admit no nonzero map from a finite
    group, so they contribute nothing.
    """
    n = 1
    for d in data.torsion_factors:
        n *= d**spec.circles
        for f in spec.f_torsion:
            n *= gcd(d, f)
    return n


class Arrangement:
    """Immutable (group, element multiset) pair with memoized subset data."""

    def __init__(self, gamma: FGAbelianGroup, elements, name: str | None = None):
        if len(elements) > MAX_ELEMENTS:
            raise CapExceeded(
                f"{len(elements)} elements; the subset sweep is capped at "
                f"{MAX_ELEMENTS} (cost grows as 2^n)")
        f = gamma.free_rank
        reduced = []
        for idx, vec in enumerate(elements):
            vec = [int(x) for x in vec]
            if len(vec) != gamma.ngens:
                raise ValueError(
                    f"element {idx} has {len(vec)} coordinates, expected {gamma.ngens}")
            for i, e in enumerate(gamma.torsion):
                vec[f + i] %= e
            reduced.append(tuple(vec))
        self.gamma = gamma
        self.elements = tuple(reduced)
        self.name = name
        self._subset_cache: dict[int, SubsetData] = {}
        self._saturation_cache: dict[int, IntMatrix] = {}
        self._lcm_period: int | None = None

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def masks(self):
        return range(1 << self.n)

    def mask_elements(self, mask: int):
        return [self.elements[i] for i in range(self.n) if mask >> i & 1]

    def subset_matrix(self, mask: int) -> IntMatrix:
        return IntMatrix.from_rows(self.mask_elements(mask), self.gamma.ngens)

    def subset_data(self, mask: int) -> SubsetData:
        """Rank and quotient torsion factors of the masked subset (memoized)."""
        data = self._subset_cache.get(mask)
        if data is None:
            quot = cokernel(self.subset_matrix(mask), self.gamma)
            data = SubsetData(mask, self.gamma.free_rank - quot.free_rank,
                              quot.torsion)
            self._subset_cache[mask] = data
        return data

    def saturation_matrix(self, mask: int) -> IntMatrix:
        """HNF basis of the saturated span of the subset, in the free quotient."""
        m = self._saturation_cache.get(mask)
        if m is None:
            m = saturation(self.subset_matrix(mask), self.gamma)
            self._saturation_cache[mask] = m
        return m

    @property
    def rank(self) -> int:
        """Rank of the subgroup spanned by all elements."""
        return self.subset_data(self.full_mask).rank

    def torsion_mask(self) -> int:
        """Mask of the elements whose free coordinates all vanish."""
        f = self.gamma.free_rank
        mask = 0
        for i, vec in enumerate(self.elements):
            if not any(vec[:f]):
                mask |= 1 << i
        return mask

    def lcm_period(self) -> int:
        """lcm over all subsets of the largest quotient torsion factor."""
        if self._lcm_period is None:
            period = 1
            for mask in self.masks():
                factors = self.subset_data(mask).torsion_factors
                if factors:
                    period = lcm(period, factors[-1])
            self._lcm_period = period
        return self._lcm_period

    def without_torsion(self) -> "Arrangement":
        """The arrangement with all torsion elements dropped."""
        tmask = self.torsion_mask()
        kept = [v for i, v in enumerate(self.elements) if not tmask >> i & 1]
        return Arrangement(self.gamma, kept, name=self.name)

    def __repr__(self):
        return (f"Arrangement(Z^{self.gamma.free_rank}"
                + "".join(f"+Z/{e}" for e in self.gamma.torsion)
                + f", {list(self.elements)})")

    def describe(self) -> str:
        return self.name or repr(self)
