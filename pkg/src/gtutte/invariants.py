"""Closed-form invariants computed by exact subset sums.

The bivariate subset sum over all 2^n element subsets, with weights given by
the homomorphism-count multiplicity, specializes to everything else here:
the classical Tutte polynomial (real target), the arithmetic Tutte
polynomial (circle target), the characteristic polynomial of the target
group, and the chromatic quasi-polynomial (cyclic targets, one constituent
per residue class mod the lcm period).

Constituents are produced symbolically from gcds with a residue
representative, never by interpolating point counts; the brute-force counts
live in the oracle module and stay an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import model
from .model import Arrangement, GroupSpec
from .poly import BiPoly, UniPoly, substitute_xy


class HypothesisError(ValueError):
    """A stated hypothesis of the requested identity is violated."""


class IdentityCheckError(AssertionError):
    """A built-in cross-check identity failed (this signals a bug)."""


def g_tutte(arr: Arrangement, spec: GroupSpec) -> BiPoly:
    """Subset sum of m(S) * (x-1)^(rank(A)-rank(S)) * (y-1)^(#S-rank(S))."""
    r_full = arr.rank
    terms: dict = {}
    for mask in arr.masks():
        data = arr.subset_data(mask)
        m = model.multiplicity(data, spec)
        a = r_full - data.rank
        b = mask.bit_count() - data.rank
        for i in range(a + 1):
            ci = m * comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                key = (i, j)
                terms[key] = terms.get(key, 0) + ci * comb(b, j) * (-1) ** (b - j)
    return BiPoly(terms)


def arithmetic_tutte(arr: Arrangement) -> BiPoly:
    """The circle-target specialization: weights are the quotient torsion orders."""
    return g_tutte(arr, GroupSpec.circle())


def g_characteristic(arr: Arrangement, spec: GroupSpec) -> UniPoly:
    """(-1)^rank(A) * t^(rank(gamma)-rank(A)) * T(1-t, 0), exactly."""
    r_full = arr.rank
    u = substitute_xy(g_tutte(arr, spec))
    sign = -1 if r_full % 2 else 1
    return UniPoly.monomial(arr.gamma.free_rank - r_full, sign) * u


@dataclass(frozen=True)
class QuasiPolynomial:
    """Period plus one exact integer polynomial per residue class.

    constituents[k-1] is the polynomial giving the value at arguments
    congruent to k mod period, for k = 1..period.
    """

    period: int
    constituents: tuple

    def constituent(self, k: int) -> UniPoly:
        if k < 1:
            raise ValueError("residue representative must be positive")
        return self.constituents[(k - 1) % self.period]

    def __call__(self, q: int) -> int:
        return self.constituent(q)(q)

    def serialize(self) -> dict:
        return {"period": self.period,
                "constituents": [p.serialize() for p in self.constituents]}


def chromatic_quasi(arr: Arrangement) -> QuasiPolynomial:
    """All constituents of the cyclic-target characteristic polynomial.

    The k-th constituent is the characteristic polynomial for the cyclic
    target of order k; it only depends on gcds of k with the quotient
    torsion factors, all of which divide the lcm period, so it is well
    defined on residues.
    """
    period = arr.lcm_period()
    constituents = tuple(
        g_characteristic(arr, GroupSpec.cyclic(k)) for k in range(1, period + 1))
    return QuasiPolynomial(period, constituents)


def first_constituent(arr: Arrangement) -> UniPoly:
    """Constituent 1: zero when a torsion element is present, else the
    characteristic polynomial of the real-target arrangement."""
    return g_characteristic(arr, GroupSpec.cyclic(1))


def toric_characteristic(arr: Arrangement) -> UniPoly:
    """Characteristic polynomial of the layer poset over the circle target.

    Requires a free ambient group and no zero element; outside those
    hypotheses the identity with the arithmetic Tutte specialization has no
    contract, so this refuses instead of extrapolating.
    """
    if arr.gamma.torsion:
        raise HypothesisError("ambient group must be free (torsion present)")
    zero = (0,) * arr.gamma.ngens
    if zero in arr.elements:
        raise HypothesisError("the zero element is not allowed here")
    last = g_characteristic(arr, GroupSpec.cyclic(arr.lcm_period()))
    r_full = arr.rank
    sign = -1 if r_full % 2 else 1
    via_arith = UniPoly.monomial(arr.gamma.free_rank - r_full, sign) \
        * substitute_xy(arithmetic_tutte(arr))
    if last != via_arith:
        raise IdentityCheckError(
            f"last constituent {last} != arithmetic Tutte specialization {via_arith}")
    return last


def beta_coefficients(arr: Arrangement, q: int,
                      qp: QuasiPolynomial | None = None) -> list:
    """Unsigned coefficients of the constituent at q's residue class.

    beta_j(q) = (-1)^(rank(gamma)-j) * [t^j] constituent; all are checked
    nonnegative.  Indexed j = 0..rank(gamma).
    """
    if q < 1:
        raise ValueError("q must be positive")
    if qp is None:
        qp = chromatic_quasi(arr)
    c = qp.constituent(q)
    r = arr.gamma.free_rank
    betas = []
    for j in range(r + 1):
        b = (-1) ** (r - j) * c.coefficient(j)
        if b < 0:
            raise IdentityCheckError(
                f"beta_{j}({q}) = {b} < 0 on {arr.describe()}")
        betas.append(b)
    return betas


def chen_wang_compare(arr: Arrangement, a: int, b: int) -> list:
    """Coefficientwise comparison beta_j(a) <= beta_j(b) for a | b."""
    if a < 1 or b < 1 or b % a:
        raise ValueError("need positive a dividing b")
    qp = chromatic_quasi(arr)
    beta_a = beta_coefficients(arr, a, qp)
    beta_b = beta_coefficients(arr, b, qp)
    return [{"j": j, "beta_a": x, "beta_b": y, "ok": x <= y}
            for j, (x, y) in enumerate(zip(beta_a, beta_b))]


def reciprocity_eval(arr: Arrangement, k: int, q: int,
                     qp: QuasiPolynomial | None = None) -> int:
    """(-1)^rank(gamma) * constituent_k(-q); nonnegative for every k, q >= 1,
    since it equals sum_j beta_j(k) * q^j."""
    if q < 1:
        raise ValueError("q must be positive")
    if qp is None:
        qp = chromatic_quasi(arr)
    val = (-1) ** arr.gamma.free_rank * qp.constituent(k)(-q)
    if val < 0:
        raise IdentityCheckError(
            f"reciprocity value {val} < 0 at k={k}, q={q} on {arr.describe()}")
    return val


def leading_part(arr: Arrangement, spec: GroupSpec) -> int:
    """Top-degree coefficient of the characteristic polynomial times
    (#F)^rank(gamma): the zero-dimensional-target count of surviving
    components."""
    lead = g_characteristic(arr, spec).coefficient(arr.gamma.free_rank)
    return lead * spec.f_order ** arr.gamma.free_rank


def _divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def minimal_period(qp: QuasiPolynomial) -> int:
    """Smallest divisor of the period under which the constituents repeat."""
    for p in _divisors(qp.period):
        if all(qp.constituents[k] == qp.constituents[k % p]
               for k in range(qp.period)):
            return p
    return qp.period
