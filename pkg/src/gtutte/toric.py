"""Layer poset of the circle-target arrangement.

Every intersection of circle-target kernels is a disjoint union of torsion
translates of a subtorus, so a layer is pinned down exactly by a canonical
pair: the saturated subgroup on which its points are constant (an HNF
lattice in the free quotient, with all ambient torsion implicitly included)
and the common character value on that subgroup's generators, stored as
exact rationals mod 1.  Deduplication across defining subsets is equality of
those keys, and membership of a layer in the k-torsion subposet is a
divisibility test on the character denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import model
from .intlinalg import FGAbelianGroup, IntMatrix, hnf_solve, hom_enumerate
from .invariants import IdentityCheckError, g_characteristic
from .model import Arrangement, CapExceeded, GroupSpec
from .posets import LayerPoset

MAX_LAYER_ELEMENTS = 12
MAX_LAYERS = 10_000


@dataclass(frozen=True)
class ToricLayer:
    """One connected component: (saturated span, character) with derived data."""

    span: IntMatrix          # HNF rows in the free quotient
    chi_free: tuple          # character values on the span rows, Fractions in [0,1)
    chi_tor: tuple           # character values on the ambient torsion generators
    rank: int
    dim: int
    order: int               # order of the character: lcm of denominators
    in_partial: bool         # no torsion element of the localization is killed
    localization: int        # mask of elements whose kernel contains this layer

    def component_key(self):
        return self.chi_tor

    def sort_key(self):
        return (self.rank, self.span.data, self.chi_tor, self.chi_free)

    def key_str(self) -> str:
        span = ";".join(",".join(str(x) for x in row) for row in self.span.data)
        chi = ",".join(str(v) for v in self.chi_free + self.chi_tor)
        return f"[{span}]({chi})"


def _char_value(chi_free, chi_tor, coeffs, tor_part) -> Fraction:
    total = sum((c * v for c, v in zip(coeffs, chi_free)), Fraction(0))
    total += sum((int(a) * v for a, v in zip(tor_part, chi_tor)), Fraction(0))
    return total % 1


def _toric_leq(big: ToricLayer, small: ToricLayer) -> bool:
    """big <= small in the poset, i.e. big contains small as a subset."""
    if big.chi_tor != small.chi_tor:
        return False
    for row, want in zip(big.span.data, big.chi_free):
        coeffs = hnf_solve(small.span, row)
        if coeffs is None:
            return False
        got = sum((c * v for c, v in zip(coeffs, small.chi_free)), Fraction(0)) % 1
        if got != want:
            return False
    return True


def enumerate_toric_layers(arr: Arrangement, max_layers: int = MAX_LAYERS) -> LayerPoset:
    """Enumerate all layers over all element subsets and build the poset.

    Per subset, the components are the characters of the finite quotient
    (saturation mod span), produced by homomorphism enumeration into a
    cyclic group of exponent order; per-subset component counts are checked
    against the quotient torsion order on the way.
    """
    if arr.n > MAX_LAYER_ELEMENTS:
        raise CapExceeded(
            f"{arr.n} elements; layer enumeration is capped at {MAX_LAYER_ELEMENTS}")
    gamma = arr.gamma
    f = gamma.free_rank
    torsion_elems = [i for i in range(arr.n) if arr.torsion_mask() >> i & 1]

    seen: dict = {}
    keys: list = []
    raw: list = []  # (span, chi_free, chi_tor, rank) per new key
    subset_members: dict = {}

    for mask in arr.masks():
        data = arr.subset_data(mask)
        span = arr.saturation_matrix(mask)
        r = span.rows
        exponent = data.torsion_factors[-1] if data.torsion_factors else 1
        gens = []
        for vec in arr.mask_elements(mask):
            coeffs = hnf_solve(span, vec[:f])
            if coeffs is None:
                raise IdentityCheckError("element escaped its own saturation")
            gens.append(tuple(coeffs) + tuple(vec[f:]))
        gens_m = IntMatrix.from_rows(gens, r + len(gamma.torsion))
        homs = hom_enumerate(gens_m, FGAbelianGroup(r, gamma.torsion), (exponent,))

        expected = 1
        for d in data.torsion_factors:
            expected *= d
        if len(homs) != expected:
            raise IdentityCheckError(
                f"subset {mask:b}: {len(homs)} components, expected {expected}")

        members = []
        for h in homs:
            chi = tuple(Fraction(img[0], exponent) for img in h)
            key = (span.data, chi)
            idx = seen.get(key)
            if idx is None:
                idx = len(keys)
                seen[key] = idx
                keys.append(key)
                raw.append((span, chi[:r], chi[r:], data.rank))
                if len(keys) > max_layers:
                    raise CapExceeded(f"more than {max_layers} layers")
            members.append(idx)
        subset_members[mask] = members

    layers = []
    for span, chi_free, chi_tor, rank in raw:
        order = 1
        for v in chi_free + chi_tor:
            order = lcm(order, v.denominator)
        loc = 0
        for i, vec in enumerate(arr.elements):
            coeffs = hnf_solve(span, vec[:f])
            if coeffs is not None and \
                    _char_value(chi_free, chi_tor, coeffs, vec[f:]) == 0:
                loc |= 1 << i
        partial = all(
            sum((int(arr.elements[i][f + j]) * v for j, v in enumerate(chi_tor)),
                Fraction(0)) % 1 != 0
            for i in torsion_elems)
        layers.append(ToricLayer(span, chi_free, chi_tor, rank, f - rank,
                                 order, partial, loc))

    # canonical order, then remap the per-subset membership lists
    perm = sorted(range(len(layers)), key=lambda i: layers[i].sort_key())
    inv = {old: new for new, old in enumerate(perm)}
    layers = [layers[i] for i in perm]
    subset_components = {mask: tuple(sorted(inv[i] for i in members))
                         for mask, members in subset_members.items()}
    return LayerPoset(arr, layers, subset_components, _toric_leq)


def k_total_subposet(poset: LayerPoset, k: int) -> tuple:
    """Layers containing a k-torsion point: character order divides k.

    The result is an order ideal (downward closed), which is checked.
    """
    if k < 1:
        raise ValueError("k must be positive (nonpositive k is undefined here)")
    chosen = tuple(i for i, lay in enumerate(poset.layers) if k % lay.order == 0)
    inside = set(chosen)
    for j in chosen:
        if not poset.strict_downs[j] <= inside:
            raise IdentityCheckError(f"k-torsion subposet not downward closed at {j}")
    return chosen


def partial_subposet(poset: LayerPoset) -> tuple:
    """Layers whose component kills no torsion element of the arrangement.

    Checked: the selection is upward closed, and the number of its minimal
    elements matches the inclusion-exclusion count of surviving components.
    """
    chosen = tuple(i for i, lay in enumerate(poset.layers) if lay.in_partial)
    inside = set(chosen)
    for j in range(poset.n):
        if j not in inside and poset.strict_downs[j] & inside:
            raise IdentityCheckError("partial subposet is not upward closed")
    arr = poset.arr
    minimal_count = sum(1 for i in chosen if poset.layers[i].rank == 0)
    expected = _surviving_component_count(arr)
    if minimal_count != expected:
        raise IdentityCheckError(
            f"{minimal_count} surviving components, expected {expected}")
    return chosen


def _surviving_component_count(arr: Arrangement) -> int:
    """Count characters of the ambient torsion that kill no torsion element,
    by direct enumeration of the torsion character group."""
    gamma = arr.gamma
    f = gamma.free_rank
    exponent = gamma.exponent()
    tor = FGAbelianGroup(0, gamma.torsion)
    chars = hom_enumerate(IntMatrix.from_rows([], tor.ngens), tor, (exponent,))
    torsion_vecs = [arr.elements[i][f:] for i in range(arr.n)
                    if arr.torsion_mask() >> i & 1]
    count = 0
    for h in chars:
        vals = [img[0] for img in h]
        if all(sum(a * v for a, v in zip(vec, vals)) % exponent
               for vec in torsion_vecs):
            count += 1
    return count


def k_partial_characteristic(arr: Arrangement, k: int,
                             poset: LayerPoset | None = None,
                             check: bool = True):
    """Möbius-weighted dimension sum over the k-torsion partial subposet.

    Equals the k-th constituent of the chromatic quasi-polynomial; the
    identity is verified against the independent subset-sum computation
    unless check is disabled.
    """
    if poset is None:
        poset = enumerate_toric_layers(arr)
    indices = [i for i in k_total_subposet(poset, k)
               if poset.layers[i].in_partial]
    out = poset.characteristic(indices)
    if check:
        expected = g_characteristic(arr, GroupSpec.cyclic(_residue(arr, k)))
        if out != expected:
            raise IdentityCheckError(
                f"k-partial polynomial {out} != constituent {expected} (k={k})")
    return out


def k_total_characteristic(arr: Arrangement, k: int,
                           poset: LayerPoset | None = None,
                           check: bool = True):
    """Möbius-weighted dimension sum over the k-torsion subposet.

    Equals the k-th constituent of the arrangement with its torsion elements
    removed; verified unless check is disabled.
    """
    if poset is None:
        poset = enumerate_toric_layers(arr)
    indices = k_total_subposet(poset, k)
    out = poset.characteristic(indices)
    if check:
        stripped = arr.without_torsion()
        expected = g_characteristic(stripped, GroupSpec.cyclic(_residue(stripped, k)))
        if out != expected:
            raise IdentityCheckError(
                f"k-total polynomial {out} != stripped constituent {expected} (k={k})")
    return out


def _residue(arr: Arrangement, k: int) -> int:
    period = arr.lcm_period()
    return (k - 1) % period + 1


def total_characteristic(arr: Arrangement, poset: LayerPoset | None = None,
                         check: bool = True):
    """Full Möbius-weighted dimension sum; equals the circle-target
    characteristic polynomial of the torsion-stripped arrangement."""
    if poset is None:
        poset = enumerate_toric_layers(arr)
    out = poset.characteristic()
    if check:
        expected = g_characteristic(arr.without_torsion(), GroupSpec.circle())
        if out != expected:
            raise IdentityCheckError(
                f"total polynomial {out} != circle characteristic {expected}")
    return out


def partial_characteristic(arr: Arrangement, poset: LayerPoset | None = None,
                           check: bool = True):
    """Möbius-weighted dimension sum over the partial subposet; equals the
    circle-target characteristic polynomial of the full arrangement."""
    if poset is None:
        poset = enumerate_toric_layers(arr)
    out = poset.characteristic(partial_subposet(poset))
    if check:
        expected = g_characteristic(arr, GroupSpec.circle())
        if out != expected:
            raise IdentityCheckError(
                f"partial polynomial {out} != circle characteristic {expected}")
    return out
