"""Shared layer-poset machinery: order relation, Möbius values, exports.

A layer poset is a finite set of layers ordered by reverse inclusion.  Each
layer lies over a unique minimal element (the connected component of the
total group containing it), and the interval used everywhere is
[component, layer], so a single bottom-up sweep computes every Möbius value
mu(component(C), C).
"""

from __future__ import annotations

import json

from .invariants import IdentityCheckError
from .poly import UniPoly


class LayerPoset:
    """Finite poset of layers with per-layer combinatorial data.

    layers[i] carries rank, dim, a component key, a localization mask and a
    human-readable key; the poset adds the order (strict_downs), Möbius
    values, the component map and the subset-to-components incidence.
    """

    def __init__(self, arr, layers, subset_components, leq_fn):
        self.arr = arr
        self.layers = tuple(layers)
        n = len(self.layers)
        self.subset_components = dict(subset_components)

        incidence = [[] for _ in range(n)]
        for mask in sorted(self.subset_components):
            for idx in self.subset_components[mask]:
                incidence[idx].append(mask)
        self.incidence = tuple(tuple(ms) for ms in incidence)

        groups: dict = {}
        for i, lay in enumerate(self.layers):
            groups.setdefault(lay.component_key(), []).append(i)

        downs = [frozenset()] * n
        component_of = [None] * n
        for idxs in groups.values():
            idxs.sort(key=lambda i: self.layers[i].rank)
            roots = [i for i in idxs if self.layers[i].rank == 0]
            if len(roots) != 1:
                raise IdentityCheckError(
                    f"component has {len(roots)} rank-0 layers, expected 1")
            root = roots[0]
            for j in idxs:
                component_of[j] = root
                below = set()
                for i in idxs:
                    if self.layers[i].rank < self.layers[j].rank and \
                            leq_fn(self.layers[i], self.layers[j]):
                        below.add(i)
                downs[j] = frozenset(below)
        self.strict_downs = tuple(downs)
        self.component_of = tuple(component_of)
        self.minimal = tuple(sorted(i for i in range(n) if not downs[i]))

        mobius = [0] * n
        for j in sorted(range(n), key=lambda i: self.layers[i].rank):
            if not downs[j]:
                mobius[j] = 1
            else:
                mobius[j] = -sum(mobius[i] for i in downs[j])
        self.mobius = tuple(mobius)
        self._check_sign_alternation()

    def _check_sign_alternation(self):
        for i, lay in enumerate(self.layers):
            if (-1) ** lay.rank * self.mobius[i] <= 0:
                raise IdentityCheckError(
                    f"Moebius sign fails at layer {i}: rank {lay.rank}, "
                    f"mu {self.mobius[i]}")

    @property
    def n(self) -> int:
        return len(self.layers)

    def all_indices(self) -> tuple:
        return tuple(range(self.n))

    def characteristic(self, indices=None) -> UniPoly:
        """Sum of mu(component(C), C) * t^dim(C) over the selected layers."""
        if indices is None:
            indices = self.all_indices()
        coeffs: dict = {}
        for i in indices:
            d = self.layers[i].dim
            coeffs[d] = coeffs.get(d, 0) + self.mobius[i]
        if not coeffs:
            return UniPoly()
        out = [0] * (max(coeffs) + 1)
        for d, c in coeffs.items():
            out[d] = c
        return UniPoly(out)

    def covers(self, indices=None) -> list:
        """Induced Hasse cover pairs (lower, upper) within the selection."""
        if indices is None:
            indices = self.all_indices()
        selected = set(indices)
        pairs = []
        for j in sorted(selected):
            below = self.strict_downs[j] & selected
            for i in below:
                if not any(i in self.strict_downs[m] for m in below):
                    pairs.append((i, j))
        return sorted(pairs)

    def alternating_subset_sums(self) -> list:
        """Per layer: sum over the defining subsets S of (-1)^#S, with the
        Möbius value (inside the partial poset) or 0 (outside) it must equal."""
        out = []
        for i, lay in enumerate(self.layers):
            total = sum((-1) ** mask.bit_count() for mask in self.incidence[i])
            want = self.mobius[i] if lay.in_partial else 0
            out.append({"layer": i, "sum": total, "expected": want,
                        "ok": total == want})
        return out


def mobius_all(poset: LayerPoset) -> LayerPoset:
    """Recompute every Möbius value from the interval recursion and verify
    the stored values and the strict sign alternation.  Idempotent; returns
    the poset for chaining."""
    fresh = [0] * poset.n
    for j in sorted(range(poset.n), key=lambda i: poset.layers[i].rank):
        if not poset.strict_downs[j]:
            fresh[j] = 1
        else:
            fresh[j] = -sum(fresh[i] for i in poset.strict_downs[j])
    if tuple(fresh) != poset.mobius:
        raise IdentityCheckError("stored Möbius values are stale")
    poset._check_sign_alternation()
    return poset


def component_shapes(poset: LayerPoset, indices=None) -> list:
    """Group components by the shape of their induced subposet.

    The shape signature is (layer count, sorted rank multiset, sorted dim
    multiset, cover count): coarse, but it separates the small diagrams that
    occur at desk scale (chains, diamonds, ...).  Returns (shape, count)
    pairs with a deterministic order.
    """
    if indices is None:
        indices = poset.all_indices()
    members: dict = {}
    for i in indices:
        members.setdefault(poset.component_of[i], []).append(i)
    shapes: dict = {}
    for root in sorted(members):
        idxs = members[root]
        sig = (
            len(idxs),
            tuple(sorted(poset.layers[i].rank for i in idxs)),
            tuple(sorted(poset.layers[i].dim for i in idxs)),
            len(poset.covers(idxs)),
        )
        shapes[sig] = shapes.get(sig, 0) + 1
    return sorted(shapes.items())


def export_hasse(poset: LayerPoset, indices=None, fmt: str = "dot") -> str:
    """Render the (induced) Hasse diagram; formats: dot, records."""
    if indices is None:
        indices = poset.all_indices()
    indices = sorted(set(indices))
    pairs = poset.covers(indices)
    if fmt == "dot":
        lines = ["digraph layers {", "  rankdir=BT;"]
        for i in indices:
            lay = poset.layers[i]
            label = f"dim={lay.dim} mu={poset.mobius[i]} {lay.key_str()}"
            lines.append(f'  L{i} [label="{label}"];')
        for i, j in pairs:
            lines.append(f"  L{i} -> L{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "records":
        covered: dict = {j: [] for j in indices}
        for i, j in pairs:
            covered[j].append(i)
        records = [{
            "id": i,
            "key": poset.layers[i].key_str(),
            "dim": poset.layers[i].dim,
            "rank": poset.layers[i].rank,
            "mobius": poset.mobius[i],
            "component": poset.component_of[i],
            "covers": sorted(covered[i]),
        } for i in indices]
        return json.dumps(records, indent=1, sort_keys=True) + "\n"
    raise ValueError(f"unknown export format: {fmt!r}")
