import random

import pytest

from gtutte import Arrangement, FGAbelianGroup, GroupSpec, multiplicity
from gtutte.model import CapExceeded, MAX_ELEMENTS
from gtutte.oracle import brute_hom_count


def test_element_validation_and_reduction():
    gamma = FGAbelianGroup(1, (2,))
    arr = Arrangement(gamma, [[0, 3]])
    assert arr.elements == ((0, 1),)
    with pytest.raises(ValueError):
        Arrangement(gamma, [[1]])


def test_duplicates_are_kept_in_order():
    arr = Arrangement(FGAbelianGroup(2), [[1, 0], [1, 0], [0, 1]])
    assert arr.n == 3
    assert arr.elements[0] == arr.elements[1]


def test_element_cap():
    with pytest.raises(CapExceeded):
        Arrangement(FGAbelianGroup(1), [[1]] * (MAX_ELEMENTS + 1))


def test_subset_data_example(example):
    empty = example.subset_data(0)
    assert empty.rank == 0 and empty.torsion_factors == ()
    gamma_only = example.subset_data(0b100)
    assert gamma_only.rank == 1 and gamma_only.torsion_factors == (4,)
    full = example.subset_data(0b111)
    assert full.rank == 2 and full.torsion_factors == (2,)


def test_subset_data_empty_set_matches_ambient_torsion():
    arr = Arrangement(FGAbelianGroup(1, (2, 4)), [])
    assert arr.subset_data(0).torsion_factors == (2, 4)


def test_rank_monotone_under_inclusion(example):
    for mask in example.masks():
        for sub in range(mask + 1):
            if sub & mask == sub:
                assert example.subset_data(sub).rank <= example.subset_data(mask).rank


def test_multiplicity_examples(example):
    gamma_only = example.subset_data(0b100)
    assert multiplicity(gamma_only, GroupSpec.real()) == 1
    assert multiplicity(gamma_only, GroupSpec.cyclic(4)) == 4
    assert multiplicity(gamma_only, GroupSpec.circle()) == 4


def test_multiplicity_circle_is_torsion_order(example):
    for mask in example.masks():
        data = example.subset_data(mask)
        order = 1
        for d in data.torsion_factors:
            order *= d
        assert multiplicity(data, GroupSpec.circle()) == order


def test_multiplicity_matches_brute_hom_count():
    from gtutte.model import SubsetData
    rng = random.Random(6)
    for _ in range(80):
        factors = rng.choice([(), (2,), (3,), (4,), (2, 2), (2, 6), (3, 6)])
        data_factors = rng.choice([(), (2,), (4,), (6,), (2, 4)])
        data = SubsetData(0, 0, data_factors)
        spec = GroupSpec(f_torsion=factors)
        assert multiplicity(data, spec) == brute_hom_count(
            FGAbelianGroup(0, data_factors), spec.f_torsion)


def test_multiplicity_depends_only_on_residue(example):
    period = example.lcm_period()
    for mask in example.masks():
        data = example.subset_data(mask)
        for k in range(1, 2 * period + 1):
            k2 = k + period
            assert multiplicity(data, GroupSpec.cyclic(k)) == \
                multiplicity(data, GroupSpec.cyclic(k2))


def test_torsion_sublist():
    assert Arrangement(FGAbelianGroup(2), [[1, 1], [0, 2]]).torsion_mask() == 0
    arr = Arrangement(FGAbelianGroup(1, (2,)), [[1, 0], [0, 1]])
    assert arr.torsion_mask() == 0b10
    assert Arrangement(FGAbelianGroup(0, (6,)), [[2], [3]]).torsion_mask() == 0b11


def test_lcm_period_examples(example):
    assert Arrangement(FGAbelianGroup(2), []).lcm_period() == 1
    assert example.lcm_period() == 4
    arr = Arrangement(FGAbelianGroup(2), [[2, 0], [0, 3]])
    assert arr.lcm_period() == 6


def test_largest_factor_divides_period(example):
    period = example.lcm_period()
    for mask in example.masks():
        factors = example.subset_data(mask).torsion_factors
        if factors:
            assert period % factors[-1] == 0


def test_group_spec_canonicalizes_factors():
    assert GroupSpec(f_torsion=(2, 3)).f_torsion == (6,)
    assert GroupSpec(f_torsion=(1, 4, 1)).f_torsion == (4,)
    assert GroupSpec(f_torsion=(4, 2)).f_torsion == (2, 4)
    assert GroupSpec(f_torsion=(6, 4)).f_torsion == (2, 12)
    assert GroupSpec.cyclic(1) == GroupSpec.trivial()
    assert GroupSpec(f_torsion=(2, 3)).f_order == 6


def test_without_torsion():
    arr = Arrangement(FGAbelianGroup(1, (2,)), [[1, 0], [0, 1]])
    stripped = arr.without_torsion()
    assert stripped.elements == ((1, 0),)
    assert stripped.gamma == arr.gamma
