import random
from math import gcd

import numpy as np
import pytest

from ntotal.families import odd_prime_powers, prime_power
from ntotal.ideals import (
    CapExceeded,
    InvariantError,
    NotAnIdeal,
    NotGenerating,
    find_nth_root_of_minus_one,
    ideal_case_params,
    ideal_generated,
    is_ideal,
    min_zd_generators,
    nilpotent_mask,
    nth_power_classes,
    unit_mask_scan,
    zd_generates_ring,
    zero_divisor_mask_scan,
    zero_divisor_profile,
)
from ntotal.rings import Modular, make_ring

from oracles import NaiveRing, ideal_closure, min_generators_unpruned
from rings_small import SMALL_SPECS


def values(items):
    return sorted(e.value for e in items)


def test_profile_examples(R):
    z6 = zero_divisor_profile(R("Z6"))
    assert values(z6.zero_divisors) == [0, 2, 3, 4]
    assert values(z6.regulars) == [1, 5]
    assert not z6.zr_is_ideal and z6.beta is None
    z8 = zero_divisor_profile(R("Z8"))
    assert values(z8.zero_divisors) == [0, 2, 4, 6] and z8.zr_is_ideal
    assert (z8.alpha, z8.beta) == (4, 2)
    f4 = zero_divisor_profile(R("GF(2)[x]/(x^2+x+1)"))
    assert len(f4.zero_divisors) == 1 and f4.zr_is_ideal and f4.beta == 4
    z2 = zero_divisor_profile(R("Z2"))
    assert values(z2.zero_divisors) == [0] and values(z2.regulars) == [1]


def test_profile_dict_and_text(R):
    d = zero_divisor_profile(R("Z6")).to_dict()
    assert d["zero_divisors"] == ["0", "2", "3", "4"] and d["alpha"] == 4
    assert "Z(R) is an ideal: no" in zero_divisor_profile(R("Z6")).describe()


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_profile_oracles(spec):
    ring = make_ring(spec)
    naive = NaiveRing(spec)
    fast = zero_divisor_profile(ring)
    scan = zero_divisor_profile(ring, method="scan")
    assert (fast.zd_mask == scan.zd_mask).all()
    assert (fast.zd_mask == zero_divisor_mask_scan(ring)).all()
    assert (fast.unit_mask == unit_mask_scan(ring)).all()
    assert values(fast.zero_divisors) == sorted(naive.zero_divisors())
    # finite commutative ring: every element is a unit or a zero-divisor
    assert fast.regulars == fast.units
    assert fast.alpha + len(fast.regulars) == ring.cardinality
    assert fast.nilpotents <= fast.zero_divisors
    # Z(R) is an ideal exactly when it equals the (unique) maximal ideal, i.e. Z = Nil
    assert fast.zr_is_ideal == (fast.nilpotents == fast.zero_divisors)
    if fast.zr_is_ideal:
        beta = ring.cardinality // fast.alpha
        assert fast.beta == beta and ring.cardinality == fast.alpha * beta
        assert prime_power(beta) is not None


def test_zero_divisor_ideal_is_not_ideal_on_z6(R):
    ring = R("Z6")
    assert not is_ideal(ring, zero_divisor_profile(ring).zero_divisors)
    assert is_ideal(ring, [0, 3])
    assert is_ideal(ring, [0, 2, 4])
    assert not is_ideal(ring, [0, 2])


def test_ideal_generated_examples(R):
    ring = R("Z6")
    assert values(ideal_generated(ring, [2, 3])) == list(range(6))
    assert values(ideal_generated(ring, [2])) == [0, 2, 4]
    with pytest.raises(ValueError):
        ideal_generated(ring, [])
    assert zd_generates_ring(ring)
    assert not zd_generates_ring(R("Z8"))


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_ideal_generated_matches_fixpoint(spec):
    ring = make_ring(spec)
    naive = NaiveRing(spec)
    els = naive.elements()
    rng = random.Random(str(spec))
    for size in (1, 2, 3):
        gens = rng.sample(els, min(size, len(els)))
        assert values(ideal_generated(ring, gens)) == sorted(ideal_closure(naive, gens))


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_min_generators_matches_unpruned(spec):
    ring = make_ring(spec)
    expected = min_generators_unpruned(spec, cap=2)
    if expected is None:
        with pytest.raises(NotGenerating):
            min_zd_generators(ring)
        assert not zd_generates_ring(ring)
        naive = NaiveRing(spec)
        assert naive.one() not in ideal_closure(naive, naive.zero_divisors())
    else:
        assert min_zd_generators(ring) == expected
        # a finite ring needs exactly two: one zero-divisor never generates R
        assert expected == 2


def test_generator_cap(R):
    with pytest.raises(CapExceeded):
        min_zd_generators(R("Z6"), cap=1)
    with pytest.raises(ValueError):
        min_zd_generators(R("Z6"), cap=0)


def test_ideal_case_params(R):
    p = ideal_case_params(R("Z49"), 3)
    assert (p.alpha, p.beta, p.g, p.gamma, p.d) == (7, 7, 3, 21, 2)
    p = ideal_case_params(R("Z8"), 2)
    assert (p.alpha, p.beta, p.gamma, p.d) == (4, 2, 4, 1)
    with pytest.raises(NotAnIdeal):
        ideal_case_params(R("Z6"), 2)
    with pytest.raises(ValueError):
        ideal_case_params(R("Z8"), 0)


POWER_CLASS_RINGS = [s for s in odd_prime_powers(343)] + [Modular(2**i) for i in range(1, 9)]


@pytest.mark.parametrize("spec", POWER_CLASS_RINGS, ids=str)
def test_nth_power_cosets(spec):
    ring = make_ring(spec)
    prof = zero_divisor_profile(ring)
    beta = ring.cardinality // prof.alpha
    for n in range(1, 13):
        classes = nth_power_classes(ring, n)
        g = gcd(n, beta - 1)
        assert len(classes.powers) == (beta - 1) // g
        for a in classes.powers:
            fiber = classes.union(a)
            assert len(fiber) == prof.alpha * g
            assert all(classes.coset_of[(x**n).code] == a.code for x in fiber)
        covered = set().union(*(classes.union(a) for a in classes.powers))
        assert covered == prof.regulars


def test_nth_power_classes_field(R):
    c = nth_power_classes(R("Z7"), 2)
    assert [a.value for a in c.powers] == [1, 2, 4]
    assert values(c.union(c.powers[0])) == [1, 6]


def test_nth_power_classes_rejects_non_ideal(R):
    with pytest.raises(NotAnIdeal):
        nth_power_classes(R("Z6"), 2)
    assert issubclass(InvariantError, RuntimeError)


def test_root_of_minus_one(R):
    assert find_nth_root_of_minus_one(R("Z5"), 2).value == 2
    assert find_nth_root_of_minus_one(R("Z7"), 2) is None
    assert find_nth_root_of_minus_one(R("Z14"), 2) is None
    assert find_nth_root_of_minus_one(R("Z6"), 3).value == 5


def test_nilpotents(R):
    ring = R("Z72")
    assert sorted(np.flatnonzero(nilpotent_mask(ring))) == list(range(0, 72, 6))
    assert values(zero_divisor_profile(R("GF(3)[x]/(x^2)")).nilpotents) == [(0, 0), (1, 0), (2, 0)]
