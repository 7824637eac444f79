import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ntotal.parse import SpecSyntaxError, parse_ring
from ntotal.rings import (
    CardinalityCap,
    InvalidSpec,
    MixedRings,
    Modular,
    NonPrimeModulus,
    PolyQuotient,
    Product,
    TrivialRing,
    format_spec,
    is_irreducible,
    make_ring,
)

from oracles import NaiveRing

SMALL = [
    "Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "Z12", "Z25", "Z30",
    "GF(2)[x]/(x^2+x+1)", "GF(2)[x]/(x^2)", "GF(2)[x]/(x^3+x+1)", "GF(3)[x]/(x^2+1)",
    "GF(3)[x]/(x^2)", "GF(2)[x]/(x^2+1)", "GF(5)[x]/(2x^2+3)", "GF(64)",
    "Z2xZ2", "Z2xZ3", "Z3xZ3", "Z2xZ2xZ2", "Z4xGF(2)[x]/(x^2)", "(Z2xZ3)xZ5",
]


def test_make_ring_cardinalities(R):
    assert R("Z8").cardinality == 8
    assert R("Z3xZ3").cardinality == 9
    assert R("GF(2)[x]/(x^2+x+1)").cardinality == 4


def test_spec_errors():
    with pytest.raises(NonPrimeModulus):
        make_ring(PolyQuotient(4, (1, 0, 1)))
    with pytest.raises(TrivialRing):
        make_ring(Modular(1))
    with pytest.raises(CardinalityCap):
        make_ring(Modular(9000))
    with pytest.raises(CardinalityCap):
        make_ring(Modular(100), cap=64)
    with pytest.raises(InvalidSpec):
        make_ring(Product((Modular(3),)))
    with pytest.raises(InvalidSpec):
        make_ring(PolyQuotient(3, (0, 1, 1)))
    with pytest.raises(InvalidSpec):
        make_ring(PolyQuotient(3, (2,)))


def test_arithmetic_examples(R):
    z6 = R("Z6")
    assert z6.element(3) + z6.element(4) == z6.element(1)
    z5 = R("Z5")
    assert z5.element(2) * z5.element(2) == z5.element(4) == -z5.one
    f4 = R("GF(2)[x]/(x^2+x+1)")
    x = f4.element((1, 0))
    assert x * x == f4.element((1, 1))
    assert str(x * x) == "x+1"


def test_pow_examples(R):
    assert R("Z2").one ** 2 == R("Z2").one == -R("Z2").one
    z7 = R("Z7")
    assert z7.element(2) ** 3 == z7.one
    f4 = R("GF(2)[x]/(x^2+x+1)")
    x = f4.element((1, 0))
    assert x**3 == x * x * x == f4.one
    assert x**0 == f4.one


def test_mixed_rings_rejected(R):
    with pytest.raises(MixedRings):
        R("Z6").one + R("Z7").one
    with pytest.raises(MixedRings):
        R("Z6").one * R("Z2xZ3").one


def test_elements_order(R):
    assert [e.value for e in R("Z3").elements()] == [0, 1, 2]
    assert [e.value for e in R("Z2xZ2").elements()] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    f4 = R("GF(2)[x]/(x^2+x+1)").elements()
    assert len(set(f4)) == 4
    assert f4[0] == f4[0].ring.zero and f4[1] == f4[1].ring.one


@pytest.mark.parametrize("text", SMALL)
def test_enumeration_is_lexicographic(R, text):
    ring = R(text)
    values = [e.value for e in ring.elements()]
    assert values == NaiveRing(ring.spec).elements()
    assert len(values) == ring.cardinality == len(set(values))


@pytest.mark.parametrize("text", SMALL)
def test_ring_axioms_exhaustive(R, text):
    ring = R(text)
    N = ring.cardinality
    a, b, c = (x.ravel() for x in np.meshgrid(*[ring.all_codes()] * 3, indexing="ij"))
    if N > 16:
        sel = np.random.default_rng(0).choice(len(a), min(len(a), 20000), replace=False)
        a, b, c = a[sel], b[sel], c[sel]
    add, mul = ring.add_codes, ring.mul_codes
    assert (add(a, b) == add(b, a)).all()
    assert (mul(a, b) == mul(b, a)).all()
    assert (mul(a, add(b, c)) == add(mul(a, b), mul(a, c))).all()
    assert (mul(a, mul(b, c)) == mul(mul(a, b), c)).all()
    assert (add(a, add(b, c)) == add(add(a, b), c)).all()
    codes = ring.all_codes()
    assert (add(codes, ring.neg_codes(codes)) == ring.zero_code).all()
    assert (mul(codes, ring.one_code) == codes).all()
    assert ((0 <= add(a, b)) & (add(a, b) < N)).all()
    assert ((0 <= mul(a, b)) & (mul(a, b) < N)).all()


@pytest.mark.parametrize("text", SMALL)
def test_arithmetic_matches_naive(R, text):
    ring = R(text)
    naive = NaiveRing(ring.spec)
    els = ring.elements()
    pairs = list(itertools.product(els, repeat=2))
    if len(pairs) > 3000:
        pairs = pairs[:: len(pairs) // 3000]
    for x, y in pairs:
        assert (x + y).value == naive.add(x.value, y.value)
        assert (x * y).value == naive.mul(x.value, y.value)
        assert (-x).value == naive.neg(x.value)


@pytest.mark.parametrize("text", [t for t in SMALL])
def test_pow_matches_repeated_product(R, text):
    ring = R(text)
    if ring.cardinality > 64:
        pytest.skip("exhaustive pow check is for |R| <= 64")
    for e in range(13):
        fast = ring.pow_codes(ring.all_codes(), e)
        slow = np.full(ring.cardinality, ring.one_code)
        for _ in range(e):
            slow = ring.mul_codes(slow, ring.all_codes())
        assert (fast == slow).all()


@settings(max_examples=60, deadline=None)
@given(m=st.integers(2, 8192), data=st.data())
def test_modular_axioms_random(m, data):
    ring = make_ring(Modular(m))
    a, b, c = (ring.element(data.draw(st.integers(0, m - 1))) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    e = data.draw(st.integers(0, 40))
    assert (a**e).value == pow(a.value, e, m)


@st.composite
def poly_specs(draw):
    p = draw(st.sampled_from([2, 3, 5, 7, 11, 13]))
    k = draw(st.integers(1, 4))
    lead = draw(st.integers(1, p - 1))
    rest = draw(st.lists(st.integers(0, p - 1), min_size=k, max_size=k))
    return PolyQuotient(p, (lead, *rest))


@settings(max_examples=60, deadline=None)
@given(spec=poly_specs().filter(lambda s: s.cardinality <= 8192), data=st.data())
def test_poly_axioms_random(spec, data):
    ring = make_ring(spec)
    naive = NaiveRing(spec)
    codes = st.integers(0, ring.cardinality - 1)
    a, b, c = (ring.from_code(data.draw(codes)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b).value == naive.mul(a.value, b.value)
    assert (a * b) * c == a * (b * c)


def _specs():
    leaf = st.one_of(
        st.builds(Modular, st.integers(2, 12)),
        poly_specs().filter(lambda s: s.cardinality <= 49),
    )
    return st.recursive(
        leaf,
        lambda inner: st.lists(inner, min_size=2, max_size=3).map(lambda fs: Product(tuple(fs))),
        max_leaves=4,
    )


@settings(max_examples=100, deadline=None)
@given(spec=_specs())
def test_spec_text_round_trip(spec):
    assert parse_ring(format_spec(spec)) == spec


def test_parse_syntax():
    assert parse_ring("Z8") == Modular(8)
    assert parse_ring("GF(2)[x]/(x^2+x+1)") == PolyQuotient(2, (1, 1, 1))
    assert parse_ring("Z3xZ3") == Product((Modular(3), Modular(3)))
    assert parse_ring("Z2xGF(3)[x]/(x^2+1)") == Product((Modular(2), PolyQuotient(3, (1, 0, 1))))
    assert parse_ring("Z3[t]/(t^2 - 1)") == PolyQuotient(3, (1, 0, 2))
    assert parse_ring("GF(4)") == PolyQuotient(2, (1, 1, 1))
    assert parse_ring("Z2 x Z2 x Z2") == Product((Modular(2),) * 3)
    for bad in ["", "Q5", "Z3x", "GF(2)[x]/(y^2)", "(Z2xZ3", "GF(6)"]:
        with pytest.raises(InvalidSpec):
            parse_ring(bad)
    with pytest.raises(SpecSyntaxError):
        parse_ring("Z2xxZ3")


def test_irreducibility_detected():
    assert is_irreducible(2, (1, 1, 1))
    assert not is_irreducible(2, (1, 0, 1))  # (x+1)^2
    assert not is_irreducible(2, (1, 0, 0))
    assert is_irreducible(3, (1, 0, 1))
    assert make_ring(PolyQuotient(2, (1, 0, 1, 1))).is_field
    assert not make_ring(PolyQuotient(2, (1, 0, 0))).is_field


def test_element_equality_across_handles(R):
    assert R("Z6").element(4) == R("Z6").element(10)
    assert hash(R("Z6").element(4)) == hash(R("Z6").element(4))
    assert R("Z6").element(4) != R("Z2xZ3").element((0, 1))
