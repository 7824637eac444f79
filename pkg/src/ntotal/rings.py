"""Exact arithmetic over finite commutative rings.

Three ring families are supported, described by immutable specs:

* ``Modular(m)``: the integers modulo ``m``.
* ``PolyQuotient(p, modulus)``: ``Z_p[x]/(f)`` for a prime ``p`` and any
  polynomial ``f`` of degree ``k >= 1`` (reducible moduli give local rings
  that are not fields).
* ``Product(factors)``: the direct product of two or more rings.

Every element has an integer *code* in ``[0, |R|)``.  Code order is the
lexicographic order on canonical forms, so enumerating codes ``0..|R|-1``
enumerates the ring deterministically.  All arithmetic is implemented on
numpy arrays of codes; :class:`Element` wraps one code for scalar use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

DEFAULT_VERTEX_CAP = 8192


class RingError(ValueError):
    """Base class for invalid ring specs and ring misuse."""


class InvalidSpec(RingError):
    pass


class NonPrimeModulus(RingError):
    pass


class CardinalityCap(RingError):
    pass


class TrivialRing(RingError):
    pass


class MixedRings(RingError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# Specs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Modular:
    m: int

    @property
    def cardinality(self) -> int:
        return self.m


@dataclass(frozen=True)
class PolyQuotient:
    """``Z_p[x]/(modulus)``.

    ``modulus`` lists coefficients from the highest degree down to the
    constant term, as the polynomial is written: ``x^2+x+1`` is ``(1, 1, 1)``
    and ``x^3`` is ``(1, 0, 0, 0)``.
    """

    p: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if self.p >= 2:
            object.__setattr__(self, "modulus", tuple(int(c) % self.p for c in self.modulus))

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def cardinality(self) -> int:
        return self.p ** self.degree


@dataclass(frozen=True)
class Product:
    factors: tuple["RingSpec", ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def cardinality(self) -> int:
        c = 1
        for f in self.factors:
            c *= f.cardinality
        return c


RingSpec = Union[Modular, PolyQuotient, Product]


def validate_spec(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> None:
    """Raise if ``spec`` violates its invariants or the cardinality cap."""
    _validate_structure(spec)
    size = spec.cardinality
    if size == 1:
        raise TrivialRing(f"{format_spec(spec)} has a single element (1 = 0)")
    if size > cap:
        raise CardinalityCap(f"{format_spec(spec)} has {size} elements, cap is {cap}")


def _validate_structure(spec: RingSpec) -> None:
    if isinstance(spec, Modular):
        if spec.m == 1:
            raise TrivialRing("Z1 is the zero ring (1 = 0)")
        if spec.m < 2:
            raise InvalidSpec(f"modulus must be >= 2, got {spec.m}")
    elif isinstance(spec, PolyQuotient):
        if not is_prime(spec.p):
            raise NonPrimeModulus(f"coefficient modulus {spec.p} is not prime")
        if spec.degree < 1:
            raise InvalidSpec("polynomial modulus must have degree >= 1")
        if spec.modulus[0] == 0:
            raise InvalidSpec("leading coefficient of the modulus must be nonzero")
    elif isinstance(spec, Product):
        if len(spec.factors) < 2:
            raise InvalidSpec("a product needs at least two factors")
        for f in spec.factors:
            _validate_structure(f)
    else:
        raise InvalidSpec(f"unknown ring spec {spec!r}")


def format_poly(coeffs_high_first: Sequence[int], var: str = "x") -> str:
    k = len(coeffs_high_first) - 1
    terms = []
    for i, c in enumerate(coeffs_high_first):
        deg = k - i
        if c == 0:
            continue
        if deg == 0:
            terms.append(str(c))
            continue
        mono = var if deg == 1 else f"{var}^{deg}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def format_spec(spec: RingSpec) -> str:
    """Text form accepted by :func:`ntotal.parse.parse_ring`."""
    if isinstance(spec, Modular):
        return f"Z{spec.m}"
    if isinstance(spec, PolyQuotient):
        return f"GF({spec.p})[x]/({format_poly(spec.modulus)})"
    parts = []
    for f in spec.factors:
        text = format_spec(f)
        parts.append(f"({text})" if isinstance(f, Product) else text)
    return "x".join(parts)


# ---------------------------------------------------------------------------
# Ring handles
# ---------------------------------------------------------------------------


def _as_codes(a) -> np.ndarray:
    return np.asarray(a, dtype=np.int64)


class Ring:
    """Handle for a validated ring spec.

    Arithmetic methods ending in ``_codes`` accept and return integer
    arrays (or scalars) of element codes and broadcast like numpy ufuncs.
    """

    spec: RingSpec
    cardinality: int

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.cardinality = spec.cardinality

    # identity is the ring spec; handles built from equal specs are interchangeable
    def __eq__(self, other):
        return isinstance(other, Ring) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"Ring({format_spec(self.spec)})"

    def __str__(self):
        return format_spec(self.spec)

    def __reduce__(self):
        return (_build, (self.spec,))

    # -- codes ------------------------------------------------------------
    zero_code = 0

    @property
    def one_code(self) -> int:
        raise NotImplementedError

    def add_codes(self, a, b):
        raise NotImplementedError

    def neg_codes(self, a):
        raise NotImplementedError

    def mul_codes(self, a, b):
        raise NotImplementedError

    def sub_codes(self, a, b):
        return self.add_codes(a, self.neg_codes(b))

    def pow_codes(self, a, e: int):
        """Square-and-multiply exponentiation, elementwise."""
        if e < 0:
            raise ValueError("exponent must be >= 0")
        a = _as_codes(a)
        result = np.full(a.shape, self.one_code, dtype=np.int64)
        base = a
        while e:
            if e & 1:
                result = self.mul_codes(result, base)
            e >>= 1
            if e:
                base = self.mul_codes(base, base)
        return result

    def all_codes(self) -> np.ndarray:
        return np.arange(self.cardinality, dtype=np.int64)

    def decode(self, code: int):
        """Canonical form of the element with the given code."""
        raise NotImplementedError

    def encode(self, value) -> int:
        raise NotImplementedError

    def label(self, code: int) -> str:
        raise NotImplementedError

    # -- elements ---------------------------------------------------------
    @cached_property
    def zero(self) -> "Element":
        return Element(self, self.zero_code)

    @cached_property
    def one(self) -> "Element":
        return Element(self, self.one_code)

    def element(self, value) -> "Element":
        """Element from a canonical form (or any int, for ``Z_m``)."""
        return Element(self, self.encode(value))

    def from_code(self, code: int) -> "Element":
        code = int(code)
        if not 0 <= code < self.cardinality:
            raise ValueError(f"code {code} out of range for {self}")
        return Element(self, code)

    def elements(self) -> list["Element"]:
        return [Element(self, c) for c in range(self.cardinality)]

    def __iter__(self):
        return iter(self.elements())

    def __len__(self):
        return self.cardinality


class ModularRing(Ring):
    def __init__(self, spec: Modular):
        super().__init__(spec)
        self.m = spec.m

    @property
    def one_code(self) -> int:
        return 1 % self.m

    def add_codes(self, a, b):
        return (_as_codes(a) + _as_codes(b)) % self.m

    def neg_codes(self, a):
        return (-_as_codes(a)) % self.m

    def mul_codes(self, a, b):
        return (_as_codes(a) * _as_codes(b)) % self.m

    def decode(self, code):
        return int(code)

    def encode(self, value) -> int:
        return int(value) % self.m

    def label(self, code):
        return str(int(code))


class PolyQuotientRing(Ring):
    """``Z_p[x]/(f)``; code = sum of c_i p^i for the coefficient c_i of x^i."""

    def __init__(self, spec: PolyQuotient):
        super().__init__(spec)
        p, k = spec.p, spec.degree
        self.p, self.k = p, k
        lead_inv = pow(spec.modulus[0], -1, p)
        monic = [(c * lead_inv) % p for c in reversed(spec.modulus)]  # low first
        # x^k == -(f_0 + ... + f_{k-1} x^{k-1})
        self._xk = np.array([(-c) % p for c in monic[:k]], dtype=np.int64)
        self._weights = p ** np.arange(k, dtype=np.int64)

    @property
    def one_code(self) -> int:
        return 1

    def _digits(self, a) -> np.ndarray:
        a = _as_codes(a)
        return (a[..., None] // self._weights) % self.p

    def _pack(self, digits: np.ndarray) -> np.ndarray:
        return (digits % self.p) @ self._weights

    def add_codes(self, a, b):
        return self._pack(self._digits(a) + self._digits(b))

    def neg_codes(self, a):
        return self._pack(-self._digits(a))

    def mul_codes(self, a, b):
        da, db = np.broadcast_arrays(self._digits(a), self._digits(b))
        acc = np.zeros(da.shape, dtype=np.int64)
        shifted = db.copy()  # x^i * b reduced mod f
        for i in range(self.k):
            acc = (acc + da[..., i : i + 1] * shifted) % self.p
            if i + 1 < self.k:
                top = shifted[..., -1:].copy()
                shifted = np.concatenate([np.zeros_like(top), shifted[..., :-1]], axis=-1)
                shifted = (shifted + top * self._xk) % self.p
        return self._pack(acc)

    def decode(self, code):
        code = int(code)
        low_first = [(code // self.p**i) % self.p for i in range(self.k)]
        return tuple(reversed(low_first))

    def encode(self, value) -> int:
        if isinstance(value, (int, np.integer)):
            return int(value) % self.p
        coeffs = tuple(value)
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(reversed(coeffs)))

    def label(self, code):
        return format_poly(self.decode(code))

    @cached_property
    def is_field(self) -> bool:
        """Irreducibility test by trial division over all lower-degree monics."""
        return is_irreducible(self.p, self.spec.modulus)


class ProductRing(Ring):
    """Direct product; code is mixed-radix with the first factor most significant."""

    def __init__(self, spec: Product, factors: Sequence[Ring]):
        super().__init__(spec)
        self.factors = tuple(factors)
        sizes = [f.cardinality for f in self.factors]
        strides = []
        s = 1
        for size in reversed(sizes):
            strides.append(s)
            s *= size
        self._sizes = np.array(sizes, dtype=np.int64)
        self._strides = np.array(list(reversed(strides)), dtype=np.int64)

    @property
    def one_code(self) -> int:
        return int(sum(f.one_code * int(s) for f, s in zip(self.factors, self._strides)))

    def split_codes(self, a) -> list[np.ndarray]:
        a = _as_codes(a)
        return [(a // int(s)) % int(n) for s, n in zip(self._strides, self._sizes)]

    def join_codes(self, parts: Iterable) -> np.ndarray:
        total = None
        for part, s in zip(parts, self._strides):
            term = _as_codes(part) * int(s)
            total = term if total is None else total + term
        return total

    def _lift(self, op, *args):
        splits = [self.split_codes(x) for x in args]
        return self.join_codes(
            getattr(f, op)(*(sp[i] for sp in splits)) for i, f in enumerate(self.factors)
        )

    def add_codes(self, a, b):
        return self._lift("add_codes", a, b)

    def neg_codes(self, a):
        return self._lift("neg_codes", a)

    def mul_codes(self, a, b):
        return self._lift("mul_codes", a, b)

    def decode(self, code):
        parts = self.split_codes(int(code))
        return tuple(f.decode(int(c)) for f, c in zip(self.factors, parts))

    def encode(self, value) -> int:
        value = tuple(value)
        if len(value) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} components")
        return int(self.join_codes(f.encode(v) for f, v in zip(self.factors, value)))

    def label(self, code):
        parts = self.split_codes(int(code))
        return "(" + ",".join(f.label(int(c)) for f, c in zip(self.factors, parts)) + ")"


def make_ring(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> Ring:
    """Validate ``spec`` and return a ring handle for it."""
    validate_spec(spec, cap)
    return _build(spec)


def _build(spec: RingSpec) -> Ring:
    if isinstance(spec, Modular):
        return ModularRing(spec)
    if isinstance(spec, PolyQuotient):
        return PolyQuotientRing(spec)
    return ProductRing(spec, [_build(f) for f in spec.factors])


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Element:
    """A ring element: a ring handle plus the element's code."""

    ring: Ring
    code: int = field()

    def __eq__(self, other):
        return (
            isinstance(other, Element) and self.code == other.code and self.ring == other.ring
        )

    def __hash__(self):
        return hash((self.ring, self.code))

    def __lt__(self, other: "Element"):
        self._check(other)
        return self.code < other.code

    @property
    def value(self):
        """Canonical form: residue, coefficient tuple, or tuple of components."""
        return self.ring.decode(self.code)

    def _check(self, other) -> "Element":
        if not isinstance(other, Element):
            return self.ring.element(other)
        if other.ring != self.ring:
            raise MixedRings(f"operands from {self.ring} and {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Element(self.ring, int(self.ring.add_codes(self.code, other.code)))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, int(self.ring.neg_codes(self.code)))

    def __sub__(self, other):
        other = self._check(other)
        return Element(self.ring, int(self.ring.sub_codes(self.code, other.code)))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        return Element(self.ring, int(self.ring.mul_codes(self.code, other.code)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return Element(self.ring, int(self.ring.pow_codes(self.code, e)))

    def __str__(self):
        return self.ring.label(self.code)

    def __repr__(self):
        return f"Element({self.ring}, {self})"


def add(a: Element, b: Element) -> Element:
    return a + b


def neg(a: Element) -> Element:
    return -a


def mul(a: Element, b: Element) -> Element:
    return a * b


def power(a: Element, e: int) -> Element:
    return a**e


def elements(ring: Ring) -> list[Element]:
    return ring.elements()


# ---------------------------------------------------------------------------
# Polynomials over Z_p (coefficients highest degree first, as in specs)
# ---------------------------------------------------------------------------


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by b over Z_p; both low-degree-first, b with nonzero top."""
    a = [c % p for c in a]
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = (a[-1] * inv) % p
        if c:
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bc) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(p: int, modulus_high_first: Sequence[int]) -> bool:
    f = [c % p for c in reversed(modulus_high_first)]
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for tail in range(p**d):
            g = [(tail // p**i) % p for i in range(d)] + [1]
            if not _poly_mod(f, g, p):
                return False
    return True


def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible polynomial of degree k over Z_p (high first)."""
    for tail in range(p**k):
        low = [(tail // p**i) % p for i in range(k)]
        cand = (1,) + tuple(reversed(low))
        if k == 1 or low[0] != 0:
            if is_irreducible(p, cand):
                return cand
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def galois_field(q: int) -> PolyQuotient:
    """Spec for F_q as Z_p[x]/(f) with the least monic irreducible f."""
    p, k = _prime_power(q)
    return PolyQuotient(p, first_irreducible(p, k))


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise InvalidSpec(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise InvalidSpec(f"{q} is not a prime power")
    return p, k
