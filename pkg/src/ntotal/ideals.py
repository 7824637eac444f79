"""Zero-divisors, units, ideals and nth-power classes of a finite ring.

Subsets of a ring are handled internally as boolean masks indexed by element
code; the public functions accept and return element collections.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable

import numpy as np

from .rings import (
    Element,
    ModularRing,
    PolyQuotientRing,
    ProductRing,
    Ring,
    _poly_mod,
)

_CHUNK = 1 << 22  # max entries of a temporary pair array


class NotAnIdeal(ValueError):
    """Raised when an operation needs Z(R) to be an ideal and it is not."""


class NotGenerating(ValueError):
    """The zero-divisors generate a proper ideal, so no generator count exists."""


class CapExceeded(ValueError):
    """No generating set of zero-divisors within the search cap."""


class InvariantError(RuntimeError):
    """A counting identity that must hold for finite fields failed."""


def _frozen(mask: np.ndarray) -> np.ndarray:
    mask = np.ascontiguousarray(mask, dtype=bool)
    mask.setflags(write=False)
    return mask


def _codes(ring: Ring, items: Iterable) -> np.ndarray:
    out = []
    for x in items:
        if isinstance(x, Element):
            if x.ring != ring:
                raise ValueError(f"{x!r} is not an element of {ring}")
            out.append(x.code)
        else:
            out.append(ring.encode(x))
    return np.array(sorted(set(out)), dtype=np.int64)


def _mask(ring: Ring, codes: np.ndarray) -> np.ndarray:
    m = np.zeros(ring.cardinality, dtype=bool)
    m[codes] = True
    return m


def _elements(ring: Ring, mask: np.ndarray) -> frozenset[Element]:
    return frozenset(Element(ring, int(c)) for c in np.flatnonzero(mask))


def _row_chunks(rows: int, cols: int):
    step = max(1, _CHUNK // max(cols, 1))
    for start in range(0, rows, step):
        yield slice(start, min(rows, start + step))


# ---------------------------------------------------------------------------
# Zero-divisors and units
# ---------------------------------------------------------------------------


def zero_divisor_mask_scan(ring: Ring) -> np.ndarray:
    """a is a zero-divisor iff a = 0 or a*b = 0 for some b != 0 (full scan)."""
    codes = ring.all_codes()
    nonzero = codes[1:]
    mask = np.zeros(ring.cardinality, dtype=bool)
    for sl in _row_chunks(len(codes), len(nonzero)):
        prod = ring.mul_codes(codes[sl, None], nonzero[None, :])
        mask[sl] = (prod == ring.zero_code).any(axis=1)
    mask[ring.zero_code] = True
    return mask


def unit_mask_scan(ring: Ring) -> np.ndarray:
    """a is a unit iff a*b = 1 for some b (full scan)."""
    codes = ring.all_codes()
    mask = np.zeros(ring.cardinality, dtype=bool)
    for sl in _row_chunks(len(codes), len(codes)):
        prod = ring.mul_codes(codes[sl, None], codes[None, :])
        mask[sl] = (prod == ring.one_code).any(axis=1)
    return mask


def unit_mask_fast(ring: Ring) -> np.ndarray:
    """Units by structure: gcd with the modulus, or componentwise."""
    if isinstance(ring, ModularRing):
        return np.gcd(ring.all_codes(), ring.m) == 1
    if isinstance(ring, ProductRing):
        parts = ring.split_codes(ring.all_codes())
        mask = np.ones(ring.cardinality, dtype=bool)
        for f, part in zip(ring.factors, parts):
            mask &= unit_mask_fast(f)[part]
        return mask
    if isinstance(ring, PolyQuotientRing):
        return _poly_unit_mask(ring)
    raise TypeError(f"unsupported ring {ring!r}")


def _poly_unit_mask(ring: PolyQuotientRing) -> np.ndarray:
    p = ring.p
    f = [c % p for c in reversed(ring.spec.modulus)]
    mask = np.zeros(ring.cardinality, dtype=bool)
    for code in range(1, ring.cardinality):
        a = list(reversed(ring.decode(code)))
        while a and a[-1] == 0:
            a.pop()
        x, y = f, a
        while y:
            x, y = y, _poly_mod(x, y, p)
        mask[code] = len(x) == 1
    return mask


def nilpotent_mask(ring: Ring) -> np.ndarray:
    """a is nilpotent iff a^(2^t) = 0 once 2^t >= |R|."""
    x = ring.all_codes()
    reach = 1
    while reach < ring.cardinality:
        x = ring.mul_codes(x, x)
        reach *= 2
    return x == ring.zero_code


@dataclass(frozen=True)
class ZeroDivisorProfile:
    """Zero-divisor structure of a ring.  0 counts as a zero-divisor."""

    ring: Ring
    zero_divisors: frozenset[Element]
    regulars: frozenset[Element]
    nilpotents: frozenset[Element]
    units: frozenset[Element]
    zr_is_ideal: bool
    alpha: int
    beta: int | None
    zd_mask: np.ndarray = field(repr=False, compare=False)
    unit_mask: np.ndarray = field(repr=False, compare=False)
    nil_mask: np.ndarray = field(repr=False, compare=False)

    @property
    def cardinality(self) -> int:
        return self.ring.cardinality

    def to_dict(self) -> dict:
        return {
            "ring": str(self.ring),
            "cardinality": self.cardinality,
            "alpha": self.alpha,
            "beta": self.beta,
            "zr_is_ideal": self.zr_is_ideal,
            "zero_divisors": [str(e) for e in sorted(self.zero_divisors)],
            "regulars": [str(e) for e in sorted(self.regulars)],
        }

    def describe(self) -> str:
        lines = [
            f"ring: {self.ring}",
            f"cardinality: {self.cardinality}",
            f"zero-divisors ({self.alpha}): {_list(self.zero_divisors)}",
            f"regular elements ({len(self.regulars)}): {_list(self.regulars)}",
            f"nilpotents ({len(self.nilpotents)}): {_list(self.nilpotents)}",
            f"Z(R) is an ideal: {'yes' if self.zr_is_ideal else 'no'}",
            f"alpha: {self.alpha}",
        ]
        if self.beta is not None:
            lines.append(f"beta: {self.beta}")
        return "\n".join(lines)


def _list(items: frozenset[Element], limit: int = 64) -> str:
    ordered = sorted(items)
    text = ", ".join(str(e) for e in ordered[:limit])
    if len(ordered) > limit:
        text += f", ... ({len(ordered) - limit} more)"
    return "{" + text + "}"


@lru_cache(maxsize=512)
def zero_divisor_profile(ring: Ring, method: str = "fast") -> ZeroDivisorProfile:
    """Compute Z(R), Reg(R), Nil(R), U(R) and the ideal verdict.

    ``method="scan"`` decides every membership from the multiplication
    table; ``"fast"`` uses gcd and componentwise rules.  Both must agree.
    """
    if method == "scan":
        zd = zero_divisor_mask_scan(ring)
        units = unit_mask_scan(ring)
    elif method == "fast":
        units = unit_mask_fast(ring)
        zd = ~units
    else:
        raise ValueError(f"unknown method {method!r}")
    nil = nilpotent_mask(ring)
    ideal = _is_ideal_mask(ring, zd)
    alpha = int(zd.sum())
    beta = ring.cardinality // alpha if ideal else None
    return ZeroDivisorProfile(
        ring=ring,
        zero_divisors=_elements(ring, zd),
        regulars=_elements(ring, ~zd),
        nilpotents=_elements(ring, nil),
        units=_elements(ring, units),
        zr_is_ideal=ideal,
        alpha=alpha,
        beta=beta,
        zd_mask=_frozen(zd),
        unit_mask=_frozen(units),
        nil_mask=_frozen(nil),
    )


# ---------------------------------------------------------------------------
# Ideals
# ---------------------------------------------------------------------------


def _is_ideal_mask(ring: Ring, mask: np.ndarray) -> bool:
    if not mask[ring.zero_code]:
        return False
    members = np.flatnonzero(mask)
    if not mask[ring.neg_codes(members)].all():
        return False
    for sl in _row_chunks(len(members), len(members)):
        if not mask[ring.add_codes(members[sl, None], members[None, :])].all():
            return False
    codes = ring.all_codes()
    for sl in _row_chunks(len(codes), len(members)):
        if not mask[ring.mul_codes(codes[sl, None], members[None, :])].all():
            return False
    return True


def is_ideal(ring: Ring, subset: Iterable) -> bool:
    """True iff subset contains 0 and is closed under +, negation and R-scaling."""
    return _is_ideal_mask(ring, _mask(ring, _codes(ring, subset)))


def principal_ideal_mask(ring: Ring, g: int) -> np.ndarray:
    return _mask(ring, ring.mul_codes(ring.all_codes(), g))


def _ideal_sum(ring: Ring, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Mask of I + J for ideals given as masks."""
    ia, ib = np.flatnonzero(a), np.flatnonzero(b)
    out = np.zeros(ring.cardinality, dtype=bool)
    for sl in _row_chunks(len(ia), len(ib)):
        out[ring.add_codes(ia[sl, None], ib[None, :]).ravel()] = True
    return out


def _generated_mask(ring: Ring, gens: Iterable[int]) -> np.ndarray:
    # Additive closure of {r*g}: each {r*g : r in R} is already an ideal,
    # so the closure is the sum of the principal ideals.
    total = np.zeros(ring.cardinality, dtype=bool)
    total[ring.zero_code] = True
    for g in gens:
        if total[g]:
            continue
        total = _ideal_sum(ring, total, principal_ideal_mask(ring, int(g)))
    return total


def ideal_generated(ring: Ring, generators: Iterable) -> frozenset[Element]:
    """Smallest ideal of ``ring`` containing ``generators``."""
    codes = _codes(ring, generators)
    if len(codes) == 0:
        raise ValueError("at least one generator is required")
    return _elements(ring, _generated_mask(ring, codes))


def zd_generates_ring(ring: Ring) -> bool:
    """Whether (Z(R)) = R."""
    prof = zero_divisor_profile(ring)
    return bool(_generated_mask(ring, np.flatnonzero(prof.zd_mask)).all())


def min_zd_generators(ring: Ring, cap: int = 6) -> int:
    """Least m such that some m zero-divisors generate R.

    Only maximal principal ideals among those of the zero-divisors are
    combined: swapping a generator for one with a larger principal ideal
    never shrinks the generated ideal, so the minimum is unchanged.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    prof = zero_divisor_profile(ring)
    zds = np.flatnonzero(prof.zd_mask)
    if not _generated_mask(ring, zds).all():
        raise NotGenerating(f"zero-divisors of {ring} generate a proper ideal")

    seen: dict[bytes, np.ndarray] = {}
    for z in zds:
        if z == ring.zero_code:
            continue
        m = principal_ideal_mask(ring, int(z))
        seen.setdefault(m.tobytes(), m)
    ideals = list(seen.values())
    maximal = [
        a for i, a in enumerate(ideals)
        if not any(j != i and (b.sum() > a.sum()) and not (a & ~b).any()
                   for j, b in enumerate(ideals))
    ]
    for size in range(1, cap + 1):
        for combo in combinations(maximal, size):
            total = combo[0]
            for b in combo[1:]:
                total = _ideal_sum(ring, total, b)
            if total.all():
                return size
    raise CapExceeded(f"no generating set of <= {cap} zero-divisors in {ring}")


# ---------------------------------------------------------------------------
# The case Z(R) is an ideal
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdealCaseParams:
    alpha: int
    beta: int
    n: int
    gamma: int
    d: int

    @property
    def g(self) -> int:
        """gcd(n, beta - 1)."""
        return gcd(self.n, self.beta - 1)


def ideal_case_params(ring: Ring, n: int) -> IdealCaseParams:
    if n < 1:
        raise ValueError("n must be >= 1")
    prof = zero_divisor_profile(ring)
    if not prof.zr_is_ideal:
        raise NotAnIdeal(f"Z({ring}) is not an ideal")
    alpha = prof.alpha
    beta = ring.cardinality // alpha
    g = gcd(n, beta - 1)
    return IdealCaseParams(alpha=alpha, beta=beta, n=n, gamma=alpha * g, d=(beta - 1) // g)


@dataclass(frozen=True)
class NthPowerClasses:
    """nth powers in the unit group of F = R/Z(R), cosets named by least element.

    ``fibers[a]`` lists the cosets w in F* with w^n = a, for every a in S_n.
    """

    ring: Ring
    n: int
    coset_of: np.ndarray = field(repr=False, compare=False)
    fibers: dict[Element, tuple[Element, ...]]

    @property
    def powers(self) -> tuple[Element, ...]:
        return tuple(sorted(self.fibers))

    def coset(self, rep: Element) -> frozenset[Element]:
        return _elements(self.ring, self.coset_of == rep.code)

    def union(self, a: Element) -> frozenset[Element]:
        """All elements of R lying in a coset of the fiber over a."""
        reps = np.array([w.code for w in self.fibers[a]], dtype=np.int64)
        return _elements(self.ring, np.isin(self.coset_of, reps))


def coset_labels(ring: Ring) -> np.ndarray:
    """Map each code to the least code of its coset x + Z(R)."""
    prof = zero_divisor_profile(ring)
    if not prof.zr_is_ideal:
        raise NotAnIdeal(f"Z({ring}) is not an ideal")
    zds = np.flatnonzero(prof.zd_mask)
    labels = np.full(ring.cardinality, -1, dtype=np.int64)
    for x in range(ring.cardinality):
        if labels[x] < 0:
            labels[ring.add_codes(x, zds)] = x
    return labels


def nth_power_classes(ring: Ring, n: int) -> NthPowerClasses:
    if n < 1:
        raise ValueError("n must be >= 1")
    labels = coset_labels(ring)
    reps = np.unique(labels)
    units = reps[reps != labels[ring.zero_code]]
    images = labels[ring.pow_codes(units, n)]
    fibers: dict[Element, tuple[Element, ...]] = {}
    for a in np.unique(images):
        fibers[Element(ring, int(a))] = tuple(Element(ring, int(w)) for w in units[images == a])

    q1 = len(units)
    g = gcd(n, q1)
    if len(fibers) != q1 // g:
        raise InvariantError(f"|S_{n}| = {len(fibers)}, expected {q1 // g}")
    if any(len(f) != g for f in fibers.values()):
        raise InvariantError(f"fiber sizes in {ring} differ from gcd({n}, {q1}) = {g}")
    labels.setflags(write=False)
    return NthPowerClasses(ring=ring, n=n, coset_of=labels, fibers=fibers)


def find_nth_root_of_minus_one(ring: Ring, n: int) -> Element | None:
    """First element u in enumeration order with u^n = -1."""
    target = int(ring.neg_codes(ring.one_code))
    hits = np.flatnonzero(ring.pow_codes(ring.all_codes(), n) == target)
    return Element(ring, int(hits[0])) if len(hits) else None
